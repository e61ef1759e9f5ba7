"""Decompose local Hopf algebras as truncated polynomial algebras.

For each preset prints the exponents (e_i with T_i^{p^{e_i}} = 0), the
exponents read off from iterated Frobenius ranks, and each generator written
in the preset's monomial labels. Usage::

    python3 scripts/decomposition_demo.py
    python3 scripts/decomposition_demo.py --presets group:F2:8,2 sample1:F3:2:1
"""

import argparse
from dataclasses import dataclass, field

from hopfsmooth.decompose import NotLocalError, decompose_local_hopf, frobenius_exponents
from hopfsmooth.presets import parse_preset

DEFAULT = ["group:F2:4,2", "group:F2:8,2", "group:F3:9,3", "trunc:F2:2,1", "sample1:F2:2:1", "sample1:F2:2:2",
           "sample1:F3:2:1", "group:F2:3"]


@dataclass
class Config:
    presets: list = field(default_factory=lambda: list(DEFAULT))


def parse_args() -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--presets", nargs="+", default=DEFAULT)
    return Config(ap.parse_args().presets)


def show(vec, labels, F) -> str:
    terms = []
    for c, lab in zip(vec, labels):
        if c == 0:
            continue
        c = F.format_scalar(c)
        terms.append(lab if c == "1" else f"{c}*{lab}")
    return " + ".join(terms) or "0"


def main(cfg: Config) -> None:
    for text in cfg.presets:
        h = parse_preset(text)
        try:
            d = decompose_local_hopf(h)
        except NotLocalError as exc:
            print(f"{text}: {exc}")
            continue
        print(f"{text}: exponents {sorted(d.exponents, reverse=True)}, Frobenius ranks give "
              f"{sorted(frobenius_exponents(h), reverse=True)}")
        for i, (g, e) in enumerate(zip(d.generators, d.exponents), start=1):
            print(f"  T{i} (T{i}^{h.field.p}^{e} = 0) -> {show(g, h.alg.labels, h.field)}")


if __name__ == "__main__":
    main(parse_args())
