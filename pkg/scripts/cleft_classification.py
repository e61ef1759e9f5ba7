"""Classify A_a extensions of kG by their cocycle classes.

Builds A_a for every a in F_p^q, extracts the cocycle through the section,
and prints its parameters and coordinates in H^2_s(kG, k). Distinct a give
distinct classes and every class occurs. Usage::

    python3 scripts/cleft_classification.py
    python3 scripts/cleft_classification.py --p 3 --orders 3,3
"""

import argparse
import itertools
from dataclasses import dataclass

from hopfsmooth.cleft import build_A_a, extract_cocycle, group_cocycle_parameters
from hopfsmooth.cohomology import sym_second_cohomology
from hopfsmooth.exactla import Field
from hopfsmooth.hopf import GroupData, group_hopf


@dataclass
class Config:
    p: int = 2
    orders: tuple = (4, 2)


def parse_args() -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--orders", default="4,2")
    a = ap.parse_args()
    return Config(a.p, tuple(int(o) for o in a.orders.split(",")))


def main(cfg: Config) -> None:
    g = GroupData(cfg.orders)
    F = Field(cfg.p)
    h = group_hopf(g, F)
    H = sym_second_cohomology(h)
    print(f"G = {list(g.orders)} over F_{cfg.p}: dim H^2_s = {H.dim}")
    classes = set()
    for a in itertools.product(range(cfg.p), repeat=g.q):
        e = build_A_a(g, a, cfg.p)
        s = extract_cocycle(e)
        params = [int(x) for x in group_cocycle_parameters(h, g, s)]
        coords = tuple(int(x) for x in H.coordinates(s.vector))
        classes.add(coords)
        print(f"  a={list(a)}  valid={e.is_valid()}  parameters={params}  class={list(coords)}")
    print(f"{len(classes)} distinct classes out of {cfg.p ** H.dim}")


if __name__ == "__main__":
    main(parse_args())
