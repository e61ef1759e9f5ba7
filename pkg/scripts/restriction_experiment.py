"""Restriction of H^2 along every subgroup of a few abelian p-groups.

For each subgroup F of G (enumerated from generator rows, deduplicated by
element set) prints the rank of symmetric and full restriction, the target
dimensions, the rank of T mod p and whether T agrees with the cohomological
restriction on parameter bases. Usage::

    python3 scripts/restriction_experiment.py
    python3 scripts/restriction_experiment.py --groups 2:4,2 --max-rows 1
"""

import argparse
import itertools
import time
from dataclasses import dataclass, field

from hopfsmooth.cleft import SubgroupError, compare_group_restriction, normalize_subgroup_generators
from hopfsmooth.cohomology import restriction_map
from hopfsmooth.exactla import Field
from hopfsmooth.hopf import GroupData, SubgroupData, hopf_subalgebra_from_subgroup


@dataclass
class Config:
    groups: list = field(default_factory=lambda: ["2:4,2", "2:8,2", "3:9,3"])
    max_rows: int = 2
    full: bool = True


def parse_args() -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="+", default=Config().groups, help="entries p:o1,o2,...")
    ap.add_argument("--max-rows", type=int, default=2, help="largest number of subgroup generators")
    ap.add_argument("--no-full", action="store_true")
    a = ap.parse_args()
    return Config(a.groups, a.max_rows, not a.no_full)


def subgroup_elements(g: GroupData, rows) -> frozenset:
    out = {g.reduce([0] * g.q)}
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for r in rows:
            y = g.reduce([a + b for a, b in zip(x, r)])
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


def subgroups(g: GroupData, max_rows: int):
    """One valid generator list per subgroup (nontrivial, independent cyclic generators)."""
    seen = set()
    nonzero = [e for e in g.elements() if any(e)]
    for r in range(1, max_rows + 1):
        for rows in itertools.combinations(nonzero, r):
            els = subgroup_elements(g, rows)
            if els in seen:
                continue
            sub = SubgroupData(tuple(tuple(x) for x in rows))
            try:
                normalize_subgroup_generators(g, sub)
            except SubgroupError:
                continue
            seen.add(els)
            yield sub


def main(cfg: Config) -> None:
    for text in cfg.groups:
        p, orders = text.split(":")
        g = GroupData(tuple(int(o) for o in orders.split(",")))
        F = Field(int(p))
        print(f"G = {list(g.orders)} over F_{p}")
        print(f"  {'subgroup':<14} {'|F|':>4} {'sym':>7} {'full':>7} {'rkT':>4} {'T ok':>5} {'sec':>6}")
        for sub in subgroups(g, cfg.max_rows):
            t0 = time.perf_counter()
            cmp = compare_group_restriction(g, F, sub)
            sym = cmp.restriction
            size = len(subgroup_elements(g, sub.rows))
            if cfg.full:
                full = restriction_map(hopf_subalgebra_from_subgroup(g, F, sub), "full")
                fcol = f"{full.rank}/{full.target_dim}"
            else:
                fcol = "-"
            dt = time.perf_counter() - t0
            rows = ";".join(",".join(str(v) for v in r) for r in sub.rows)
            scol = f"{sym.rank}/{sym.target_dim}"
            print(f"  {rows:<14} {size:>4} {scol:>7} {fcol:>7} {cmp.T_rank:>4} "
                  f"{str(cmp.agree):>5} {dt:6.2f}")


if __name__ == "__main__":
    main(parse_args())
