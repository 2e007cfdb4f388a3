#!/usr/bin/env python3
"""Cospectral structure of the catalog up to a vertex bound: the classes of
instances with equal nonzero spectrum, and whether each instance without
isolated vertices is determined by its spectrum."""

import argparse
from dataclasses import dataclass

from hspectra.cospectral import is_ds, nonzero_spectrum_class
from hspectra.families import construct, instances_up_to


@dataclass
class Config:
    max_n: int = 12
    non_ds_only: bool = False


def run(cfg: Config) -> None:
    print("# classes with more than one member")
    seen = set()
    for f in instances_up_to(cfg.max_n):
        cls = tuple(nonzero_spectrum_class(f))
        if len(cls) > 1 and cls not in seen:
            seen.add(cls)
            print("  " + "  ".join(str(g) for g in cls))
    print("\n# verdicts")
    for f in instances_up_to(cfg.max_n):
        g = construct(f)
        if g.isolated_vertices():
            continue
        v = is_ds(g)
        if cfg.non_ds_only and v.is_ds:
            continue
        mates = ", ".join(m.description for m in v.mates) or "-"
        print(f"{str(f):<10} n={g.n:<3} ds={str(v.is_ds).lower():<5} {v.reason:<17} mates: {mates}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--non-ds-only", action="store_true")
    args = ap.parse_args()
    run(Config(args.max_n, args.non_ds_only))


if __name__ == "__main__":
    main()
