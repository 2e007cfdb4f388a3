#!/usr/bin/env python3
"""Table of catalog instances up to a vertex bound: closed-form spectrum,
whether it matches the exact characteristic polynomial, and the largest
Jacobi error against the exact roots."""

import argparse
import time
from dataclasses import dataclass

import numpy as np

from hspectra.exact import graph_char_poly, real_roots
from hspectra.families import construct, instances_up_to, symbolic_spectrum
from hspectra.numeric import graph_eigenvalues


@dataclass
class Config:
    max_n: int = 14
    only: str | None = None   # restrict to one family id, e.g. "G8"


def run(cfg: Config) -> int:
    mismatches = 0
    t0 = time.perf_counter()
    print(f"{'instance':<10} {'n':>3}  {'exact':<5} {'jacobi err':>10}  spectrum")
    for f in instances_up_to(cfg.max_n):
        if cfg.only and f.id != cfg.only.upper():
            continue
        g = construct(f)
        p = graph_char_poly(g)
        spec = symbolic_spectrum(f)
        ok = p.coeffs == spec.expand()
        mismatches += not ok
        err = float(np.max(np.abs(np.array(real_roots(p)) - graph_eigenvalues(g)))) if g.n else 0.0
        print(f"{str(f):<10} {g.n:>3}  {'ok' if ok else 'FAIL':<5} {err:>10.1e}  {spec.text()}")
    print(f"# {mismatches} mismatches, {time.perf_counter() - t0:.2f}s")
    return 1 if mismatches else 0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--only")
    args = ap.parse_args()
    raise SystemExit(run(Config(args.max_n, args.only)))


if __name__ == "__main__":
    main()
