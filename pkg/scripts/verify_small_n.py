#!/usr/bin/env python3
"""Exhaustive check over all graphs up to n vertices: membership by
rank(A^2 + 2A) against the residual degree of the characteristic polynomial,
a catalog explanation for every member, and the cospectral-pair tally.

    python scripts/verify_small_n.py --max-n 7
    python scripts/verify_small_n.py --max-n 8 --long --threads 4
    python scripts/verify_small_n.py --max-n 10 --input graphs.g6
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from hspectra.harness import decompose, h_graphs, verify_classification


@dataclass
class Config:
    max_n: int = 7
    long: bool = False
    threads: int | None = None
    input: str | None = None
    list_members: bool = False
    json_out: str | None = None


def run(cfg: Config) -> int:
    t0 = time.perf_counter()
    summary = verify_classification(cfg.max_n, input_path=cfg.input, allow_long=cfg.long,
                                    threads=cfg.threads)
    print(f"{'n':>2} {'graphs':>7} {'in H':>5} {'in Hprime':>9} {'pairs':>5} {'predicted':>9} {'fail':>4}")
    for lv in summary.levels:
        print(f"{lv.n:>2} {lv.scanned:>7} {lv.in_h:>5} {lv.in_h_prime:>9} {lv.cospectral_pairs:>5} "
              f"{lv.predicted_cospectral_pairs:>9} {lv.failures:>4}")
        for d in lv.failure_details:
            print(f"   ! {d}")
        if cfg.list_members and cfg.input is None:
            for g in h_graphs(lv.n, cfg.long):
                print(f"     {decompose(g)}")
    print(f"# failures: {summary.failures}   ({time.perf_counter() - t0:.1f}s)")
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump({"config": asdict(cfg), **summary.to_dict()}, fh, indent=2)
    return 2 if summary.failures else 0


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--long", action="store_true", help="allow n = 8 built-in enumeration")
    ap.add_argument("--threads", type=int)
    ap.add_argument("--input", help="graph6 file instead of built-in enumeration")
    ap.add_argument("--list-members", action="store_true", help="print each member of H")
    ap.add_argument("--json", dest="json_out", help="write the summary here")
    args = ap.parse_args()
    raise SystemExit(run(Config(**vars(args))))


if __name__ == "__main__":
    main()
