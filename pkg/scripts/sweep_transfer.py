"""Verify the transfer theorem and a-sequence identities for every Coxeter
element up to a given rank, and report per-element timings."""

import argparse
import sys

from cbirkhoff.experiments import SweepConfig, dump, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--a-sequence-max", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", help="write JSON here instead of stdout")
    args = ap.parse_args()
    certs = run_sweep(SweepConfig(args.n_max, args.a_sequence_max, args.workers))
    dump(certs, args.out)
    failed = [c["c"] for c in certs if not c["ok"]]
    print(f"{len(certs)} Coxeter elements, {len(failed)} failures", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
