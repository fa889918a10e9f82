"""Probe every reduced word of the longest element of A_n, comparing the
heap's order polytope with the cloud of permutation matrices of its ideals."""

import argparse

from cbirkhoff.experiments import ReducedWordScanConfig, dump, scan_reduced_words


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--keep-passing", action="store_true")
    ap.add_argument("--out")
    args = ap.parse_args()
    dump(scan_reduced_words(ReducedWordScanConfig(args.n, args.keep_passing)), args.out)


if __name__ == "__main__":
    main()
