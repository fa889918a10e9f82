"""Tabulate singleton counts and normalized volumes for every Coxeter element."""

import argparse

from cbirkhoff.experiments import dump, volume_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = volume_table(args.n_max)
    if args.json:
        dump(rows, None)
        return
    print(f"{'n':>2} {'c':>10} {'singletons':>10} {'volume':>12}")
    for r in rows:
        print(f"{r['n']:>2} {r['c']:>10} {r['singletons']:>10} {r['volume']:>12}")


if __name__ == "__main__":
    main()
