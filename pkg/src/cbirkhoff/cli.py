"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 a structural check failed,
3 a size guard was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .cambrian import (c_sorting_passes, c_sorting_word, heap_grid, is_c_singleton,
                       is_c_sortable, longest_heap, singletons)
from .coxeter import CoxeterElement, all_coxeter_elements, parse_coxeter, tamari
from .errors import GuardExceeded, TheoremViolation
from .group import Permutation, Word, permutation_matrix
from .heap import Heap
from .polytope import normalized_volume, ideal_cloud_probe, reduced_words
from .projection import project, projection_indices
from .relations import all_relations, independent_relation_set, relation_rank
from .transfer import compute_U, verify_a_sequence_identity, verify_main_theorem

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _coxeter(args) -> CoxeterElement:
    if args.n is None:
        raise UsageError("--n is required")
    _guard(args, args.n)
    return parse_coxeter(args.c, args.n) if args.c else tamari(args.n)


def _guard(args, n: int, sweep: bool = False):
    limit = args.guard if args.guard is not None else (6 if sweep else 8)
    if n > limit:
        raise GuardExceeded(f"n={n} exceeds guard {limit}; raise it with --guard")


def _perm(args) -> Permutation:
    if not args.perm:
        raise UsageError("--perm is required")
    return Permutation.parse(args.perm)


def _word(args) -> Word:
    if not args.word:
        raise UsageError("--word is required")
    letters = Word.parse(args.word, 99).letters
    n = args.n if args.n is not None else max(letters, default=1)
    _guard(args, n)
    return Word(n, letters)


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def cmd_singletons(args) -> int:
    c = _coxeter(args)
    sing = singletons(c, rank_guard=max(c.n, 1))
    perms = [str(s.perm) for s in sing]
    _emit(args, {"c": str(c), "n": c.n, "count": len(perms), "singletons": perms},
          "\n".join(perms))
    return EXIT_OK


def cmd_heap(args) -> int:
    if args.word:
        h = Heap(_word(args))
    elif args.grid:
        h = heap_grid(_coxeter(args))
    else:
        h = longest_heap(_coxeter(args))
    data = h.to_json()
    text = f"word {h.word}\n" + "\n".join(f"{x} < {y}" for x, y in data["covers"])
    _emit(args, data, text)
    return EXIT_OK


def cmd_sortword(args) -> int:
    c, w = _coxeter(args), _perm(args)
    passes = c_sorting_passes(c, w)
    payload = {"c": str(c), "perm": str(w), "word": str(c_sorting_word(c, w)),
               "passes": passes, "sortable": is_c_sortable(c, w),
               "singleton": is_c_singleton(c, w)}
    text = "|".join("".join(map(str, b)) for b in passes) or "(empty)"
    _emit(args, payload, text)
    return EXIT_OK


def _relation_json(rel) -> dict:
    return {"tag": rel.tag, "params": list(rel.params), "rhs": int(rel.rhs),
            "entries": sorted([list(e) for e in rel.coeffs])}


def _check_relations(c: CoxeterElement) -> dict:
    rels = all_relations(c)
    bad = []
    for s in singletons(c, rank_guard=c.n):
        x = permutation_matrix(s.perm)
        bad += [(str(s.perm), r.tag, list(r.params)) for r in rels if not r.holds(x)]
    ind = independent_relation_set(c)
    rk = relation_rank(ind, c.n)
    size = (c.n + 1) ** 2
    return {"c": str(c), "relations": len(rels), "violations": bad,
            "independent": len(ind), "rank": rk, "dimension": size - rk,
            "ok": not bad and rk == len(ind) and size - rk == c.n * (c.n + 1) // 2}


def cmd_relations(args) -> int:
    if args.sweep:
        _guard(args, args.n, sweep=True)
        reports = _map(args, _check_relations, all_coxeter_elements(args.n))
        _emit(args, reports, "\n".join(f"{r['c']}: rank {r['rank']}, dim {r['dimension']}, "
                                       f"{'ok' if r['ok'] else 'FAIL'}" for r in reports))
        return EXIT_OK if all(r["ok"] for r in reports) else EXIT_VIOLATION
    c = _coxeter(args)
    rels = independent_relation_set(c) if args.independent else all_relations(c)
    _emit(args, [_relation_json(r) for r in rels],
          "\n".join(f"{r.tag}{list(r.params)}: {sorted(r.coeffs)} = {r.rhs}" for r in rels))
    return EXIT_OK


def cmd_project(args) -> int:
    c = _coxeter(args)
    idx = projection_indices(c)
    if args.perm:
        vec = project(c, permutation_matrix(_perm(args)))
        _emit(args, {"indices": [list(e) for e in idx], "vector": vec},
              " ".join(map(str, vec)))
    else:
        _emit(args, {"indices": [list(e) for e in idx]},
              "\n".join(f"{k}: {e}" for k, e in enumerate(idx, 1)))
    return EXIT_OK


def cmd_umatrix(args) -> int:
    u = compute_U(_coxeter(args))
    _emit(args, {"U": u}, "\n".join(" ".join(map(str, row)) for row in u))
    return EXIT_OK


def _certificate(c: CoxeterElement) -> dict:
    cert = verify_main_theorem(c, strict=False)
    out = cert.to_json()
    if c.n <= 5:
        out["a_sequence_ok"] = all(verify_a_sequence_identity(c, s.perm)
                                   for s in singletons(c, rank_guard=c.n))
        out["ok"] = out["ok"] and out["a_sequence_ok"]
    return out


def _map(args, fn, items):
    if args.parallel > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def cmd_verify(args) -> int:
    if args.sweep:
        if args.n is None:
            raise UsageError("--n is required")
        _guard(args, args.n, sweep=True)
        certs = _map(args, _certificate, all_coxeter_elements(args.n))
    else:
        certs = [_certificate(_coxeter(args))]
    _emit(args, certs if args.sweep else certs[0],
          "\n".join(f"{x['c']}: N={x['N']} singletons={x['singletons']} "
                    f"volume={x['volume']} {'ok' if x['ok'] else 'FAIL'}" for x in certs))
    return EXIT_OK if all(x["ok"] for x in certs) else EXIT_VIOLATION


def cmd_volume(args) -> int:
    h = Heap(_word(args)) if args.word else heap_grid(_coxeter(args))
    vol = normalized_volume(h)
    _emit(args, {"volume": vol}, str(vol))
    return EXIT_OK


def cmd_q81(args) -> int:
    if args.all_reduced:
        if args.n is None:
            raise UsageError("--n is required with --all-reduced")
        _guard(args, args.n, sweep=True)
        words = reduced_words(Permutation.longest(args.n))
    else:
        words = [_word(args)]
    reports = [ideal_cloud_probe(w).to_json() for w in words]
    if args.all_reduced and not args.verbose:
        reports = [r for r in reports if r["verdict"] == "counterexample"]
    payload = reports if args.all_reduced else reports[0]
    _emit(args, payload, "\n".join(f"{r['word']}: ideals={r['ideals']} "
                                   f"dim {r['cloud_dimension']}/{r['heap_dimension']} "
                                   f"{r['verdict']}" for r in reports))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    _guard(args, args.n, sweep=True)
    elements = all_coxeter_elements(args.n)
    certs = _map(args, _certificate, elements)
    rels = _map(args, _check_relations, elements)
    ok = all(x["ok"] for x in certs) and all(r["ok"] for r in rels)
    payload = {"n": args.n, "coxeter_elements": len(elements), "ok": ok,
               "certificates": certs, "relations": rels}
    _emit(args, payload, f"n={args.n}: {len(elements)} Coxeter elements, "
                         f"{'all checks passed' if ok else 'FAILURES'}")
    return EXIT_OK if ok else EXIT_VIOLATION


COMMANDS = {
    "singletons": (cmd_singletons, "list the c-singletons"),
    "heap": (cmd_heap, "heap of a word, or of the c-sorting word of w0"),
    "sortword": (cmd_sortword, "c-sorting word of a permutation"),
    "relations": (cmd_relations, "affine relations, or check them with --sweep"),
    "project": (cmd_project, "projection coordinates"),
    "umatrix": (cmd_umatrix, "the transfer matrix U_c"),
    "verify": (cmd_verify, "check the transfer theorem for one c or all c"),
    "volume": (cmd_volume, "normalized volume of an order polytope"),
    "q81": (cmd_q81, "compare heap order polytope and permutation cloud"),
    "sweep": (cmd_sweep, "run every check for all c of a given rank"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cbirkhoff", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, help="rank (permutations of [n+1])")
        p.add_argument("--c", help="Coxeter element word, e.g. 132 or 1,4,3,2,5,7,6,9,8,10")
        p.add_argument("--word", help="a word in the simple transpositions")
        p.add_argument("--perm", help="a permutation in one-line notation")
        p.add_argument("--format", choices=["json", "text"], default="text")
        p.add_argument("--parallel", type=int, default=1, metavar="K",
                       help="worker processes for sweeps (default 1)")
        p.add_argument("--guard", type=int, help="largest n allowed")
        p.add_argument("--sweep", action="store_true", help="run over all Coxeter elements")
        if name == "heap":
            p.add_argument("--grid", action="store_true", help="use the grid heap with coordinates")
        if name == "relations":
            p.add_argument("--independent", action="store_true")
        if name == "q81":
            p.add_argument("--all-reduced", action="store_true",
                           help="probe every reduced word of w0")
            p.add_argument("--verbose", action="store_true", help="report passing words too")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command][0](args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except TheoremViolation as exc:
        print(f"check failed: {exc} {exc.details}", file=sys.stderr)
        return EXIT_VIOLATION
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
