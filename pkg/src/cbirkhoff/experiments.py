"""Batch experiments driven by small dataclass configs.

The scripts in ``scripts/`` are thin argparse wrappers around these.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .cambrian import heap_grid, singletons
from .coxeter import CoxeterElement, all_coxeter_elements
from .group import Permutation
from .heap import count_linear_extensions
from .polytope import ideal_cloud_probe, reduced_words
from .transfer import verify_a_sequence_identity, verify_main_theorem


@dataclass
class SweepConfig:
    n_max: int = 6
    a_sequence_max: int = 5
    workers: int = 1


@dataclass
class ReducedWordScanConfig:
    n: int = 4
    keep_passing: bool = False


def _certify(args: tuple[CoxeterElement, bool]) -> dict:
    c, with_a = args
    t = time.perf_counter()
    cert = verify_main_theorem(c, strict=False).to_json()
    if with_a:
        cert["a_sequence_ok"] = all(verify_a_sequence_identity(c, s.perm)
                                    for s in singletons(c))
        cert["ok"] = cert["ok"] and cert["a_sequence_ok"]
    cert["n"] = c.n
    cert["seconds"] = round(time.perf_counter() - t, 4)
    return cert


def run_sweep(cfg: SweepConfig) -> list[dict]:
    tasks = [(c, n <= cfg.a_sequence_max)
             for n in range(1, cfg.n_max + 1) for c in all_coxeter_elements(n)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            return list(pool.map(_certify, tasks))
    return [_certify(t) for t in tasks]


def volume_table(n_max: int) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        for c in all_coxeter_elements(n):
            h = heap_grid(c)
            rows.append({"n": n, "c": str(c), "lower": list(c.lower),
                         "singletons": len(singletons(c)),
                         "volume": count_linear_extensions(h)})
    return rows


def scan_reduced_words(cfg: ReducedWordScanConfig) -> dict:
    words = reduced_words(Permutation.longest(cfg.n))
    reports = [ideal_cloud_probe(w) for w in words]
    flagged = [r.to_json() for r in reports if r.verdict == "counterexample"]
    out = {"config": asdict(cfg), "reduced_words": len(words),
           "counterexamples": flagged}
    if cfg.keep_passing:
        out["passing"] = [r.to_json() for r in reports if r.verdict != "counterexample"]
    return out


def dump(obj, path: str | None):
    text = json.dumps(obj, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
