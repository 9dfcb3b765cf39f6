"""Exhaustive oracle sweeps over a grid of small curves, written as JSON lines.

Affine curves take every (c, d) with c = 1 and d a nonsquare; t-form curves
take every admissible t.  Both are limited by --max-p.
"""

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from sympy import primerange

from edwardsproof.curve import AffineParams, HypothesisViolation, ProjParams
from edwardsproof.oracle import affine_suite, projective_suite


@dataclass
class SweepGrid:
    min_p: int = 5
    max_p: int = 23
    out: str = "results/sweeps.jsonl"
    tform: bool = True
    affine: bool = True


def curves(grid: SweepGrid):
    for p in primerange(grid.min_p, grid.max_p + 1):
        if grid.affine:
            for d in range(p):
                params = AffineParams.make(p, 1, d)
                if params.complete:
                    yield params
        if grid.tform:
            for t in range(2, (p + 1) // 2):
                try:
                    yield ProjParams.make(p, t)
                except HypothesisViolation:
                    continue


def main(grid: SweepGrid):
    path = Path(grid.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    failures = 0
    with path.open("w") as fh:
        for params in curves(grid):
            t0 = time.perf_counter()
            res = projective_suite(params) if isinstance(params, ProjParams) else affine_suite(params)
            res["seconds"] = round(time.perf_counter() - t0, 3)
            fh.write(json.dumps(res, default=str) + "\n")
            failures += not res["passed"]
            print(f"{str(params):18s} {res['counts']} {'PASS' if res['passed'] else 'FAIL'} {res['seconds']}s")
    print(f"{failures} failing curves")
    return 1 if failures else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-p", type=int, default=SweepGrid.min_p)
    ap.add_argument("--max-p", type=int, default=SweepGrid.max_p)
    ap.add_argument("--out", default=SweepGrid.out)
    ap.add_argument("--no-tform", action="store_true")
    ap.add_argument("--no-affine", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(SweepGrid(a.min_p, a.max_p, a.out, not a.no_tform, not a.no_affine)))
