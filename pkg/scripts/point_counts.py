"""Empirical point counts of t-form curves: affine points, E00, projective points.

Prints a table per prime; the projective count is always the affine count plus
the four axis points of the second chart, and E00 is the affine count minus four.
"""

import argparse

from sympy import primerange

from edwardsproof.curve import HypothesisViolation, ProjParams
from edwardsproof.oracle import point_counts


def main(max_p: int):
    print(f"{'p':>4s} {'t':>4s} {'affine':>7s} {'e00':>5s} {'proj':>5s}")
    for p in primerange(5, max_p + 1):
        for t in range(2, (p + 1) // 2):
            try:
                params = ProjParams.make(p, t)
            except HypothesisViolation:
                continue
            n = point_counts(params)
            assert n["projective"] == n["affine"] + 4 and n["e00"] == n["affine"] - 4
            print(f"{p:4d} {t:4d} {n['affine']:7d} {n['e00']:5d} {n['projective']:5d}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=31)
    raise SystemExit(main(ap.parse_args().max_p))
