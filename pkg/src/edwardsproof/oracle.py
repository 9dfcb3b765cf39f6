"""Brute-force checks of the curve groups over small prime fields.

Everything here enumerates: all points, all pairs, all triples.  The sweeps
share no code with the symbolic kernel beyond the field arithmetic, so they
serve as an independent second opinion on the group law.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from . import reduce as _reduce
from .curve import (
    GROUP,
    TAU_RHO,
    AffineParams,
    AffinePoint,
    DeltaVanishes,
    DichotomyResult,
    Inconsistent,
    ProjParams,
    ProjPoint,
    Symmetry,
    add_rule,
    apply_symmetry,
    canonical,
    dichotomy_case,
    group_add,
    identity,
    neg_point,
    on_curve,
    proj_add,
    proj_point,
    representatives,
    rule_applies,
    tau_affine,
)

DEFAULT_CAP = 1000


class CapExceeded(ValueError):
    pass


def _check_cap(params, cap: int):
    if params.field.p > cap:
        raise CapExceeded(f"p = {params.field.p} exceeds the enumeration cap {cap}")


def enumerate_points(params, cap: int = DEFAULT_CAP) -> list[AffinePoint]:
    """All affine points, sorted by (x, y)."""
    _check_cap(params, cap)
    p = params.field.p
    F = params.field
    roots: dict[int, list[int]] = {}
    for v in range(p):
        roots.setdefault(v * v % p, []).append(v)
    c, d = params.c.value, params.d.value
    pts = []
    # x^2 (1 - d y^2) = 1 - c y^2
    for y in range(p):
        y2 = y * y % p
        a = (1 - d * y2) % p
        b = (1 - c * y2) % p
        if a:
            xs = roots.get(b * pow(a, -1, p) % p, [])
        else:
            xs = range(p) if b == 0 else []
        pts.extend(AffinePoint(F(x), F(y)) for x in xs)
    pts.sort(key=lambda P: (P.x.value, P.y.value))
    return pts


def enumerate_proj_points(params: ProjParams, cap: int = DEFAULT_CAP) -> list[ProjPoint]:
    """Canonical projective points: chart 0 for all affine points, chart 1 for axis points."""
    aff = enumerate_points(params, cap)
    return [ProjPoint(P, 0) for P in aff] + [ProjPoint(P, 1) for P in aff if not P.in_e00]


def point_counts(params, cap: int = DEFAULT_CAP) -> dict:
    aff = enumerate_points(params, cap)
    out = {"affine": len(aff), "e00": sum(1 for P in aff if P.in_e00)}
    if isinstance(params, ProjParams):
        out["projective"] = len(enumerate_proj_points(params, cap))
    return out


@dataclass
class AxiomResult:
    passed: bool = True
    checked: int = 0
    counterexample: str | None = None

    def fail(self, text: str):
        if self.passed:
            self.counterexample = text
        self.passed = False


@dataclass
class AxiomSweepReport:
    curve: str
    counts: dict
    axioms: dict[str, AxiomResult] = field(default_factory=dict)
    pairs: int = 0
    triples: int = 0

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms.values())

    def to_dict(self) -> dict:
        return {
            "curve": self.curve,
            "counts": self.counts,
            "pairs": self.pairs,
            "triples": self.triples,
            "status": "PASS" if self.passed else "FAIL",
            "axioms": {
                k: {"status": "PASS" if a.passed else "FAIL", "checked": a.checked, "counterexample": a.counterexample}
                for k, a in self.axioms.items()
            },
        }


def exhaustive_axiom_check(params, add: Callable | None = None, cap: int = DEFAULT_CAP) -> AxiomSweepReport:
    """Closure, identity, inverse and commutativity over all pairs; associativity over all triples.

    ``add`` defaults to the module's total addition; pass another to test it.
    """
    add = add or group_add(params)
    proj = isinstance(params, ProjParams)
    pts = enumerate_proj_points(params, cap) if proj else enumerate_points(params, cap)
    report = AxiomSweepReport(str(params), point_counts(params, cap))
    names = ("closure", "identity", "inverse", "commutativity", "associativity")
    ax = {n: AxiomResult() for n in names}
    report.axioms = ax
    O = identity(params)
    index = {P: k for k, P in enumerate(pts)}
    n = len(pts)
    table: list[list[int | None]] = [[None] * n for _ in range(n)]

    def norm(R):
        return canonical(params, R) if proj else R

    for a, b in itertools.product(range(n), repeat=2):
        P, Q = pts[a], pts[b]
        ax["closure"].checked += 1
        try:
            R = norm(add(P, Q))
        except (DeltaVanishes, Inconsistent, ZeroDivisionError) as exc:
            ax["closure"].fail(f"{P} + {Q} undefined: {exc}")
            continue
        if not on_curve(params, R) or R not in index:
            ax["closure"].fail(f"{P} + {Q} = {R} is not a curve point")
            continue
        table[a][b] = index[R]
    report.pairs = n * n
    o = index[O]
    for a, P in enumerate(pts):
        ax["identity"].checked += 1
        if table[a][o] != a or table[o][a] != a:
            ax["identity"].fail(f"{P} + {O} != {P}")
        ax["inverse"].checked += 1
        iP = norm(neg_point(P))
        if table[a][index[iP]] != o:
            ax["inverse"].fail(f"{P} + {iP} != {O}")
    for a, b in itertools.product(range(n), repeat=2):
        ax["commutativity"].checked += 1
        if table[a][b] != table[b][a]:
            ax["commutativity"].fail(f"{pts[a]} + {pts[b]} differs from {pts[b]} + {pts[a]}")
    for a, b, c in itertools.product(range(n), repeat=3):
        ax["associativity"].checked += 1
        ab, bc = table[a][b], table[b][c]
        left = None if ab is None else table[ab][c]
        right = None if bc is None else table[a][bc]
        if left is None or left != right:
            ax["associativity"].fail(f"({pts[a]} + {pts[b]}) + {pts[c]} != {pts[a]} + ({pts[b]} + {pts[c]})")
    report.triples = n**3
    return report


def circle_formula_check(params: AffineParams, cap: int = DEFAULT_CAP) -> dict:
    """Compare the curve addition with complex multiplication (x1x2 - y1y2, x1y2 + x2y1)."""
    if params.c != 1 or params.d != 0:
        raise ValueError("the circle comparison needs c = 1, d = 0")
    pts = enumerate_points(params, cap)
    add = group_add(params)
    mismatches = []
    for P, Q in itertools.product(pts, repeat=2):
        ref = AffinePoint(P.x * Q.x - P.y * Q.y, P.x * Q.y + Q.x * P.y)
        if add(P, Q) != ref:
            mismatches.append(f"{P} + {Q}")
    return {"pairs": len(pts) ** 2, "mismatches": len(mismatches), "first_mismatch": mismatches[:1], "passed": not mismatches}


def _routes(params: ProjParams, A: ProjPoint, B: ProjPoint) -> list[tuple[str, ProjPoint]]:
    """Every (route, result) obtainable from any representatives and rule choices."""
    out = []
    for RA in representatives(params, A):
        for RB in representatives(params, B):
            P, i = RA.point, RA.chart
            Q, j = RB.point, RB.chart
            for rule in (0, 1):
                if rule_applies(params, rule, P, Q):
                    out.append((f"direct{rule}", proj_point(params, add_rule(params, rule, P, Q), i + j)))
            if Q.in_e00:
                tQ = tau_affine(params, Q)
                for rule in (0, 1):
                    if rule_applies(params, rule, P, tQ):
                        out.append((f"tau{rule}", proj_point(params, add_rule(params, rule, P, tQ), i + j + 1)))
    return out


def well_defined_covering_check(params: ProjParams, cap: int = DEFAULT_CAP) -> dict:
    """Every pair is covered by some rule, and all applicable routes agree with proj_add."""
    pts = enumerate_proj_points(params, cap)
    uncovered, disagreements = [], []
    only_tau_route = 0
    axis_direct0 = 0
    for A, B in itertools.product(pts, repeat=2):
        routes = _routes(params, A, B)
        if not routes:
            uncovered.append(f"{A}, {B}")
            continue
        results = {R for _, R in routes}
        results.add(proj_add(params, A, B))
        if len(results) > 1:
            disagreements.append(f"{A}, {B}: {sorted(map(str, results))}")
        # routes on the canonical representatives alone
        P, Q = A.point, B.point
        direct = [r for r in (0, 1) if rule_applies(params, r, P, Q)]
        if not direct:
            only_tau_route += 1
        if not (P.in_e00 and Q.in_e00) and 0 in direct:
            axis_direct0 += 1
    return {
        "pairs": len(pts) ** 2,
        "uncovered": len(uncovered),
        "disagreements": len(disagreements),
        "first_uncovered": uncovered[:1],
        "first_disagreement": disagreements[:1],
        "pairs_needing_tau_route": only_tau_route,
        "axis_pairs_direct_rule0": axis_direct0,
        "passed": not uncovered and not disagreements,
    }


def dichotomy_sweep(params: ProjParams, cap: int = DEFAULT_CAP) -> dict:
    """Run dichotomy_case on every affine pair and re-verify the branch it returns."""
    pts = enumerate_points(params, cap)
    counts = {"rule0": 0, "rule1": 0, "symmetry": 0}
    inconsistent, unverified, overlaps = [], [], 0
    for P, Q in itertools.product(pts, repeat=2):
        try:
            res: DichotomyResult = dichotomy_case(params, P, Q)
        except Inconsistent:
            inconsistent.append(f"{P}, {Q}")
            continue
        related = P.in_e00 and any(apply_symmetry(params, g, neg_point(P)) == Q for g in TAU_RHO)
        if res.g is None:
            counts[f"rule{res.rule}"] += 1
            ok = rule_applies(params, res.rule, P, Q)
            overlaps += related
        else:
            counts["symmetry"] += 1
            ok = related and not any(rule_applies(params, r, P, Q) for r in (0, 1))
        if not ok:
            unverified.append(f"{P}, {Q}: {res}")
    return {
        "pairs": len(pts) ** 2,
        "branches": counts,
        "inconsistent": len(inconsistent),
        "unverified": len(unverified),
        "both_branches": overlaps,
        "passed": not inconsistent and not unverified and not overlaps,
    }


def fixed_point_free_check(params: ProjParams, cap: int = DEFAULT_CAP) -> bool:
    """No non-identity symmetry fixes a point with nonzero coordinates."""
    for P in enumerate_points(params, cap):
        if not P.in_e00:
            continue
        for g in GROUP:
            if not g.is_identity and apply_symmetry(params, g, P) == P:
                return False
    return True


def equivariance_check(params: ProjParams, cap: int = DEFAULT_CAP) -> dict:
    """g(A + B) == gA + B for the generators rho and tau over all pairs."""
    pts = enumerate_proj_points(params, cap)
    failures = []
    for g in (Symmetry(rho=1), Symmetry(tau=1)):
        for A, B in itertools.product(pts, repeat=2):
            if apply_symmetry(params, g, proj_add(params, A, B)) != proj_add(params, apply_symmetry(params, g, A), B):
                failures.append(f"{g}: {A}, {B}")
    return {"checked": 2 * len(pts) ** 2, "failures": len(failures), "first_failure": failures[:1], "passed": not failures}


def semi_associativity_check(params: ProjParams, cap: int = DEFAULT_CAP) -> dict:
    """([P,0] + [Q,0]) + [iota Q,0] == [P,0] for all affine P, Q."""
    pts = enumerate_points(params, cap)
    failures = []
    for P, Q in itertools.product(pts, repeat=2):
        A, B = proj_point(params, P), proj_point(params, Q)
        iB = proj_point(params, neg_point(Q))
        if proj_add(params, proj_add(params, A, B), iB) != A:
            failures.append(f"{P}, {Q}")
    return {"pairs": len(pts) ** 2, "failures": len(failures), "first_failure": failures[:1], "passed": not failures}


def jacobi_check(params, cap: int = DEFAULT_CAP) -> dict:
    """w = x(1 - d y^2) satisfies w^2 = (1 - d y^2)(1 - c y^2) at every affine point."""
    pts = enumerate_points(params, cap)
    bad = []
    for P in pts:
        u = 1 - params.d * P.y * P.y
        w = P.x * u
        if w * w != u * (1 - params.c * P.y * P.y):
            bad.append(str(P))
    return {"points": len(pts), "failures": len(bad), "first_failure": bad[:1], "passed": not bad}


def projective_suite(params: ProjParams, cap: int = DEFAULT_CAP) -> dict:
    sweep = exhaustive_axiom_check(params, cap=cap)
    out = {
        "curve": str(params),
        "counts": sweep.counts,
        "axioms": sweep.to_dict(),
        "covering": well_defined_covering_check(params, cap),
        "dichotomy": dichotomy_sweep(params, cap),
        "fixed_point_free": fixed_point_free_check(params, cap),
        "equivariance": equivariance_check(params, cap),
        "semi_associativity": semi_associativity_check(params, cap),
        "jacobi": jacobi_check(params, cap),
    }
    out["passed"] = (
        sweep.passed
        and out["fixed_point_free"]
        and all(out[k]["passed"] for k in ("covering", "dichotomy", "equivariance", "semi_associativity", "jacobi"))
    )
    return out


def affine_suite(params: AffineParams, cap: int = DEFAULT_CAP) -> dict:
    sweep = exhaustive_axiom_check(params, cap=cap)
    out = {"curve": str(params), "counts": sweep.counts, "axioms": sweep.to_dict(), "jacobi": jacobi_check(params, cap)}
    if params.c == 1 and params.d == 0:
        out["circle"] = circle_formula_check(params, cap)
    out["passed"] = sweep.passed and all(out[k]["passed"] for k in ("jacobi", "circle") if k in out)
    return out


def random_eval_audit(cert, trials: int = 100, seed: int = 0, modulus: int = _reduce.AUDIT_PRIME) -> bool:
    return _reduce.random_eval_audit(cert, trials, seed, modulus)
