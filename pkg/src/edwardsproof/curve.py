"""Edwards curve groups over prime fields.

Two flavours: the affine curve x^2 + c y^2 = 1 + d x^2 y^2 with the complete
addition law (c a square, d not a nonzero square), and the projective t-form
curve x^2 + y^2 = 1 + t^2 x^2 y^2 built from two affine charts glued along
the points with nonzero coordinates by tau(x, y) = (1/(tx), 1/(ty)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .field import FieldElement, PrimeField


class HypothesisViolation(ValueError):
    """Curve parameters outside the range where the group law is proved."""


class ParamsNotComplete(HypothesisViolation):
    pass


class DeltaVanishes(ArithmeticError):
    def __init__(self, which: str, P=None, Q=None):
        super().__init__(f"{which} vanishes at {P}, {Q}")
        self.which = which
        self.P = P
        self.Q = Q


class ZeroCoordinate(ValueError):
    pass


class Inconsistent(RuntimeError):
    """Neither branch of the dichotomy holds; should never happen."""


class NotOnCurve(ValueError):
    pass


@dataclass(frozen=True)
class AffineParams:
    field: PrimeField
    c: FieldElement
    d: FieldElement
    complete: bool

    @classmethod
    def make(cls, p: int, c: int, d: int) -> "AffineParams":
        F = PrimeField(p)
        c_, d_ = F(c), F(d)
        return cls(F, c_, d_, c_.is_square() and not d_.is_nonzero_square())

    def require_complete(self):
        if not self.c.is_square():
            raise ParamsNotComplete(f"c = {self.c} is not a square mod {self.field.p}: the addition law is not complete")
        if self.d.is_nonzero_square():
            raise ParamsNotComplete(
                f"d = {self.d} is a nonzero square mod {self.field.p}: "
                "the denominators 1 -+ d x1 x2 y1 y2 can vanish, affine completeness fails"
            )

    def __str__(self):
        return f"p={self.field.p} c={self.c} d={self.d}"


@dataclass(frozen=True)
class ProjParams:
    field: PrimeField
    t: FieldElement

    def __post_init__(self):
        if self.t == 0:
            raise HypothesisViolation("t = 0: the curve degenerates to the circle and tau is undefined")
        if self.t * self.t == 1:
            raise HypothesisViolation(f"t^2 = 1 mod {self.field.p}: the t-form curve is singular")

    @classmethod
    def make(cls, p: int, t: int) -> "ProjParams":
        F = PrimeField(p)
        return cls(F, F(t))

    @property
    def c(self) -> FieldElement:
        return self.field.one

    @property
    def d(self) -> FieldElement:
        return self.t * self.t

    def __str__(self):
        return f"p={self.field.p} t={self.t}"


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement

    def __str__(self):
        return f"({self.x},{self.y})"

    @property
    def in_e00(self) -> bool:
        return bool(self.x) and bool(self.y)


@dataclass(frozen=True)
class ProjPoint:
    """[point, chart]; build with :func:`proj_point` to get the canonical form."""

    point: AffinePoint
    chart: int

    def __str__(self):
        return f"[{self.point},{self.chart}]"


@dataclass(frozen=True, order=True)
class Symmetry:
    """tau^tau * rho^rho; the group is abelian of order 8."""

    rho: int = 0
    tau: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rho", self.rho % 4)
        object.__setattr__(self, "tau", self.tau % 2)

    def __mul__(self, other: "Symmetry") -> "Symmetry":
        return Symmetry(self.rho + other.rho, self.tau + other.tau)

    def inverse(self) -> "Symmetry":
        return Symmetry(-self.rho, self.tau)

    @property
    def is_identity(self) -> bool:
        return self.rho == 0 and self.tau == 0

    def __str__(self):
        parts = []
        if self.tau:
            parts.append("tau")
        if self.rho:
            parts.append("rho" if self.rho == 1 else f"rho^{self.rho}")
        return "*".join(parts) or "1"

    @classmethod
    def parse(cls, word: str) -> "Symmetry":
        g = cls()
        rest = re.sub(r"[\s*.]", "", word)
        if rest in ("", "1", "id"):
            return g
        for name, exp in re.findall(r"(rho|tau|.)(?:\^(-?\d+))?", rest):
            if name not in ("rho", "tau"):
                raise ValueError(f"cannot parse symmetry {word!r}")
            n = int(exp) if exp else 1
            g = g * (cls(rho=n) if name == "rho" else cls(tau=n))
        return g


GROUP = tuple(Symmetry(k, s) for s in (0, 1) for k in range(4))
TAU_RHO = tuple(Symmetry(k, 1) for k in range(4))


@dataclass(frozen=True)
class DichotomyResult:
    rule: int | None = None
    g: Symmetry | None = None

    def __post_init__(self):
        if (self.rule is None) == (self.g is None):
            raise ValueError("exactly one branch must be populated")

    def __str__(self):
        return f"rule {self.rule}" if self.g is None else f"Q = {self.g} iota P"


def point(params, x: int, y: int) -> AffinePoint:
    F = params.field
    return AffinePoint(F(x), F(y))


def identity(params):
    P = point(params, 1, 0)
    return ProjPoint(P, 0) if isinstance(params, ProjParams) else P


def curve_value(params, P: AffinePoint) -> FieldElement:
    x2, y2 = P.x * P.x, P.y * P.y
    return x2 + params.c * y2 - 1 - params.d * x2 * y2


def on_curve(params, P) -> bool:
    if isinstance(P, ProjPoint):
        P = P.point
    return curve_value(params, P) == 0


def neg_point(P):
    if isinstance(P, ProjPoint):
        return ProjPoint(neg_point(P.point), P.chart)
    return AffinePoint(P.x, -P.y)


def tau_affine(params: ProjParams, P: AffinePoint) -> AffinePoint:
    if not P.in_e00:
        raise ZeroCoordinate(f"tau is undefined at {P}")
    return AffinePoint((params.t * P.x).inverse(), (params.t * P.y).inverse())


def rho_affine(P: AffinePoint) -> AffinePoint:
    return AffinePoint(-P.y, P.x)


def canonical(params: ProjParams, A: ProjPoint) -> ProjPoint:
    if A.chart % 2 == 1 and A.point.in_e00:
        return ProjPoint(tau_affine(params, A.point), 0)
    return ProjPoint(A.point, A.chart % 2)


def proj_point(params: ProjParams, P: AffinePoint, chart: int = 0) -> ProjPoint:
    return canonical(params, ProjPoint(P, chart))


def representatives(params: ProjParams, A: ProjPoint) -> list[ProjPoint]:
    """Every (point, chart) pair naming the same projective point."""
    A = canonical(params, A)
    if A.point.in_e00:
        return [A, ProjPoint(tau_affine(params, A.point), 1)]
    return [A]


def apply_symmetry(params, g: Symmetry | str, P):
    if isinstance(g, str):
        g = Symmetry.parse(g)
    if isinstance(P, ProjPoint):
        Q = P.point
        for _ in range(g.rho):
            Q = rho_affine(Q)
        return canonical(params, ProjPoint(Q, P.chart + g.tau))
    for _ in range(g.rho):
        P = rho_affine(P)
    if g.tau:
        P = tau_affine(params, P)
    return P


def delta0(params, P: AffinePoint, Q: AffinePoint) -> tuple[FieldElement, FieldElement]:
    m = params.d * P.x * Q.x * P.y * Q.y
    return 1 - m, 1 + m


def delta1(P: AffinePoint, Q: AffinePoint) -> tuple[FieldElement, FieldElement]:
    return Q.x * P.y - P.x * Q.y, P.x * Q.x + P.y * Q.y


def add_delta0(params, P: AffinePoint, Q: AffinePoint) -> AffinePoint:
    dx, dy = delta0(params, P, Q)
    if not dx:
        raise DeltaVanishes("delta0x", P, Q)
    if not dy:
        raise DeltaVanishes("delta0y", P, Q)
    return AffinePoint((P.x * Q.x - params.c * P.y * Q.y) / dx, (P.x * Q.y + P.y * Q.x) / dy)


def add_delta1(params: ProjParams, P: AffinePoint, Q: AffinePoint) -> AffinePoint:
    dx, dy = delta1(P, Q)
    if not dx:
        raise DeltaVanishes("delta1x", P, Q)
    if not dy:
        raise DeltaVanishes("delta1y", P, Q)
    return AffinePoint((P.x * P.y - Q.x * Q.y) / dx, (P.x * P.y + Q.x * Q.y) / dy)


def add_rule(params, rule: int, P: AffinePoint, Q: AffinePoint) -> AffinePoint:
    return add_delta0(params, P, Q) if rule == 0 else add_delta1(params, P, Q)


def rule_applies(params, rule: int, P: AffinePoint, Q: AffinePoint) -> bool:
    dx, dy = delta0(params, P, Q) if rule == 0 else delta1(P, Q)
    return bool(dx) and bool(dy)


def dichotomy_case(params: ProjParams, P: AffinePoint, Q: AffinePoint) -> DichotomyResult:
    """Either some rule is defined at (P, Q) (rule 0 preferred) or Q = g iota P, g in tau<rho>."""
    for rule in (0, 1):
        if rule_applies(params, rule, P, Q):
            return DichotomyResult(rule=rule)
    if P.in_e00:
        iP = neg_point(P)
        for g in TAU_RHO:
            if apply_symmetry(params, g, iP) == Q:
                return DichotomyResult(g=g)
    raise Inconsistent(f"no rule applies at {P}, {Q} and Q is not in tau<rho> iota P")


def proj_add(params: ProjParams, A: ProjPoint, B: ProjPoint) -> ProjPoint:
    """Total addition on the glued curve.

    Try both rules on the given charts; if every denominator vanishes, rewrite
    B as [tau Q, j+1] and try again.
    """
    A, B = canonical(params, A), canonical(params, B)
    P, i = A.point, A.chart
    Q, j = B.point, B.chart
    for rule in (0, 1):
        if rule_applies(params, rule, P, Q):
            return proj_point(params, add_rule(params, rule, P, Q), i + j)
    if Q.in_e00:
        tQ = tau_affine(params, Q)
        for rule in (0, 1):
            if rule_applies(params, rule, P, tQ):
                return proj_point(params, add_rule(params, rule, P, tQ), i + j + 1)
    raise Inconsistent(f"no addition rule covers {A}, {B}")


def affine_complete_add(params: AffineParams, P: AffinePoint, Q: AffinePoint) -> AffinePoint:
    if not params.complete:
        params.require_complete()
    # completeness says the denominators never vanish; add_delta0 still checks
    return add_delta0(params, P, Q)


def group_add(params):
    """The total addition for ``params``, as a function of two points."""
    if isinstance(params, ProjParams):
        return lambda A, B: proj_add(params, A, B)
    params.require_complete()
    return lambda P, Q: affine_complete_add(params, P, Q)


def scalar_mul(params, n: int, A):
    add = group_add(params)
    if isinstance(params, ProjParams) and isinstance(A, AffinePoint):
        A = proj_point(params, A)
    if n < 0:
        n, A = -n, neg_point(A)
    acc = identity(params)
    while n:
        if n & 1:
            acc = add(acc, A)
        A = add(A, A)
        n >>= 1
    return acc


_AFFINE_RE = re.compile(r"^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")
_PROJ_RE = re.compile(r"^\s*\[\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*,\s*(\d+)\s*\]\s*$")


def parse_point(params, text: str):
    """Parse ``(x,y)`` or ``[(x,y),i]``; projective results are canonical."""
    m = _PROJ_RE.match(text)
    if m:
        if not isinstance(params, ProjParams):
            raise ValueError("projective points need t-form parameters")
        return proj_point(params, point(params, int(m[1]), int(m[2])), int(m[3]))
    m = _AFFINE_RE.match(text)
    if m:
        return point(params, int(m[1]), int(m[2]))
    raise ValueError(f"cannot parse point {text!r}")


def format_point(P) -> str:
    return str(P)
