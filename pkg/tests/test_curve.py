import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edwardsproof.curve import (
    GROUP,
    AffineParams,
    DeltaVanishes,
    HypothesisViolation,
    ParamsNotComplete,
    ProjParams,
    ProjPoint,
    Symmetry,
    ZeroCoordinate,
    add_delta0,
    add_delta1,
    affine_complete_add,
    apply_symmetry,
    dichotomy_case,
    identity,
    neg_point,
    on_curve,
    parse_point,
    point,
    proj_add,
    proj_point,
    representatives,
    scalar_mul,
    tau_affine,
)
from edwardsproof.oracle import enumerate_points, enumerate_proj_points

A13 = AffineParams.make(13, 1, 2)
CIRCLE = AffineParams.make(13, 1, 0)
T13 = ProjParams.make(13, 2)
T17 = ProjParams.make(17, 2)


def test_on_curve_examples():
    for params in (A13, CIRCLE, T13):
        assert on_curve(params, point(params, 1, 0))
        assert not on_curve(params, point(params, 0, 0))
    assert on_curve(A13, point(A13, 4, 4))


def test_add_delta0_examples():
    P = point(A13, 4, 4)
    assert add_delta0(A13, P, P) == point(A13, 0, 1)
    assert add_delta0(A13, P, point(A13, 1, 0)) == P
    assert add_delta0(CIRCLE, point(CIRCLE, 0, 1), point(CIRCLE, 0, 1)) == point(CIRCLE, -1, 0)


def test_completeness_flags():
    assert A13.complete
    assert AffineParams.make(13, 1, 0).complete
    bad = AffineParams.make(13, 1, 4)
    assert not bad.complete
    with pytest.raises(ParamsNotComplete):
        affine_complete_add(bad, point(bad, 1, 0), point(bad, 1, 0))


def test_bad_t_rejected():
    for t in (0, 1, 12):
        with pytest.raises(HypothesisViolation):
            ProjParams.make(13, t)


def test_rules_agree_where_both_defined():
    pts = enumerate_points(T17)
    agreed = 0
    for P, Q in itertools.product(pts, repeat=2):
        try:
            a, b = add_delta0(T17, P, Q), add_delta1(T17, P, Q)
        except DeltaVanishes:
            continue
        assert a == b
        agreed += 1
    assert agreed > 0


def test_rule1_is_tau_conjugate_of_rule0():
    for P, Q in itertools.product([P for P in enumerate_points(T17) if P.in_e00], repeat=2):
        try:
            lhs = add_delta1(T17, P, Q)
            rhs = tau_affine(T17, add_delta0(T17, tau_affine(T17, P), Q))
        except (DeltaVanishes, ZeroCoordinate):
            continue
        assert lhs == rhs


def test_rule1_undefined_on_diagonal_point():
    # (x, x) with x^2 t = 1 lies on the curve and both rule-1 denominators vanish
    params = ProjParams.make(13, 4)
    F = params.field
    xs = [x for x in range(1, 13) if F(x) * F(x) * params.t == 1]
    assert xs
    P = point(params, xs[0], xs[0])
    with pytest.raises(DeltaVanishes):
        add_delta1(params, P, P)


def test_negation():
    P = point(A13, 4, 4)
    assert neg_point(neg_point(P)) == P
    assert neg_point(point(A13, 1, 0)) == point(A13, 1, 0)
    assert affine_complete_add(A13, P, neg_point(P)) == point(A13, 1, 0)


def test_symmetry_group():
    assert len(set(GROUP)) == 8
    rho, tau = Symmetry(rho=1), Symmetry(tau=1)
    assert rho * rho * rho * rho == Symmetry()
    assert tau * tau == Symmetry()
    assert rho * tau == tau * rho
    for g in GROUP:
        assert g * g.inverse() == Symmetry()
    assert Symmetry.parse("tau rho^3") == Symmetry(3, 1)
    assert Symmetry.parse(str(Symmetry(2, 1))) == Symmetry(2, 1)


def test_symmetry_action():
    P = next(P for P in enumerate_points(T13) if P.in_e00)
    assert apply_symmetry(T13, "rho^4", P) == P
    assert apply_symmetry(T13, "tau tau", P) == P
    A = ProjPoint(point(T13, 1, 0), 0)
    assert apply_symmetry(T13, "tau", A) == ProjPoint(point(T13, 1, 0), 1)
    with pytest.raises(ZeroCoordinate):
        apply_symmetry(T13, "tau", point(T13, 1, 0))
    for g in GROUP:
        for P in enumerate_points(T13):
            if P.in_e00:
                assert on_curve(T13, apply_symmetry(T13, g, P))


def test_canonical_form():
    P = next(P for P in enumerate_points(T13) if P.in_e00)
    A = proj_point(T13, P, 1)
    assert A.chart == 0 and A.point == tau_affine(T13, P)
    assert proj_point(T13, point(T13, 0, 1), 1).chart == 1
    assert len(representatives(T13, proj_point(T13, P))) == 2


def test_dichotomy_examples():
    P = next(P for P in enumerate_points(T13) if P.in_e00)
    axis = point(T13, 0, 1)
    assert dichotomy_case(T13, P, axis).rule == 0
    Q = tau_affine(T13, neg_point(P))
    res = dichotomy_case(T13, P, Q)
    assert res.g == Symmetry(tau=1)


def test_projective_identity_and_inverse():
    O = identity(T13)
    for A in enumerate_proj_points(T13):
        assert proj_add(T13, O, A) == A
        assert proj_add(T13, A, neg_point(A)) == O


def test_representative_independence():
    pts = enumerate_proj_points(T13)
    for A, B in itertools.product(pts, repeat=2):
        want = proj_add(T13, A, B)
        for RA in representatives(T13, A):
            for RB in representatives(T13, B):
                assert proj_add(T13, RA, RB) == want


def test_scalar_mul_matches_loop():
    for params, pts in ((A13, enumerate_points(A13)), (T17, enumerate_proj_points(T17))):
        for A in pts:
            acc = identity(params)
            for n in range(8):
                assert scalar_mul(params, n, A) == acc
                acc = proj_add(params, acc, A) if isinstance(params, ProjParams) else affine_complete_add(params, acc, A)
            assert scalar_mul(params, -3, A) == neg_point(scalar_mul(params, 3, A))


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(0, 11))
def test_scalar_mul_is_additive(m, n, k):
    A = enumerate_proj_points(T13)[k % 16]
    assert scalar_mul(T13, m + n, A) == proj_add(T13, scalar_mul(T13, m, A), scalar_mul(T13, n, A))


def test_point_text_round_trip():
    for A in enumerate_proj_points(T13):
        assert parse_point(T13, str(A)) == A
    assert parse_point(A13, "(4, 4)") == point(A13, 4, 4)
    with pytest.raises(ValueError):
        parse_point(A13, "4,4")
