import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.orderings import grevlex as sympy_grevlex
from sympy.polys.orderings import lex as sympy_lex

from edwardsproof.polyring import PolyRing
from edwardsproof.reduce import (
    AUDIT_PRIME,
    ReductionCertificate,
    ResourceBound,
    buchberger,
    certificate_identity_holds,
    grevlex,
    is_groebner,
    lex,
    poly_reduce,
    random_eval_audit,
    reduces_to_zero,
    remainder_is_reduced,
    search_zero_reduction,
    verify_certificate,
)

R = PolyRing(("x", "y", "z"))
x, y, z = R.vars("x", "y", "z")
SYMS = sympy.symbols("x y z")

terms = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)), st.integers(-9, 9), max_size=5
)
polys = terms.map(R.from_terms)
divisor_lists = st.lists(polys.filter(lambda p: not p.is_zero()), min_size=1, max_size=3)


def to_sympy(p):
    return sympy.Poly(sympy.sympify(p.to_text().replace("^", "**"), locals=dict(zip("xyz", SYMS))), *SYMS)


def test_audit_prime_is_large_prime():
    assert sympy.isprime(AUDIT_PRIME)
    assert AUDIT_PRIME >= 2**60


@pytest.mark.parametrize("order,sym", [(lex("z", "x", "y"), sympy_lex), (grevlex("y", "z", "x"), sympy_grevlex)])
def test_order_matches_sympy(order, sym):
    seq = order.sequence(R)
    perm = [R.index[v] for v in seq]
    mons = [R.pack(e) for e in ((a, b, c) for a in range(3) for b in range(3) for c in range(3))]
    key = order.key_for(R)
    ours = sorted(mons, key=key)
    ref = sorted(mons, key=lambda m: sym(tuple(R.unpack(m)[i] for i in perm)))
    assert ours == ref


@settings(max_examples=60)
@given(polys, divisor_lists, st.sampled_from([lex(), grevlex(), lex("z", "y", "x")]))
def test_division_certificate_holds(r, divisors, order):
    cert = poly_reduce(r, divisors, order, pseudo=True)
    assert cert.scale != 0
    assert certificate_identity_holds(cert)
    assert remainder_is_reduced(cert)
    assert random_eval_audit(cert, trials=5)


def test_division_matches_sympy_reduced():
    f = x**3 * y + 2 * x * y**2 - z
    gs = [x**2 - y, x * y - z]
    cert = poly_reduce(f, gs, lex())
    qs, r = sympy.reduced(to_sympy(f).as_expr(), [to_sympy(g).as_expr() for g in gs], *SYMS, order="lex")
    assert to_sympy(cert.remainder).as_expr() == sympy.expand(r)


def test_non_unit_leading_coefficient_needs_pseudo():
    with pytest.raises(ResourceBound):
        poly_reduce(x**2 + 1, [2 * x - 1], lex())
    cert = poly_reduce(x**2 + 1, [2 * x - 1], lex(), pseudo=True)
    assert cert.scale == 4
    assert certificate_identity_holds(cert)


def test_unit_multiplier_in_search():
    # x - y = y*(tx - 1) - x*(ty - 1) has no t, so plain division stalls;
    # with t invertible, t*(x - y) reduces to zero
    ring = PolyRing(("x", "y", "t"))
    xx, yy, t = ring.vars("x", "y", "t")
    ds = [t * xx - 1, t * yy - 1]
    ok, _, attempts = search_zero_reduction(xx - yy, ds, ("x", "y", "t"))
    assert not ok and attempts > 2
    ok, cert, _ = search_zero_reduction(xx - yy, ds, ("x", "y", "t"), unit=t)
    assert ok and cert.unit == t
    assert cert.dividend == xx - yy
    assert verify_certificate(cert)
    assert ReductionCertificate.from_json(cert.to_json()) == cert


def test_certificate_json_round_trip():
    cert = poly_reduce(x**3 - y, [x - z], lex())
    back = ReductionCertificate.from_json(cert.to_json())
    assert back == cert
    assert back.digest() == cert.digest()


def test_tampered_certificate_fails_audit():
    cert = poly_reduce(x**3 * y - y, [x**2 - 1], lex())
    assert verify_certificate(cert)
    bad_q = (cert.quotients[0] + z,)
    tampered = ReductionCertificate(cert.dividend, cert.divisors, bad_q, cert.remainder, cert.order)
    assert not certificate_identity_holds(tampered)
    assert not random_eval_audit(tampered, trials=100)
    assert random_eval_audit(tampered, trials=0)


def _monic_set(polys, order):
    out = set()
    for p in polys:
        sp = to_sympy(p) if hasattr(p, "ring") else sympy.Poly(p, *SYMS)
        out.add(sympy.Poly(sp.as_expr() / sp.LC(order=order), *SYMS, domain="QQ"))
    return out


@pytest.mark.parametrize(
    "gens",
    [
        [x**2 + y**2 - 1, x * y - 2],
        [x**2 - y * z, y**2 - x * z, z**2 - x * y],
        [x**3 - 2 * x * y, x**2 * y - 2 * y**2 + x],
    ],
)
@pytest.mark.parametrize("kind", ["lex", "grevlex"])
def test_buchberger_matches_sympy(gens, kind):
    order = lex() if kind == "lex" else grevlex()
    gb = buchberger(gens, order)
    ref = sympy.groebner([to_sympy(g).as_expr() for g in gens], *SYMS, order=kind)
    assert _monic_set(gb.generators, kind) == _monic_set(ref.exprs, kind)
    assert is_groebner(list(gb.generators), order)
    for cert in gb.membership_certificates():
        assert certificate_identity_holds(cert)


def test_lift_gives_certificate_over_inputs():
    gens = [x**2 + y**2 - 1, x * y - 2]
    gb = buchberger(gens, grevlex())
    member = (x + z) * gens[0] - y**3 * gens[1]
    ok, cert = reduces_to_zero(member, gb)
    assert ok
    lifted = gb.lift(cert)
    assert lifted.divisors == tuple(gens)
    assert verify_certificate(lifted)
