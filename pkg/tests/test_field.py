import pytest
from hypothesis import given
from hypothesis import strategies as st

from edwardsproof.field import DivisionByZero, PrimeField, fe_arith, fe_inv, is_square

F13 = PrimeField(13)
SMALL_PRIMES = [p for p in range(3, 102) if all(p % q for q in range(2, p))]


def test_arith_examples():
    assert fe_arith(F13(7), F13(8), "add") == 2
    assert fe_arith(F13(4), F13(4), "mul") == 3
    a = F13(9)
    assert fe_arith(a, a, "sub") == 0


def test_inverse_examples():
    assert fe_inv(F13(1)) == 1
    assert fe_inv(F13(5)) == 8
    with pytest.raises(DivisionByZero):
        fe_inv(F13(0))


def test_squares_mod_13():
    assert {v for v in range(13) if is_square(F13(v))} == {0, 1, 3, 4, 9, 10, 12}
    assert is_square(F13(4))
    assert not is_square(F13(2))
    # zero is a square but not a nonzero square
    assert is_square(F13(0)) and not F13(0).is_nonzero_square()


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_euler_matches_enumeration(p):
    F = PrimeField(p)
    squares = {v * v % p for v in range(p)}
    assert {v for v in range(p) if F(v).is_square()} == squares


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_inverse_matches_fermat(p):
    F = PrimeField(p)
    for v in range(1, p):
        assert F(v).inverse().value == pow(v, p - 2, p)


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15])
def test_rejects_non_odd_primes(bad):
    with pytest.raises(ValueError):
        PrimeField(bad)


@given(st.integers(), st.integers(), st.integers())
def test_field_axioms_mod_101(a, b, c):
    F = PrimeField(101)
    x, y, z = F(a), F(b), F(c)
    assert x * (y + z) == x * y + x * z
    assert (x + y) + z == x + (y + z)
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        F13(1) + PrimeField(17)(1)
