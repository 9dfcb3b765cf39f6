"""Prime fields of odd characteristic."""

from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime


class DivisionByZero(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p < 3 or not isprime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.p)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return FieldElement((self.value + v) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return FieldElement((self.value - v) % self.field.p, self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElement(-self.value % self.field.p, self.field)

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.value * v % self.field.p, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return self * FieldElement(v, self.field).inverse()

    def __rtruediv__(self, other):
        return FieldElement(other % self.field.p, self.field) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.field.p
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.field.p}"

    def __str__(self):
        return str(self.value)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse mod {self.field.p}")
        return FieldElement(pow(self.value, -1, self.field.p), self.field)

    def is_square(self) -> bool:
        """Euler's criterion; 0 counts as a square."""
        if self.value == 0:
            return True
        return pow(self.value, (self.field.p - 1) // 2, self.field.p) == 1

    def is_nonzero_square(self) -> bool:
        return self.value != 0 and self.is_square()


def fe_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def is_square(a: FieldElement) -> bool:
    return a.is_square()
