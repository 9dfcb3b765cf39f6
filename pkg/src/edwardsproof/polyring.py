"""Sparse multivariate polynomials over the integers and their localizations.

Monomials are packed into a single Python int, eight bits per variable, with
the first ring variable in the most significant field.  Multiplying monomials
is then integer addition and comparing them in the ring's own lex order is
integer comparison.  Exponents are limited to 127 per variable so that the top
bit of every field can serve as a guard bit for divisibility tests.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

BITS = 8
FIELD = (1 << BITS) - 1
MAX_EXP = (1 << (BITS - 1)) - 1


class DenominatorVanishes(ZeroDivisionError):
    """A designated denominator maps to zero under an evaluation."""

    def __init__(self, factor: "Polynomial"):
        super().__init__(f"denominator factor vanishes: {factor}")
        self.factor = factor


class PolyRing:
    """An integer polynomial ring on a fixed, ordered list of variable names."""

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise ValueError(f"bad variable name {name!r}")
        self.names = names
        self.nvars = len(names)
        self.index = {name: i for i, name in enumerate(names)}
        self.shifts = tuple(BITS * (self.nvars - 1 - i) for i in range(self.nvars))
        self.guard = sum(1 << (s + BITS - 1) for s in self.shifts)

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    # monomial packing

    def pack(self, exps: Iterable[int]) -> int:
        m = 0
        for e in exps:
            if not 0 <= e <= MAX_EXP:
                raise OverflowError(f"exponent {e} outside [0, {MAX_EXP}]")
            m = (m << BITS) | e
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> s) & FIELD for s in self.shifts)

    def divides(self, a: int, b: int) -> bool:
        """True iff monomial ``a`` divides monomial ``b``."""
        return ((b | self.guard) - a) & self.guard == self.guard

    # constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {0: 1})

    def const(self, n: int) -> "Polynomial":
        return Polynomial(self, {0: n} if n else {})

    def var(self, name: str) -> "Polynomial":
        return Polynomial(self, {1 << self.shifts[self.index[name]]: 1})

    def vars(self, *names: str) -> tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in names)

    def monomial(self, powers: Mapping[str, int], coeff: int = 1) -> "Polynomial":
        exps = [0] * self.nvars
        for name, e in powers.items():
            exps[self.index[name]] = e
        return Polynomial(self, {self.pack(exps): coeff} if coeff else {})

    def from_terms(self, terms: Mapping[tuple[int, ...], int]) -> "Polynomial":
        out: dict[int, int] = {}
        for exps, c in terms.items():
            if len(exps) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            m = self.pack(exps)
            out[m] = out.get(m, 0) + c
        return Polynomial(self, {m: c for m, c in out.items() if c})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)


class Polynomial:
    """Immutable sparse polynomial with nonzero integer coefficients."""

    __slots__ = ("ring", "terms", "_hash", "_degs")

    def __init__(self, ring: PolyRing, terms: dict[int, int]):
        self.ring = ring
        self.terms = terms
        self._hash = None
        self._degs = None

    # inspection

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get(0, 0)

    def degrees(self) -> tuple[int, ...]:
        """Largest exponent of each variable."""
        if self._degs is None:
            degs = [0] * self.ring.nvars
            for m in self.terms:
                for i, e in enumerate(self.ring.unpack(m)):
                    if e > degs[i]:
                        degs[i] = e
            self._degs = tuple(degs)
        return self._degs

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(self.ring.unpack(m)) for m in self.terms)

    def variables(self) -> tuple[str, ...]:
        return tuple(n for n, d in zip(self.ring.names, self.degrees()) if d)

    def items(self):
        """(exponent tuple, coefficient) pairs in no particular order."""
        unpack = self.ring.unpack
        return [(unpack(m), c) for m, c in self.terms.items()]

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    # ring operations

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) - c
            if v:
                out[m] = v
            else:
                del out[m]
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.ring.zero()
            return Polynomial(self.ring, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self.ring.zero()
        _check_product_degrees(self, other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((mb, cb),) = b.items()
            return Polynomial(self.ring, {ma + mb: ca * cb for ma, ca in a.items()})
        out: dict[int, int] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                k = ma + mb
                out[k] = get(k, 0) + ca * cb
        return Polynomial(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, m: int, c: int) -> "Polynomial":
        """Multiply by the single term ``c * m`` (packed monomial)."""
        return Polynomial(self.ring, {k + m: v * c for k, v in self.terms.items()})

    # equality / hashing

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # homomorphisms

    def substitute(self, mapping: Mapping[str, object], target: PolyRing | None = None):
        """Image under the ring map sending each variable to ``mapping[name]``.

        Images may be Polynomials over ``target`` (default: this ring) or any
        objects closed under +, * with ints, such as LocalizedElements.
        Variables missing from ``mapping`` go to the same-named variable of
        the target ring.
        """
        target = target or self.ring
        images = []
        for name, deg in zip(self.ring.names, self.degrees()):
            if not deg:
                images.append(None)
            elif name in mapping:
                images.append(mapping[name])
            else:
                images.append(target.var(name))
        powers: list[dict[int, object]] = [{} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return cache[e]

        total = None
        unpack = self.ring.unpack
        for m, c in sorted(self.terms.items()):
            term = c
            for i, e in enumerate(unpack(m)):
                if e:
                    term = power(i, e) * term
            if isinstance(term, int):
                term = target.const(term)
            total = term if total is None else total + term
        return target.zero() if total is None else total

    def evaluate(self, point: Mapping[str, int], modulus: int) -> int:
        """Value mod ``modulus`` at an integer assignment of the variables."""
        names = self.ring.names
        degs = self.degrees()
        tables = []
        for name, deg in zip(names, degs):
            if not deg:
                tables.append(None)
                continue
            v = point[name] % modulus
            row = [1] * (deg + 1)
            for e in range(1, deg + 1):
                row[e] = row[e - 1] * v % modulus
            tables.append(row)
        active = [(i, s, tables[i]) for i, s in enumerate(self.ring.shifts) if degs[i]]
        acc = 0
        for m, c in self.terms.items():
            v = c
            for _, s, row in active:
                e = (m >> s) & FIELD
                if e:
                    v = v * row[e] % modulus
            acc += v
        return acc % modulus

    # text

    def to_text(self, order=None) -> str:
        return format_polynomial(self, order)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def _check_product_degrees(a: Polynomial, b: Polynomial) -> None:
    for da, db in zip(a.degrees(), b.degrees()):
        if da + db > MAX_EXP:
            raise OverflowError("product exceeds the per-variable exponent limit")


def _format_monomial(ring: PolyRing, m: int) -> str:
    parts = []
    for name, e in zip(ring.names, ring.unpack(m)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order=None) -> str:
    """Canonical text: terms in descending monomial order, ring-order variables."""
    if not p.terms:
        return "0"
    if order is None:
        monos = sorted(p.terms, reverse=True)
    else:
        monos = sorted(p.terms, key=order.key_for(p.ring), reverse=True)
    out = []
    for i, m in enumerate(monos):
        c = p.terms[m]
        mono = _format_monomial(p.ring, m)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial`; accepts any sum of products."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    out: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match or (not first and match.group(1) is None):
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        first = False
        sign = -1 if match.group(1) == "-" else 1
        coeff = sign
        exps = [0] * ring.nvars
        for factor in match.group(2).strip().split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in ring.index:
                raise ValueError(f"unknown variable {name!r}")
            exps[ring.index[name]] += int(power) if power else 1
        m = ring.pack(exps)
        v = out.get(m, 0) + coeff
        if v:
            out[m] = v
        else:
            out.pop(m, None)
        pos = match.end()
    return Polynomial(ring, out)


class LocalizedElement:
    """A fraction numerator / prod(factor^k) over designated denominators.

    Denominator factors are kept unexpanded.  Dividing by another element
    adjoins that element's numerator as a new factor, so the multiplicative
    set grows only with polynomials that were explicitly divided by.
    """

    __slots__ = ("numerator", "den")

    def __init__(self, numerator: Polynomial, den: Mapping[Polynomial, int] | None = None):
        self.numerator = numerator
        self.den = {f: k for f, k in (den or {}).items() if k}
        for f, k in self.den.items():
            if k < 0:
                raise ValueError("negative denominator exponent")
            if f.is_zero():
                raise ZeroDivisionError("zero cannot be a denominator factor")

    @classmethod
    def of(cls, p: Polynomial) -> "LocalizedElement":
        return cls(p)

    @property
    def ring(self) -> PolyRing:
        return self.numerator.ring

    def factors(self) -> list[Polynomial]:
        return list(self.den)

    def denominator(self) -> Polynomial:
        """The denominator product, fully expanded."""
        return _expand(self.ring, self.den)

    def clear_denominators(self) -> tuple[Polynomial, Polynomial]:
        return self.numerator, self.denominator()

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def to_polynomial(self) -> Polynomial:
        """The element as a polynomial; ValueError if the denominator does not divide."""
        return exact_divide(self.numerator, self.denominator())

    # arithmetic

    def _lift(self, other) -> "LocalizedElement":
        if isinstance(other, LocalizedElement):
            return other
        if isinstance(other, Polynomial):
            return LocalizedElement(other)
        if isinstance(other, int):
            return LocalizedElement(self.ring.const(other))
        return NotImplemented

    def _to_common(self, other: "LocalizedElement"):
        common = dict(self.den)
        for f, k in other.den.items():
            if k > common.get(f, 0):
                common[f] = k
        a = self.numerator * _expand(self.ring, _excess(common, self.den))
        b = other.numerator * _expand(self.ring, _excess(common, other.den))
        return a, b, common

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return LocalizedElement(self.numerator + other.numerator, self.den)
        a, b, common = self._to_common(other)
        return LocalizedElement(a + b, common)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return LocalizedElement(self.numerator - other.numerator, self.den)
        a, b, common = self._to_common(other)
        return LocalizedElement(a - b, common)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return LocalizedElement(-self.numerator, self.den)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        den = dict(self.den)
        for f, k in other.den.items():
            den[f] = den.get(f, 0) + k
        return LocalizedElement(self.numerator * other.numerator, den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = LocalizedElement(self.ring.one())
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "LocalizedElement":
        """1/self, adjoining the numerator to the multiplicative set."""
        n = self.numerator
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num = _expand(self.ring, self.den)
        den: dict[Polynomial, int] = {}
        if n.is_constant() and abs(n.constant_value()) == 1:
            num = num * n.constant_value()
        else:
            den[n] = 1
        return LocalizedElement(num, den)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = other.numerator
        if n.is_zero():
            raise ZeroDivisionError("division by zero element")
        den = dict(self.den)
        # cancel other's denominator against ours before expanding the rest
        leftover: dict[Polynomial, int] = {}
        for f, k in other.den.items():
            cancel = min(den.get(f, 0), k)
            if cancel:
                den[f] -= cancel
            if k - cancel:
                leftover[f] = k - cancel
        num = self.numerator * _expand(self.ring, leftover)
        if n.is_constant() and abs(n.constant_value()) == 1:
            num = num * n.constant_value()
        else:
            den[n] = den.get(n, 0) + 1
        return LocalizedElement(num, den)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    # equality by cross-multiplication

    def equals(self, other) -> bool:
        other = self._lift(other)
        a, b, _ = self._to_common(other)
        return a == b

    def difference_numerator(self, other) -> Polynomial:
        """Numerator of self - other over the least common denominator."""
        return (self - self._lift(other)).numerator

    # homomorphisms

    def substitute(self, mapping: Mapping[str, object], target: PolyRing | None = None):
        target = target or self.ring
        num = self.numerator.substitute(mapping, target)
        if not isinstance(num, (Polynomial, LocalizedElement)):
            num = target.const(num)
        result = num if isinstance(num, LocalizedElement) else LocalizedElement(num)
        for f, k in self.den.items():
            image = f.substitute(mapping, target)
            if isinstance(image, Polynomial):
                image = LocalizedElement(image)
            if image.is_zero():
                raise DenominatorVanishes(f)
            for _ in range(k):
                result = result / image
        return result

    def evaluate(self, point: Mapping[str, int], modulus: int) -> int:
        value = self.numerator.evaluate(point, modulus)
        for f, k in self.den.items():
            fv = f.evaluate(point, modulus)
            if fv == 0:
                raise DenominatorVanishes(f)
            value = value * pow(fv, -k, modulus) % modulus
        return value

    def __eq__(self, other):
        if isinstance(other, (LocalizedElement, Polynomial, int)):
            return self.equals(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        if not self.den:
            return f"LocalizedElement({self.numerator})"
        den = " * ".join(f"({f})^{k}" if k > 1 else f"({f})" for f, k in self.den.items())
        return f"LocalizedElement(({self.numerator}) / {den})"


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """a / b when b divides a exactly in the integer polynomial ring."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = a.ring
    lb = max(b.terms)
    cb = b.terms[lb]
    rest = [(m, c) for m, c in b.terms.items() if m != lb]
    p = dict(a.terms)
    quot: dict[int, int] = {}
    while p:
        m = max(p)
        c = p[m]
        if not ring.divides(lb, m) or c % cb:
            raise ValueError("inexact polynomial division")
        f = c // cb
        mm = m - lb
        quot[mm] = f
        del p[m]
        for bm, bc in rest:
            k = bm + mm
            v = p.get(k, 0) - f * bc
            if v:
                p[k] = v
            else:
                p.pop(k, None)
    return Polynomial(ring, quot)


def _excess(common: Mapping[Polynomial, int], have: Mapping[Polynomial, int]) -> dict:
    return {f: k - have.get(f, 0) for f, k in common.items() if k > have.get(f, 0)}


def _expand(ring: PolyRing, den: Mapping[Polynomial, int]) -> Polynomial:
    out = ring.one()
    for f, k in den.items():
        if k:
            out = out * f**k
    return out


def eval_hom(element, assignment: Mapping[str, int], modulus: int) -> int:
    """Image of a Polynomial or LocalizedElement under an evaluation map.

    Raises DenominatorVanishes if a designated denominator maps to zero,
    i.e. the evaluation does not extend to the localization.
    """
    if isinstance(element, int):
        return element % modulus
    return element.evaluate(assignment, modulus)


def loc_combine(a: LocalizedElement, b: LocalizedElement, op: str) -> LocalizedElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def substitute(p, mapping, target: PolyRing | None = None):
    return p.substitute(mapping, target)
