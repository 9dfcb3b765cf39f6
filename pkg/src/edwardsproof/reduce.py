"""Multivariate division with certificates, and a small Buchberger engine."""

from __future__ import annotations

import hashlib
import heapq
import itertools
import json
import random
from dataclasses import dataclass, replace
from math import gcd
from typing import Iterable, Sequence

from .polyring import MAX_EXP, Polynomial, PolyRing

# largest prime below 2**62; products of two residues fit in 124 bits
AUDIT_PRIME = 2**62 - 57


class ResourceBound(RuntimeError):
    """An instance is larger than the engine is configured to handle."""


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "lex"
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("repeated variable in order")

    def sequence(self, ring: PolyRing) -> tuple[str, ...]:
        """Full variable sequence: the declared prefix, then the rest in ring order."""
        for v in self.variables:
            if v not in ring.index:
                raise ValueError(f"order variable {v!r} not in {ring}")
        rest = tuple(n for n in ring.names if n not in self.variables)
        return self.variables + rest

    def key_for(self, ring: PolyRing):
        """Map packed monomials of ``ring`` to ints that compare like the order."""
        seq = self.sequence(ring)
        if self.kind == "lex" and seq == ring.names:
            return _identity
        shifts = [ring.shifts[ring.index[v]] for v in seq]
        cache: dict[int, int] = {}
        n = len(seq)
        if self.kind == "lex":

            def key(m: int) -> int:
                k = cache.get(m)
                if k is None:
                    k = 0
                    for s in shifts:
                        k = (k << 8) | ((m >> s) & 0xFF)
                    cache[m] = k
                return k

        else:
            rev = shifts[::-1]

            def key(m: int) -> int:
                k = cache.get(m)
                if k is None:
                    k = 0
                    deg = 0
                    for s in rev:
                        e = (m >> s) & 0xFF
                        deg += e
                        k = (k << 8) | (MAX_EXP - e)
                    k |= deg << (8 * n)
                    cache[m] = k
                return k

        return key

    def leading(self, p: Polynomial) -> tuple[int, int]:
        """(packed leading monomial, leading coefficient) of a nonzero polynomial."""
        if p.is_zero():
            raise ValueError("zero polynomial has no leading term")
        key = self.key_for(p.ring)
        m = max(p.terms, key=key)
        return m, p.terms[m]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "variables": list(self.variables)}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialOrder":
        return cls(data["kind"], tuple(data["variables"]))

    def __str__(self):
        return f"{self.kind}({','.join(self.variables)})"


def _identity(m: int) -> int:
    return m


def lex(*names: str) -> MonomialOrder:
    return MonomialOrder("lex", names)


def grevlex(*names: str) -> MonomialOrder:
    return MonomialOrder("grevlex", names)


@dataclass(frozen=True)
class ReductionCertificate:
    """scale * unit * dividend == sum(quotients[i] * divisors[i]) + remainder.

    ``scale`` is a nonzero integer (1 unless pseudo-division was needed) and
    ``unit`` an optional monomial in variables that are units of the
    coefficient ring, such as t when 1/t is adjoined.
    """

    dividend: Polynomial
    divisors: tuple[Polynomial, ...]
    quotients: tuple[Polynomial, ...]
    remainder: Polynomial
    order: MonomialOrder
    scale: int = 1
    unit: Polynomial | None = None

    @property
    def lhs(self) -> Polynomial:
        lhs = self.dividend * self.scale
        return lhs if self.unit is None else lhs * self.unit

    @property
    def ring(self) -> PolyRing:
        return self.dividend.ring

    @property
    def is_zero_remainder(self) -> bool:
        return self.remainder.is_zero()

    def to_dict(self) -> dict:
        text = lambda p: p.to_text(self.order)
        return {
            "ring": list(self.ring.names),
            "order": self.order.to_dict(),
            "scale": self.scale,
            "unit": None if self.unit is None else self.unit.to_text(),
            "dividend": text(self.dividend),
            "divisors": [text(d) for d in self.divisors],
            "quotients": [text(q) for q in self.quotients],
            "remainder": text(self.remainder),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    @classmethod
    def from_dict(cls, data: dict) -> "ReductionCertificate":
        ring = PolyRing(data["ring"])
        parse = ring.parse
        return cls(
            dividend=parse(data["dividend"]),
            divisors=tuple(parse(t) for t in data["divisors"]),
            quotients=tuple(parse(t) for t in data["quotients"]),
            remainder=parse(data["remainder"]),
            order=MonomialOrder.from_dict(data["order"]),
            scale=data.get("scale", 1),
            unit=None if data.get("unit") is None else parse(data["unit"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "ReductionCertificate":
        return cls.from_dict(json.loads(text))


def poly_reduce(
    r: Polynomial,
    divisors: Sequence[Polynomial],
    order: MonomialOrder,
    pseudo: bool = False,
) -> ReductionCertificate:
    """Naive multivariate division of ``r`` by ``divisors`` under ``order``.

    At each step the leading term of the running dividend is cancelled by the
    first divisor (in list order) whose leading monomial divides it, otherwise
    it moves to the remainder.  Coefficients stay integral: a leading
    coefficient that does not divide the term being cancelled raises
    ResourceBound, unless ``pseudo`` is set, in which case the whole identity
    is multiplied through and the factor recorded as the certificate scale.
    """
    if not divisors:
        raise ValueError("need at least one divisor")
    ring = r.ring
    for d in divisors:
        if d.ring != ring:
            raise ValueError("divisor from a different ring")
    key = order.key_for(ring)
    divides = ring.divides
    leads = []
    for i, d in enumerate(divisors):
        if d.is_zero():
            continue
        m = max(d.terms, key=key)
        leads.append((i, m, d.terms[m], list(d.terms.items())))

    p = dict(r.terms)
    by_key: dict[int, int] = {}
    heap: list[int] = []
    for m in p:
        k = key(m)
        by_key[k] = m
        heap.append(-k)
    heapq.heapify(heap)
    quots: list[dict[int, int]] = [{} for _ in divisors]
    rem: dict[int, int] = {}
    scale = 1

    while heap:
        k = -heapq.heappop(heap)
        m = by_key[k]
        c = p.get(m)
        if not c:
            continue
        for i, lm, lc, dterms in leads:
            if not divides(lm, m):
                continue
            if c % lc:
                if not pseudo:
                    raise ResourceBound(
                        f"leading coefficient {lc} does not divide {c}; integer division impossible"
                    )
                s = abs(lc) // gcd(c, lc)
                scale *= s
                for t in p:
                    p[t] *= s
                for q in quots:
                    for t in q:
                        q[t] *= s
                for t in rem:
                    rem[t] *= s
                c *= s
            f = c // lc
            mm = m - lm
            q = quots[i]
            v = q.get(mm, 0) + f
            if v:
                q[mm] = v
            else:
                del q[mm]
            for dm, dc in dterms:
                t = dm + mm
                old = p.get(t)
                if old is None:
                    p[t] = -f * dc
                    kt = key(t)
                    by_key[kt] = t
                    heapq.heappush(heap, -kt)
                else:
                    v = old - f * dc
                    if v:
                        p[t] = v
                    else:
                        del p[t]
            break
        else:
            rem[m] = c
            del p[m]

    return ReductionCertificate(
        dividend=r,
        divisors=tuple(divisors),
        quotients=tuple(Polynomial(ring, q) for q in quots),
        remainder=Polynomial(ring, rem),
        order=order,
        scale=scale,
    )


def remainder_is_reduced(cert: ReductionCertificate) -> bool:
    """No remainder monomial is divisible by a divisor's leading monomial."""
    ring = cert.ring
    leads = [cert.order.leading(d)[0] for d in cert.divisors if not d.is_zero()]
    return not any(ring.divides(lm, m) for m in cert.remainder.terms for lm in leads)


def certificate_identity_holds(cert: ReductionCertificate) -> bool:
    """Exact polynomial recheck of the certificate identity."""
    total = cert.remainder
    for q, d in zip(cert.quotients, cert.divisors):
        if q:
            total = total + q * d
    return cert.lhs == total


def random_eval_audit(
    cert: ReductionCertificate,
    trials: int = 100,
    seed: int = 0,
    modulus: int = AUDIT_PRIME,
) -> bool:
    """Check the certificate identity at ``trials`` random points mod ``modulus``."""
    rng = random.Random(seed)
    names = cert.ring.names
    for _ in range(trials):
        point = {n: rng.randrange(modulus) for n in names}
        lhs = cert.scale * cert.dividend.evaluate(point, modulus)
        if cert.unit is not None:
            lhs *= cert.unit.evaluate(point, modulus)
        rhs = cert.remainder.evaluate(point, modulus)
        for q, d in zip(cert.quotients, cert.divisors):
            if q:
                rhs += q.evaluate(point, modulus) * d.evaluate(point, modulus)
        if (lhs - rhs) % modulus:
            return False
    return True


def verify_certificate(
    cert: ReductionCertificate,
    trials: int = 100,
    seed: int = 0,
    modulus: int = AUDIT_PRIME,
) -> bool:
    """Exact recheck and random-evaluation recheck; both must hold."""
    if len(cert.quotients) != len(cert.divisors) or cert.scale == 0:
        return False
    return certificate_identity_holds(cert) and random_eval_audit(cert, trials, seed, modulus)


def reduces_to_zero(r: Polynomial, basis, order: MonomialOrder | None = None, pseudo: bool = False):
    """(remainder is zero, certificate) for ``r`` against a basis or divisor list."""
    if isinstance(basis, GroebnerBasis):
        order = order or basis.order
        divisors = basis.generators
        pseudo = True
    else:
        divisors = list(basis)
        if order is None:
            raise ValueError("an order is required for a plain divisor list")
    if r.is_zero():
        cert = ReductionCertificate(
            r, tuple(divisors), tuple(r.ring.zero() for _ in divisors), r.ring.zero(), order
        )
        return True, cert
    cert = poly_reduce(r, divisors, order, pseudo=pseudo)
    return cert.is_zero_remainder, cert


def candidate_orders(sequence: Sequence[str], limit: int = 800) -> Iterable[MonomialOrder]:
    """Lex on ``sequence``, grevlex on it, then lex on its permutations."""
    seq = tuple(sequence)
    yield lex(*seq)
    yield grevlex(*seq)
    for i, perm in enumerate(itertools.permutations(seq)):
        if i >= limit:
            return
        if perm != seq:
            yield lex(*perm)


def search_zero_reduction(
    r: Polynomial,
    divisors: Sequence[Polynomial],
    sequence: Sequence[str],
    unit: Polynomial | None = None,
    max_unit_power: int = 24,
    limit: int = 800,
) -> tuple[bool, ReductionCertificate, int]:
    """Try orders from :func:`candidate_orders` until a zero remainder appears.

    If ``unit`` is given (a variable that is invertible in the coefficient
    ring), each order is also tried on ``unit**k * r`` for k up to
    ``max_unit_power``; the extra factor gives division the headroom it would
    have if ``unit`` were a coefficient.  Returns (found, certificate,
    attempts).  The certificate, not the order that produced it, is the proof
    object; on failure the first (lex) certificate is returned.
    """
    powers = [None]
    if unit is not None:
        powers += [unit**k for k in range(1, max_unit_power + 1)]
    first = None
    attempts = 0
    for order in candidate_orders(sequence, limit):
        for u in powers:
            attempts += 1
            dividend = r if u is None else r * u
            ok, cert = reduces_to_zero(dividend, divisors, order)
            if u is not None:
                cert = replace(cert, dividend=r, unit=u)
            if ok:
                return True, cert, attempts
            if first is None:
                first = cert
    return False, first, attempts


# --------------------------------------------------------------------------
# Groebner bases


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis with a record of how each element was derived.

    For every k: scales[k] * generators[k] == sum_j cofactors[k][j] * inputs[j].
    """

    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    inputs: tuple[Polynomial, ...] = ()
    cofactors: tuple[tuple[Polynomial, ...], ...] = ()
    scales: tuple[int, ...] = ()
    pairs_processed: int = 0

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def membership_certificates(self) -> list[ReductionCertificate]:
        """Certificates that every basis element lies in the input ideal."""
        out = []
        ring = self.inputs[0].ring
        for g, s, cof in zip(self.generators, self.scales, self.cofactors):
            out.append(ReductionCertificate(g, self.inputs, cof, ring.zero(), self.order, s))
        return out

    def lift(self, cert: ReductionCertificate) -> ReductionCertificate:
        """Rewrite a zero-remainder certificate against the basis in terms of the inputs."""
        if not cert.is_zero_remainder:
            raise ValueError("only zero-remainder certificates can be lifted")
        ring = cert.ring
        big = 1
        for s in self.scales:
            big = big * s // gcd(big, s)
        quots = [ring.zero() for _ in self.inputs]
        for q, s, cof in zip(cert.quotients, self.scales, self.cofactors):
            if q.is_zero():
                continue
            qq = q * (big // s)
            for j, a in enumerate(cof):
                if a:
                    quots[j] = quots[j] + qq * a
        return ReductionCertificate(
            cert.dividend, self.inputs, tuple(quots), ring.zero(), cert.order, cert.scale * big, cert.unit
        )


@dataclass
class _Tracked:
    poly: Polynomial
    scale: int
    cof: list[Polynomial]
    lm: int = 0

    def normalize(self, order: MonomialOrder) -> None:
        p = self.poly
        lm, lc = order.leading(p)
        g = p.content()
        unit = -g if lc < 0 else g
        if unit != 1:
            self.poly = Polynomial(p.ring, {m: c // unit for m, c in p.terms.items()})
            self.scale *= unit
        if self.scale < 0:
            self.scale = -self.scale
            self.cof = [-a for a in self.cof]
        # strip any common integer factor of scale and cofactors
        h = self.scale
        for a in self.cof:
            if h == 1:
                break
            h = gcd(h, a.content())
        if h > 1:
            self.scale //= h
            self.cof = [Polynomial(a.ring, {m: c // h for m, c in a.terms.items()}) for a in self.cof]
        self.lm = lm


def _reduce_tracked(f: _Tracked, basis: list[_Tracked], order: MonomialOrder) -> _Tracked:
    cert = poly_reduce(f.poly, [b.poly for b in basis], order, pseudo=True)
    ring = f.poly.ring
    big = f.scale
    for b, q in zip(basis, cert.quotients):
        if q:
            big = big * b.scale // gcd(big, b.scale)
    cof = [a * (cert.scale * (big // f.scale)) for a in f.cof]
    for b, q in zip(basis, cert.quotients):
        if q.is_zero():
            continue
        qq = q * (big // b.scale)
        for j, a in enumerate(b.cof):
            if a:
                cof[j] = cof[j] - qq * a
    return _Tracked(cert.remainder, big, cof)


def _spoly(a: _Tracked, b: _Tracked, order: MonomialOrder) -> _Tracked:
    ring = a.poly.ring
    ca = a.poly.terms[a.lm]
    lb = b.poly.terms[b.lm]
    lcm_m = _lcm_monomial(ring, a.lm, b.lm)
    g = gcd(ca, lb)
    fa, fb = lb // g, ca // g
    ma, mb = lcm_m - a.lm, lcm_m - b.lm
    poly = a.poly.mul_term(ma, fa) - b.poly.mul_term(mb, fb)
    big = a.scale * b.scale // gcd(a.scale, b.scale)
    cof = []
    for xa, xb in zip(a.cof, b.cof):
        cof.append(xa.mul_term(ma, fa * (big // a.scale)) - xb.mul_term(mb, fb * (big // b.scale)))
    return _Tracked(poly, big, cof)


def _lcm_monomial(ring: PolyRing, a: int, b: int) -> int:
    ea, eb = ring.unpack(a), ring.unpack(b)
    return ring.pack(max(x, y) for x, y in zip(ea, eb))


def buchberger(
    gens: Sequence[Polynomial], order: MonomialOrder, max_pairs: int = 5000
) -> GroebnerBasis:
    """Reduced Groebner basis (over the rationals, integer-primitive elements).

    Uses the product and chain criteria to discard pairs.  Raises
    ResourceBound when more than ``max_pairs`` pairs would be processed.
    """
    gens = [g for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    n = len(gens)
    basis: list[_Tracked] = []
    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        cof = [ring.one() if i == j else ring.zero() for i in range(n)]
        t = _Tracked(g, 1, cof)
        t.normalize(order)
        basis.append(t)
    if not basis:
        raise ValueError("all generators are zero")

    pending: set[tuple[int, int]] = {(i, j) for j in range(len(basis)) for i in range(j)}
    key = order.key_for(ring)
    processed = 0
    while pending:
        i, j = min(pending, key=lambda ij: (key(_lcm_monomial(ring, basis[ij[0]].lm, basis[ij[1]].lm)), ij))
        pending.discard((i, j))
        a, b = basis[i], basis[j]
        lcm_m = _lcm_monomial(ring, a.lm, b.lm)
        if lcm_m == a.lm + b.lm:
            continue  # coprime leading monomials
        if _chain_criterion(ring, basis, i, j, lcm_m, pending):
            continue
        processed += 1
        if processed > max_pairs:
            raise ResourceBound(f"more than {max_pairs} S-pairs")
        s = _spoly(a, b, order)
        r = _reduce_tracked(s, basis, order)
        if r.poly.is_zero():
            continue
        r.normalize(order)
        k = len(basis)
        basis.append(r)
        pending.update((m, k) for m in range(k))

    reduced = _interreduce(basis, order)
    reduced.sort(key=lambda t: key(t.lm), reverse=True)
    return GroebnerBasis(
        generators=tuple(t.poly for t in reduced),
        order=order,
        inputs=tuple(gens),
        cofactors=tuple(tuple(t.cof) for t in reduced),
        scales=tuple(t.scale for t in reduced),
        pairs_processed=processed,
    )


def _chain_criterion(ring, basis, i, j, lcm_m, pending) -> bool:
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if not ring.divides(basis[k].lm, lcm_m):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _interreduce(basis: list[_Tracked], order: MonomialOrder) -> list[_Tracked]:
    ring = basis[0].poly.ring
    # drop elements whose leading monomial is divisible by another's
    keep: list[_Tracked] = []
    for idx, t in enumerate(basis):
        redundant = False
        for jdx, u in enumerate(basis):
            if idx == jdx:
                continue
            if ring.divides(u.lm, t.lm) and (u.lm != t.lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append(t)
    out = []
    for idx, t in enumerate(keep):
        others = [u for jdx, u in enumerate(keep) if jdx != idx]
        r = _reduce_tracked(t, others, order) if others else t
        r.normalize(order)
        out.append(r)
    return out


def is_groebner(basis: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Every S-polynomial of basis pairs reduces to zero against the basis."""
    basis = [b for b in basis if not b.is_zero()]
    if not basis:
        return True
    ring = basis[0].ring
    tracked = []
    for b in basis:
        t = _Tracked(b, 1, [])
        t.lm = order.leading(b)[0]
        tracked.append(t)
    for i, j in itertools.combinations(range(len(tracked)), 2):
        s = _spoly(tracked[i], tracked[j], order).poly
        if s.is_zero():
            continue
        if not poly_reduce(s, basis, order, pseudo=True).is_zero_remainder:
            return False
    return True
