"""Dense polynomials over F_q and the quotient rings F_q[x]/(x^m - lambda).

Polynomials are canonical: the coefficient list carries no trailing zeros, so
the zero polynomial is the empty list and ``degree`` returns None for it
(callers test :meth:`Poly.is_zero` instead of comparing a sentinel integer).
Quotient elements always hold the unique representative of degree < m.

Factorization is deterministic trial division: monic candidate divisors are
enumerated in (degree, coefficient-code) order, so factor lists come out
sorted and reproducible run to run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import (
    ConstantPolynomial,
    DivisionByZeroPoly,
    MixedFields,
    MixedRings,
    NotAUnit,
    ZeroLambda,
)
from .gf import Field, FieldElement


def _codes(field: Field, coeffs) -> tuple[int, ...]:
    out = []
    for c in coeffs:
        if isinstance(c, FieldElement):
            if c.field != field:
                raise MixedFields("coefficient from a different field")
            out.append(c.code)
        else:
            code = int(c)
            if not 0 <= code < field.q:
                raise ValueError(f"coefficient code {code} out of range")
            out.append(code)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Polynomial over a field, little-endian coefficient codes, canonical."""

    field: Field
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field: Field, coeffs) -> "Poly":
        return Poly(field, _codes(field, coeffs))

    @staticmethod
    def zero(field: Field) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def one(field: Field) -> "Poly":
        return Poly(field, (1,))

    @staticmethod
    def x_power(field: Field, e: int, scale: int = 1) -> "Poly":
        if scale == 0:
            return Poly(field, ())
        return Poly(field, (0,) * e + (scale,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def code(self) -> int:
        """Canonical integer encoding sum(code(c_i) * q^i); orders polynomials."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.field.q + c
        return v

    def sort_key(self) -> tuple[int, int]:
        return (len(self.coeffs), self.code())

    def evaluate(self, a: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def monic(self) -> tuple["Poly", int]:
        """Monic rescaling; returns (monic poly, the unit that was divided out)."""
        if self.is_zero():
            return self, 1
        lead = self.coeffs[-1]
        if lead == 1:
            return self, 1
        inv = self.field.inv(lead)
        return Poly(self.field, tuple(self.field.mul(c, inv) for c in self.coeffs)), lead

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, _codes(F, out))

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, _codes(F, out))

    def scale(self, c: int) -> "Poly":
        F = self.field
        if c == 0:
            return Poly(F, ())
        return Poly(F, tuple(F.mul(x, c) for x in self.coeffs))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def _check(self, other: "Poly") -> None:
        if self.field != other.field:
            raise MixedFields("polynomials over different fields")


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division a = q*b + r with deg r < deg b."""
    a._check(b)
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    F = a.field
    r = list(a.coeffs)
    db = len(b.coeffs)
    q = [0] * max(0, len(r) - db + 1)
    inv_lead = F.inv(b.coeffs[-1])
    while len(r) >= db:
        c = F.mul(r[-1], inv_lead)
        d = len(r) - db
        q[d] = c
        for k, bk in enumerate(b.coeffs):
            r[d + k] = F.sub(r[d + k], F.mul(c, bk))
        while r and r[-1] == 0:
            r.pop()
    return Poly(F, _codes(F, q)), Poly(F, tuple(r))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    a._check(b)
    x, y = a, b
    while not y.is_zero():
        _, r = poly_divmod(x, y)
        x, y = y, r
    return x.monic()[0]


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic."""
    a._check(b)
    F = a.field
    r0, r1 = a, b
    u0, u1 = Poly.one(F), Poly.zero(F)
    v0, v1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    g, lead = r0.monic()
    if lead != 1:
        inv = F.inv(lead)
        u0, v0 = u0.scale(inv), v0.scale(inv)
    return g, u0, v0


def is_irreducible(f: Poly) -> bool:
    """True iff f has no monic divisor of degree in [1, deg f / 2]."""
    if f.is_zero() or f.degree == 0:
        raise ConstantPolynomial("irreducibility is defined for degree >= 1")
    deg = f.degree
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(f.field, d):
            if poly_divmod(f, g)[1].is_zero():
                return False
    return True


def monic_polys(field: Field, deg: int) -> Iterator[Poly]:
    """All monic polynomials of the given degree, in coefficient-code order."""
    for tail_code in range(field.q ** deg):
        coeffs = []
        t = tail_code
        for _ in range(deg):
            coeffs.append(t % field.q)
            t //= field.q
        yield Poly(field, tuple(coeffs) + (1,))


@dataclass(frozen=True)
class Factorization:
    """Complete factorization: scalar * product of f_i^{e_i}, f_i monic irreducible."""

    scalar: int
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        if not self.factors:
            raise ValueError("empty factorization cannot be expanded without a field")
        field = self.factors[0][0].field
        acc = Poly(field, (self.scalar,))
        for f, e in self.factors:
            for _ in range(e):
                acc = acc * f
        return acc

    def __str__(self) -> str:
        parts = []
        if self.scalar != 1:
            parts.append(str(self.scalar))
        for f, e in self.factors:
            s = f"({f})"
            parts.append(s if e == 1 else f"{s}^{e}")
        return " * ".join(parts) if parts else "1"


def factor(f: Poly) -> Factorization:
    """Factor into monic irreducibles by deterministic trial division.

    Factors are returned sorted by (degree, coefficient code); multiplying the
    result back together reproduces the input exactly.
    """
    if f.is_zero() or f.degree == 0:
        raise ConstantPolynomial("factorization is defined for degree >= 1")
    rest, scalar = f.monic()
    found: list[Poly] = []
    d = 1
    while rest.degree and rest.degree >= 1:
        if d > rest.degree // 2:
            found.append(rest)
            break
        hit = False
        for g in monic_polys(f.field, d):
            q, r = poly_divmod(rest, g)
            if r.is_zero():
                found.append(g)
                rest = q
                hit = True
                break
        if not hit:
            d += 1
    found.sort(key=Poly.sort_key)
    grouped: list[tuple[Poly, int]] = []
    for g in found:
        if grouped and grouped[-1][0] == g:
            grouped[-1] = (g, grouped[-1][1] + 1)
        else:
            grouped.append((g, 1))
    return Factorization(scalar, tuple(grouped))


# -- quotient rings F_q[x]/(x^m - lambda) -------------------------------------

class QuotientRing:
    """F_q[x]/(x^m - lambda) with lambda nonzero; elements are length-m vectors."""

    def __init__(self, field: Field, m: int, lam: int):
        if m < 1:
            raise ValueError(f"ring length must be >= 1, got {m}")
        lam = int(lam)
        if lam == 0:
            raise ZeroLambda("lambda must be nonzero")
        self.field = field
        self.m = m
        self.lam = lam

    def modulus_poly(self) -> Poly:
        return Poly(self.field, _codes(
            self.field, [self.field.neg(self.lam)] + [0] * (self.m - 1) + [1]))

    def element(self, coeffs) -> "QuotientElement":
        raw = []
        for c in coeffs:
            raw.append(c.code if isinstance(c, FieldElement) else int(c))
        if len(raw) > self.m:
            return self.reduce_poly(Poly.make(self.field, raw))
        raw += [0] * (self.m - len(raw))
        return QuotientElement(self, tuple(raw))

    def from_code(self, code: int) -> "QuotientElement":
        coeffs = []
        for _ in range(self.m):
            coeffs.append(code % self.field.q)
            code //= self.field.q
        return QuotientElement(self, tuple(coeffs))

    def zero(self) -> "QuotientElement":
        return QuotientElement(self, (0,) * self.m)

    def one(self) -> "QuotientElement":
        return QuotientElement(self, (1,) + (0,) * (self.m - 1))

    def x_power(self, e: int, scale: int = 1) -> "QuotientElement":
        """The residue of scale * x^e: lambda^(e // m) lands on position e % m."""
        F = self.field
        c = F.mul(scale, F.pow(self.lam, e // self.m))
        coeffs = [0] * self.m
        coeffs[e % self.m] = c
        return QuotientElement(self, tuple(coeffs))

    def reduce_poly(self, p: Poly) -> "QuotientElement":
        F = self.field
        out = [0] * self.m
        for e, c in enumerate(p.coeffs):
            if c:
                folded = F.mul(c, F.pow(self.lam, e // self.m))
                out[e % self.m] = F.add(out[e % self.m], folded)
        return QuotientElement(self, tuple(out))

    def lift(self, a: "QuotientElement") -> Poly:
        return Poly(self.field, _codes(self.field, a.coeffs))

    def mul(self, a: "QuotientElement", b: "QuotientElement") -> "QuotientElement":
        self._check(a)
        self._check(b)
        F, m = self.field, self.m
        out = [0] * m
        lam = self.lam
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        e = i + j
                        c = F.mul(x, y)
                        if e >= m:
                            c = F.mul(c, lam)
                            e -= m
                        out[e] = F.add(out[e], c)
        return QuotientElement(self, tuple(out))

    def inverse(self, a: "QuotientElement") -> "QuotientElement":
        """Inverse via extended Euclid; raises NotAUnit with the gcd witness."""
        self._check(a)
        g, u, _ = poly_xgcd(self.lift(a), self.modulus_poly())
        if g.degree != 0:
            raise NotAUnit(f"gcd with modulus is {g}", gcd=g)
        # g is monic of degree 0, i.e. exactly 1
        return self.reduce_poly(u)

    def is_unit(self, a: "QuotientElement") -> bool:
        g = poly_gcd(self.lift(a), self.modulus_poly())
        return g.degree == 0

    def substitute(self, a: "QuotientElement", g: int) -> "QuotientElement":
        """Map sum(a_i x^i) to sum(a_i x^(i*g)), folding with x^m = lambda."""
        if g < 0:
            raise ValueError("substitution power must be >= 0")
        F, m = self.field, self.m
        out = [0] * m
        for i, c in enumerate(a.coeffs):
            if c:
                e = i * g
                folded = F.mul(c, F.pow(self.lam, e // m))
                out[e % m] = F.add(out[e % m], folded)
        return QuotientElement(self, tuple(out))

    def substitution_well_defined(self, g: int) -> bool:
        """Whether x -> x^g respects cosets, i.e. g = 1 (mod ord(lambda))."""
        return g % self.field.order(self.lam) == 1 % self.field.order(self.lam)

    def elements(self) -> Iterator["QuotientElement"]:
        """All q^m residues in canonical code order."""
        for codes in itertools.product(range(self.field.q), repeat=self.m):
            yield QuotientElement(self, codes)

    def units(self) -> Iterator["QuotientElement"]:
        for a in self.elements():
            if self.is_unit(a):
                yield a

    def size(self) -> int:
        return self.field.q ** self.m

    def _check(self, a: "QuotientElement") -> None:
        if a.ring != self:
            raise MixedRings("element from a different quotient ring")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuotientRing)
            and (self.field, self.m, self.lam) == (other.field, other.m, other.lam)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.m, self.lam))

    def __repr__(self) -> str:
        return f"GF({self.field.p}^{self.field.n})[x]/(x^{self.m} - {self.lam})"


@dataclass(frozen=True)
class QuotientElement:
    """Canonical degree-< m representative in a quotient ring."""

    ring: QuotientRing
    coeffs: tuple[int, ...]

    def __mul__(self, other: "QuotientElement") -> "QuotientElement":
        return self.ring.mul(self, other)

    def __add__(self, other: "QuotientElement") -> "QuotientElement":
        self.ring._check(other)
        F = self.ring.field
        return QuotientElement(
            self.ring, tuple(F.add(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QuotientElement") -> "QuotientElement":
        self.ring._check(other)
        F = self.ring.field
        return QuotientElement(
            self.ring, tuple(F.sub(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def inverse(self) -> "QuotientElement":
        return self.ring.inverse(self)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def code(self) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.ring.field.q + c
        return v

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def quotient_mul(a: QuotientElement, b: QuotientElement) -> QuotientElement:
    return a.ring.mul(a, b)


def quotient_inverse(a: QuotientElement) -> QuotientElement:
    return a.ring.inverse(a)


def hamming_weight(a) -> int:
    """Number of nonzero coefficients of the canonical representative."""
    if isinstance(a, QuotientElement):
        return a.weight()
    if isinstance(a, Poly):
        return sum(1 for c in a.coeffs if c)
    raise TypeError(f"expected Poly or QuotientElement, got {type(a).__name__}")


def substitute_power(a: QuotientElement, g: int) -> QuotientElement:
    return a.ring.substitute(a, g)


def divides_condition(m: int, g: int, lam: FieldElement) -> bool:
    """Whether x^m - lam divides x^(m*g) - lam; holds iff g = 1 (mod ord(lam)).

    Cross-checkable by actual polynomial division (the tests do exactly that).
    """
    if lam.code == 0:
        raise ZeroLambda("lambda must be nonzero")
    if m < 1 or g < 1:
        raise ValueError("m and g must be >= 1")
    r = lam.field.order(lam.code)
    return g % r == 1 % r


class UnitsCount(NamedTuple):
    """Both readings of the invertible-residue count; callers choose."""

    as_stated: int   # product of (q^deg - 1) over factor occurrences
    local_ring: int  # product of q^((e-1) deg) (q^deg - 1); equals the true count


def units_count(ring: QuotientRing) -> UnitsCount:
    """Count units of F_q[x]/(x^m - lambda) from the factorization of x^m - lambda.

    ``as_stated`` applies the distinct-factor product to every factor
    occurrence (repeated factors are treated as if they were distinct), which
    is how the bundled reference table evaluates it.  ``local_ring`` is the
    exact unit count of the product of local rings; the two agree exactly when
    x^m - lambda is squarefree.
    """
    q = ring.field.q
    fac = factor(ring.modulus_poly())
    as_stated = 1
    local = 1
    for f, e in fac.factors:
        d = len(f.coeffs) - 1
        as_stated *= (q ** d - 1) ** e
        local *= q ** ((e - 1) * d) * (q ** d - 1)
    return UnitsCount(as_stated, local)
