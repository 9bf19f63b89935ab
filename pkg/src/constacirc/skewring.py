"""The skew polynomial ring F_q[X; theta] and its quotients by X^m - lambda.

theta is restricted to Frobenius powers a -> a^(p^k) (every automorphism of
GF(p^n) has this form), so a single integer ``theta_exp`` pins the twist.
Coefficients sit on the LEFT of powers of X and multiplication follows
X * a = theta(a) X, making the ring noncommutative whenever theta is not the
identity.  The quotient by X^m - lambda exists only when the ideal is
two-sided: ord(theta) | m and theta(lambda) = lambda, enforced at ring
construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import DivisionByZeroPoly, InvalidSpec, MixedRings, NotAUnit
from .gf import Field, FieldElement


def theta_order(field: Field, theta_exp: int) -> int:
    """Order of the automorphism a -> a^(p^theta_exp) on GF(p^n)."""
    return field.n // gcd(field.n, theta_exp % field.n)


def _codes(field: Field, coeffs) -> tuple[int, ...]:
    out = []
    for c in coeffs:
        out.append(c.code if isinstance(c, FieldElement) else int(c))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class SkewPoly:
    """Element of F_q[X; theta]: little-endian left coefficients, canonical."""

    field: Field
    theta_exp: int
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field: Field, theta_exp: int, coeffs) -> "SkewPoly":
        return SkewPoly(field, theta_exp % field.n, _codes(field, coeffs))

    @staticmethod
    def zero(field: Field, theta_exp: int) -> "SkewPoly":
        return SkewPoly(field, theta_exp % field.n, ())

    @staticmethod
    def one(field: Field, theta_exp: int) -> "SkewPoly":
        return SkewPoly(field, theta_exp % field.n, (1,))

    @staticmethod
    def x_power(field: Field, theta_exp: int, e: int, scale: int = 1) -> "SkewPoly":
        if scale == 0:
            return SkewPoly(field, theta_exp % field.n, ())
        return SkewPoly(field, theta_exp % field.n, (0,) * e + (scale,))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def twist(self, a: int, times: int) -> int:
        """Apply theta^times to a coefficient code."""
        return self.field.frob(a, (times * self.theta_exp) % self.field.n)

    def _check(self, other: "SkewPoly") -> None:
        if self.field != other.field or self.theta_exp != other.theta_exp:
            raise MixedRings("skew polynomials from different rings")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return SkewPoly(F, self.theta_exp, _codes(F, out))

    def __neg__(self) -> "SkewPoly":
        F = self.field
        return SkewPoly(F, self.theta_exp, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        """Skew product: (a_i X^i)(b_j X^j) = a_i theta^i(b_j) X^(i+j)."""
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return SkewPoly(F, self.theta_exp, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, self.twist(y, i)))
        return SkewPoly(F, self.theta_exp, _codes(F, out))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"


def skew_mul(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    return a * b


def is_central(f: SkewPoly) -> bool:
    """Central iff every nonzero coefficient index is a multiple of ord(theta)
    and the coefficient itself is fixed by theta."""
    s = theta_order(f.field, f.theta_exp)
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        if i % s != 0:
            return False
        if f.field.frob(c, f.theta_exp % f.field.n) != c:
            return False
    return True


def skew_divmod_right(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Right division a = q * b + r with deg r < deg b."""
    a._check(b)
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero skew polynomial")
    F = a.field
    k = a.theta_exp
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    blead = b.coeffs[-1]
    q = [0] * max(0, len(r) - db)
    while len(r) - 1 >= db and r:
        d = len(r) - 1 - db
        # leading term of (c X^d) * b is c theta^d(blead) X^(d+db)
        c = F.mul(r[-1], F.inv(F.frob(blead, (d * k) % F.n)))
        q[d] = c
        for j, bj in enumerate(b.coeffs):
            if bj:
                r[d + j] = F.sub(r[d + j], F.mul(c, F.frob(bj, (d * k) % F.n)))
        while r and r[-1] == 0:
            r.pop()
    return SkewPoly(F, k, _codes(F, q)), SkewPoly(F, k, tuple(r))


def skew_divmod_left(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Left division a = b * q + r with deg r < deg b."""
    a._check(b)
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero skew polynomial")
    F = a.field
    k = a.theta_exp
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    blead_inv = F.inv(b.coeffs[-1])
    q = [0] * max(0, len(r) - db)
    while len(r) - 1 >= db and r:
        d = len(r) - 1 - db
        # leading term of b * (c X^d) is blead theta^db(c) X^(db+d)
        t = F.mul(blead_inv, r[-1])
        c = F.frob(t, (-db * k) % F.n)
        q[d] = c
        for j, bj in enumerate(b.coeffs):
            if bj:
                r[j + d] = F.sub(r[j + d], F.mul(bj, F.frob(c, (j * k) % F.n)))
        while r and r[-1] == 0:
            r.pop()
    return SkewPoly(F, k, _codes(F, q)), SkewPoly(F, k, tuple(r))


class SkewQuotientRing:
    """F_q[X; theta]/(X^m - lambda); requires ord(theta) | m and theta(lambda) = lambda."""

    def __init__(self, field: Field, theta_exp: int, m: int, lam: int):
        theta_exp %= field.n
        if m < 1:
            raise InvalidSpec(f"ring length must be >= 1, got {m}")
        if lam == 0:
            raise InvalidSpec("lambda must be nonzero")
        s = theta_order(field, theta_exp)
        if m % s != 0:
            raise InvalidSpec(
                f"ideal (X^{m} - {lam}) is not two-sided: ord(theta) = {s} does not divide m = {m}")
        if field.frob(lam, theta_exp) != lam:
            raise InvalidSpec(
                f"ideal (X^{m} - {lam}) is not two-sided: lambda = {lam} is not fixed by theta")
        self.field = field
        self.theta_exp = theta_exp
        self.m = m
        self.lam = lam

    def modulus_poly(self) -> SkewPoly:
        return SkewPoly.make(
            self.field, self.theta_exp,
            [self.field.neg(self.lam)] + [0] * (self.m - 1) + [1])

    def element(self, coeffs) -> "SkewQuotientElement":
        raw = []
        for c in coeffs:
            raw.append(c.code if isinstance(c, FieldElement) else int(c))
        if len(raw) > self.m:
            return self.reduce_poly(SkewPoly.make(self.field, self.theta_exp, raw))
        raw += [0] * (self.m - len(raw))
        return SkewQuotientElement(self, tuple(raw))

    def from_code(self, code: int) -> "SkewQuotientElement":
        coeffs = []
        for _ in range(self.m):
            coeffs.append(code % self.field.q)
            code //= self.field.q
        return SkewQuotientElement(self, tuple(coeffs))

    def zero(self) -> "SkewQuotientElement":
        return SkewQuotientElement(self, (0,) * self.m)

    def one(self) -> "SkewQuotientElement":
        return SkewQuotientElement(self, (1,) + (0,) * (self.m - 1))

    def x_power(self, e: int, scale: int = 1) -> "SkewQuotientElement":
        F = self.field
        c = F.mul(scale, F.pow(self.lam, e // self.m))
        coeffs = [0] * self.m
        coeffs[e % self.m] = c
        return SkewQuotientElement(self, tuple(coeffs))

    def lift(self, a: "SkewQuotientElement") -> SkewPoly:
        return SkewPoly.make(self.field, self.theta_exp, a.coeffs)

    def reduce_poly(self, p: SkewPoly) -> "SkewQuotientElement":
        # X^m - lambda is central, so folding X^e = lambda^(e//m) X^(e%m)
        # agrees with right division by the modulus.
        F = self.field
        out = [0] * self.m
        for e, c in enumerate(p.coeffs):
            if c:
                folded = F.mul(c, F.pow(self.lam, e // self.m))
                out[e % self.m] = F.add(out[e % self.m], folded)
        return SkewQuotientElement(self, tuple(out))

    def mul(self, a: "SkewQuotientElement", b: "SkewQuotientElement") -> "SkewQuotientElement":
        self._check(a)
        self._check(b)
        F, m, k = self.field, self.m, self.theta_exp
        out = [0] * m
        lam = self.lam
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        e = i + j
                        c = F.mul(x, F.frob(y, (i * k) % F.n))
                        if e >= m:
                            c = F.mul(c, lam)
                            e -= m
                        out[e] = F.add(out[e], c)
        return SkewQuotientElement(self, tuple(out))

    def inverse(self, a: "SkewQuotientElement") -> "SkewQuotientElement":
        """Two-sided inverse via the right extended Euclidean algorithm."""
        self._check(a)
        F = self.field
        r0, r1 = self.lift(a), self.modulus_poly()
        u0 = SkewPoly.one(F, self.theta_exp)
        u1 = SkewPoly.zero(F, self.theta_exp)
        while not r1.is_zero():
            q, r = skew_divmod_right(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, u0 - q * u1
        if r0.degree != 0:
            raise NotAUnit(f"right gcd with modulus is {r0}", gcd=r0)
        scale = SkewPoly.make(F, self.theta_exp, [F.inv(r0.coeffs[0])])
        inv = self.reduce_poly(scale * u0)
        if self.mul(inv, a) != self.one() or self.mul(a, inv) != self.one():
            raise NotAUnit("one-sided inverse did not verify two-sided")
        return inv

    def is_unit(self, a: "SkewQuotientElement") -> bool:
        try:
            self.inverse(a)
            return True
        except NotAUnit:
            return False

    def substitute(self, a: "SkewQuotientElement", g: int) -> "SkewQuotientElement":
        """Map sum(a_i X^i) to sum(a_i X^(i*g)); coefficients are not twisted."""
        if g < 0:
            raise ValueError("substitution power must be >= 0")
        F, m = self.field, self.m
        out = [0] * m
        for i, c in enumerate(a.coeffs):
            if c:
                e = i * g
                folded = F.mul(c, F.pow(self.lam, e // m))
                out[e % m] = F.add(out[e % m], folded)
        return SkewQuotientElement(self, tuple(out))

    def elements(self) -> Iterator["SkewQuotientElement"]:
        for codes in itertools.product(range(self.field.q), repeat=self.m):
            yield SkewQuotientElement(self, codes)

    def _check(self, a: "SkewQuotientElement") -> None:
        if a.ring != self:
            raise MixedRings("element from a different skew quotient ring")

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewQuotientRing) and (
            (self.field, self.theta_exp, self.m, self.lam)
            == (other.field, other.theta_exp, other.m, other.lam)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.theta_exp, self.m, self.lam))

    def __repr__(self) -> str:
        return (f"GF({self.field.p}^{self.field.n})[X;theta^{self.theta_exp}]"
                f"/(X^{self.m} - {self.lam})")


@dataclass(frozen=True)
class SkewQuotientElement:
    ring: SkewQuotientRing
    coeffs: tuple[int, ...]

    def __mul__(self, other: "SkewQuotientElement") -> "SkewQuotientElement":
        return self.ring.mul(self, other)

    def __add__(self, other: "SkewQuotientElement") -> "SkewQuotientElement":
        self.ring._check(other)
        F = self.ring.field
        return SkewQuotientElement(
            self.ring, tuple(F.add(x, y) for x, y in zip(self.coeffs, other.coeffs)))

    def inverse(self) -> "SkewQuotientElement":
        return self.ring.inverse(self)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


def skew_quotient_mul(a: SkewQuotientElement, b: SkewQuotientElement) -> SkewQuotientElement:
    return a.ring.mul(a, b)


def skew_quotient_inverse(a: SkewQuotientElement) -> SkewQuotientElement:
    return a.ring.inverse(a)


def skew_substitute_power(a: SkewQuotientElement, g: int) -> SkewQuotientElement:
    return a.ring.substitute(a, g)
