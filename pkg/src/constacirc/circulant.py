"""Consta-g-circulant and consta-theta_g-circulant matrix construction.

A spec is the tuple (field, m, g, lambda, h, theta_exp).  The matrix is built
row by row as the image of the monomial basis under the defining map: row i
holds the coordinates of x^(i*g) * h in F_q[x]/(x^m - lambda) (commutative
case) or of X^(i*g) * h under the skew product (theta_exp != 0).  Closed
forms exist only for lambda = 1, so map-based construction keeps one code
path for all four matrix families; :func:`g_circulant_entry` supplies the
lambda = 1 closed form as an independent cross-check.

Shifts g with g != 1 (mod ord(lambda)) do not give a well-defined map on
cosets; the spec still builds (the constructor is total) but carries
``well_defined = False`` so that census and theorem checks can skip it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    IndexOutOfRange,
    InvalidSpec,
    NotCirculantProduct,
    OddCharacteristic,
)
from .gf import Field, FieldElement, field_from_string
from .matrixcore import Matrix
from .polyring import QuotientRing
from .skewring import SkewQuotientRing, theta_order


@dataclass(frozen=True)
class CirculantSpec:
    """Defining data of a consta-(theta_)g-circulant matrix."""

    field: Field
    m: int
    g: int
    lam: int
    h: tuple[int, ...]
    theta_exp: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise InvalidSpec(f"m must be >= 1, got {self.m}")
        if not 1 <= self.g <= self.m:
            raise InvalidSpec(f"g must lie in 1..m, got g={self.g}, m={self.m}")
        if not 0 < self.lam < self.field.q:
            raise InvalidSpec(f"lambda code {self.lam} must be a nonzero field code")
        h = tuple(c.code if isinstance(c, FieldElement) else int(c) for c in self.h)
        if len(h) != self.m:
            raise InvalidSpec(f"h must have exactly m = {self.m} coefficients, got {len(h)}")
        if any(not 0 <= c < self.field.q for c in h):
            raise InvalidSpec("h coefficient code out of range")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "theta_exp", self.theta_exp % self.field.n)
        if self.theta_exp:
            s = theta_order(self.field, self.theta_exp)
            if self.m % s != 0:
                raise InvalidSpec(
                    f"skew spec invalid: ord(theta) = {s} does not divide m = {self.m}")
            if self.field.frob(self.lam, self.theta_exp) != self.lam:
                raise InvalidSpec("skew spec invalid: lambda is not fixed by theta")

    @property
    def is_skew(self) -> bool:
        return self.theta_exp != 0

    @property
    def well_defined(self) -> bool:
        """Whether g = 1 (mod ord(lambda)), so the defining map respects cosets."""
        r = self.field.order(self.lam)
        return self.g % r == 1 % r

    def ring(self):
        if self.is_skew:
            return SkewQuotientRing(self.field, self.theta_exp, self.m, self.lam)
        return QuotientRing(self.field, self.m, self.lam)

    def h_element(self):
        return self.ring().element(self.h)

    def with_h(self, h) -> "CirculantSpec":
        return CirculantSpec(self.field, self.m, self.g, self.lam, tuple(h), self.theta_exp)

    def to_json(self) -> dict:
        return {
            "field": self.field.spec_string(),
            "m": self.m,
            "g": self.g,
            "lambda": self.lam,
            "h": list(self.h),
            "theta_exp": self.theta_exp,
            "well_defined": self.well_defined,
            "kind": classify(self),
        }

    def to_text(self) -> str:
        return (f"q={self.field.spec_string()};m={self.m};g={self.g};"
                f"lambda={self.lam};h={','.join(str(c) for c in self.h)};"
                f"theta={self.theta_exp}")


def parse_spec(text: str) -> CirculantSpec:
    """Parse `q=<field>;m=<int>;g=<int>;lambda=<code>;h=<codes>;theta=<k>`."""
    parts = {}
    for chunk in text.strip().split(";"):
        if not chunk:
            continue
        key, _, val = chunk.partition("=")
        parts[key.strip()] = val.strip()
    missing = {"q", "m", "g", "lambda", "h"} - set(parts)
    if missing:
        raise InvalidSpec(f"spec string missing fields: {sorted(missing)}")
    fld = field_from_string(parts["q"])
    h = tuple(int(c) for c in parts["h"].split(","))
    return CirculantSpec(
        field=fld,
        m=int(parts["m"]),
        g=int(parts["g"]),
        lam=int(parts["lambda"]),
        h=h,
        theta_exp=int(parts.get("theta", "0")),
    )


def build(spec: CirculantSpec) -> Matrix:
    """Matrix of the defining map in the monomial basis: row i is the
    coordinate vector of x^(i*g) * h (skew product when theta_exp != 0)."""
    ring = spec.ring()
    h = ring.element(spec.h)
    rows = []
    for i in range(spec.m):
        rows.append(ring.mul(ring.x_power(i * spec.g), h).coeffs)
    return Matrix(spec.field, rows)


def g_circulant_entry(h, m: int, g: int, i: int, j: int):
    """Closed-form entry a_{i,j} = h_{(j - i*g) mod m} of a g-circulant
    (lambda = 1 case); cross-checks the map-based construction."""
    if not 0 <= i < m or not 0 <= j < m:
        raise IndexOutOfRange(f"entry ({i}, {j}) outside a {m}x{m} matrix")
    h = tuple(h)
    if len(h) != m:
        raise IndexOutOfRange(f"h must have m = {m} coefficients")
    return h[(j - i * g) % m]


def classify(spec: CirculantSpec) -> str:
    """Tag by (lambda, g, theta) pattern."""
    if spec.is_skew:
        return "consta-theta-g-circulant"
    if spec.lam != 1:
        return "consta-g-circulant"
    if spec.g == 1:
        return "circulant"
    if spec.g == spec.m - 1:
        return "left-circulant"
    return "g-circulant"


def product_shift_law(s1: CirculantSpec, s2: CirculantSpec) -> tuple[Matrix, CirculantSpec]:
    """Multiply two built matrices and recover the product's spec.

    The product of well-defined specs with shifts g1, g2 should again be
    circulant with shift g1*g2 (mod m); the recovery reads the product's
    first row as h and validates the full row law, raising
    NotCirculantProduct with a witness entry when validation fails.
    """
    if (s1.field, s1.m, s1.lam, s1.theta_exp) != (s2.field, s2.m, s2.lam, s2.theta_exp):
        raise InvalidSpec("specs must share field, m, lambda and theta")
    if not (s1.well_defined and s2.well_defined):
        raise InvalidSpec("product law requires both specs well-defined")
    product = build(s1) * build(s2)
    g_new = ((s1.g * s2.g - 1) % s1.m) + 1
    recovered = CirculantSpec(
        s1.field, s1.m, g_new, s1.lam, product.entries[0], s1.theta_exp)
    rebuilt = build(recovered)
    if rebuilt != product:
        for i in range(s1.m):
            for j in range(s1.m):
                if rebuilt.entries[i][j] != product.entries[i][j]:
                    raise NotCirculantProduct(
                        f"product is not consta-{g_new}-circulant: "
                        f"entry ({i},{j}) is {product.entries[i][j]}, "
                        f"row law gives {rebuilt.entries[i][j]}",
                        witness=(i, j, product.entries[i][j], rebuilt.entries[i][j]),
                    )
    return product, recovered


def hadamard_power(spec: CirculantSpec, s: int) -> CirculantSpec:
    """Coefficient-wise 2^s power of h (characteristic 2 only).

    In characteristic 2 the map c -> c^(2^s) is the s-fold Frobenius, so all
    other spec fields are unchanged and lambda = 1 specs keep their class.
    """
    if spec.field.p != 2:
        raise OddCharacteristic("Hadamard 2^s powers require characteristic 2")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    F = spec.field
    new_h = tuple(F.frob(c, s % F.n) for c in spec.h)
    return spec.with_h(new_h)
