"""Exact arithmetic in GF(p^n) for arbitrary prime p and extension degree n.

Elements are represented by integer codes 0 .. q-1 (q = p^n): the code of an
element with polynomial-basis coordinates (a_0, ..., a_{n-1}) over GF(p) is
sum(a_i * p^i).  Codes 0 and 1 are always the additive and multiplicative
identities.  A :class:`Field` object owns the modulus and performs all
arithmetic on raw codes; :class:`FieldElement` is a thin operator-overloading
wrapper for when ergonomics matter more than speed.

Fields used by the bundled reference data are available by name through
:func:`field_by_name` ("F8", "F9", "F16", "F25", plus small conveniences);
arbitrary moduli are accepted everywhere via :func:`field_new`.
"""

from __future__ import annotations

import os
import json
from dataclasses import dataclass

from .errors import (
    NonPrimeCharacteristic,
    OddCharacteristic,
    ReducibleModulus,
    MixedFields,
    ZeroElement,
    ZeroInverse,
)

# Fields at or below this size precompute full add/mul tables.
_TABLE_LIMIT = 128

_instances: dict[tuple, "Field"] = {}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- polynomial helpers over Z_p (integer coefficient lists, little-endian) --
# Used only for modulus validation, before any Field exists.

def _zp_strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _zp_divmod(p: int, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    r = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(r) >= len(b):
        c = (r[-1] * inv_lead) % p
        d = len(r) - len(b)
        q[d] = c
        for k, bk in enumerate(b):
            r[d + k] = (r[d + k] - c * bk) % p
        _zp_strip(r)
    return q, r


def _zp_monic_polys(p: int, deg: int):
    # ascending coefficient-code order for a fixed degree
    for tail in range(p ** deg):
        coeffs = []
        t = tail
        for _ in range(deg):
            coeffs.append(t % p)
            t //= p
        yield coeffs + [1]


def _find_modulus_factor(p: int, modulus: list[int]) -> list[int] | None:
    """Return a nontrivial monic factor of the modulus, or None if irreducible."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for g in _zp_monic_polys(p, d):
            _, r = _zp_divmod(p, modulus, g)
            if not r:
                return g
    return None


class Field:
    """GF(p^n) defined by a monic irreducible modulus over GF(p).

    All arithmetic methods take and return integer element codes.
    """

    __slots__ = (
        "p", "n", "q", "modulus",
        "_mul_table", "_inv_table", "_frob_tables", "_order_cache",
    )

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        if not _is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1:
            raise ValueError(
                f"modulus has {len(modulus) - 1 if modulus else 0} coefficients past "
                f"the constant; expected degree exactly {n}"
            )
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        factor = _find_modulus_factor(p, list(modulus))
        if factor is not None:
            raise ReducibleModulus(
                f"modulus {list(modulus)} is reducible over GF({p}); "
                f"factor {factor}",
                factor=factor,
            )
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = modulus
        self._mul_table: tuple[int, ...] | None = None
        self._inv_table: tuple[int, ...] | None = None
        self._frob_tables: tuple[tuple[int, ...], ...] | None = None
        self._order_cache: dict[int, int] = {}
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- encoding ---------------------------------------------------------

    def coeffs(self, code: int) -> tuple[int, ...]:
        """Polynomial-basis coordinates of a code, little-endian, length n."""
        out = []
        for _ in range(self.n):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def encode(self, coeffs) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (c % self.p)
        return code

    # -- raw code arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.encode((x + y) % self.p for x, y in zip(ca, cb))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.encode((-x) % self.p for x in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.n)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        for d in range(2 * self.n - 1, self.n - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for k in range(self.n + 1):
                    prod[d - self.n + k] = (prod[d - self.n + k] - c * self.modulus[k]) % self.p
        return self.encode(prod[: self.n])

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._mul_raw(a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        b = a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frob(self, a: int, k: int = 1) -> int:
        """a ** (p**k); k is reduced mod n since Frobenius has order n."""
        k %= self.n
        if self._frob_tables is not None:
            return self._frob_tables[k][a]
        return self.pow(a, self.p ** k)

    def sqrt2(self, a: int) -> int:
        """The unique square root of a, in characteristic 2."""
        if self.p != 2:
            raise OddCharacteristic("unique square roots require characteristic 2")
        # squaring is the Frobenius; its inverse is frob(n-1) applications
        return self.frob(a, self.n - 1)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element; divides q-1."""
        if a == 0:
            raise ZeroElement("0 has no multiplicative order")
        cached = self._order_cache.get(a)
        if cached is not None:
            return cached
        for d in _sorted_divisors(self.q - 1):
            if self.pow(a, d) == 1:
                self._order_cache[a] = d
                return d
        raise AssertionError("unreachable: a^(q-1) = 1 for nonzero a")

    # -- iteration and lookup -------------------------------------------------

    def element_codes(self) -> range:
        return range(self.q)

    def nonzero_codes(self) -> range:
        return range(1, self.q)

    def subfield_codes(self, d: int) -> list[int]:
        """Codes of the subfield GF(p^d) inside this field (requires d | n)."""
        if self.n % d != 0:
            raise ValueError(f"GF({self.p}^{d}) is not a subfield of GF({self.p}^{self.n})")
        return [a for a in range(self.q) if self.frob(a, d) == a]

    def element_of_order(self, k: int) -> int:
        """Smallest code with multiplicative order exactly k."""
        if (self.q - 1) % k != 0:
            raise ValueError(f"no element of order {k} in a group of order {self.q - 1}")
        for a in range(1, self.q):
            if self.order(a) == k:
                return a
        raise AssertionError("unreachable: cyclic group has elements of every dividing order")

    # -- wrappers ----------------------------------------------------------

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise MixedFields("element belongs to a different field")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"code {value} out of range for field of size {self.q}")
            return FieldElement(self, value)
        return FieldElement(self, self.encode(value))

    def elements(self):
        """All q elements exactly once, in increasing code order."""
        return [FieldElement(self, c) for c in range(self.q)]

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def generator(self) -> "FieldElement":
        """The class of x (code p) for n > 1, or the code 1 for prime fields."""
        return FieldElement(self, self.p if self.n > 1 else 1)

    # -- rendering ------------------------------------------------------------

    def to_poly_str(self, code: int, symbol: str = "a") -> str:
        """Render a code as a polynomial in the generator, e.g. 'b^3+b^2'."""
        if code == 0:
            return "0"
        coords = self.coeffs(code)
        terms = []
        for i in reversed(range(self.n)):
            c = coords[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(symbol if c == 1 else f"{c}{symbol}")
            else:
                terms.append(f"{symbol}^{i}" if c == 1 else f"{c}{symbol}^{i}")
        return "+".join(terms)

    def spec_string(self) -> str:
        """The `p^n:c0,...,cn` description accepted by :func:`field_from_string`."""
        return f"{self.p}^{self.n}:" + ",".join(str(c) for c in self.modulus)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.n}, modulus={list(self.modulus)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    # -- internals --------------------------------------------------------

    def _build_tables(self) -> None:
        q = self.q
        mul = []
        for a in range(q):
            for b in range(q):
                mul.append(self._mul_raw(a, b) if b >= a else mul[b * q + a])
        self._mul_table = tuple(mul)
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self.pow(a, q - 2)
        self._inv_table = tuple(inv)
        frobs = []
        for k in range(self.n):
            e = self.p ** k
            frobs.append(tuple(self.pow(a, e) for a in range(q)))
        self._frob_tables = tuple(frobs)


def _sorted_divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific field, identified by its integer code."""

    field: Field
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise MixedFields("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius(self, k: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frob(self.code, k))

    def sqrt(self) -> "FieldElement":
        return FieldElement(self.field, self.field.sqrt2(self.code))

    def multiplicative_order(self) -> int:
        return self.field.order(self.code)

    def __bool__(self) -> bool:
        return self.code != 0

    def __str__(self) -> str:
        return str(self.code)

    def poly_str(self, symbol: str = "a") -> str:
        return self.field.to_poly_str(self.code, symbol)

    def __repr__(self) -> str:
        return f"<{self.poly_str()} in GF({self.field.p}^{self.field.n})>"


# -- spec-level operations ---------------------------------------------------

def field_new(p: int, n: int, modulus) -> Field:
    """Construct (or fetch the cached) GF(p^n) with the given modulus.

    The modulus is a little-endian coefficient list of length n+1 with leading
    coefficient 1; irreducibility over GF(p) is verified constructively.
    """
    key = (p, n, tuple(int(c) % p for c in modulus))
    inst = _instances.get(key)
    if inst is None:
        inst = Field(p, n, key[2])
        _instances[key] = inst
    return inst


def field_from_string(text: str) -> Field:
    """Parse a `p^n:c0,c1,...,cn` field description (or a registry name)."""
    text = text.strip()
    if ":" not in text:
        return field_by_name(text)
    head, _, tail = text.partition(":")
    if "^" in head:
        p_str, _, n_str = head.partition("^")
        p, n = int(p_str), int(n_str)
    else:
        p, n = int(head), 1
    modulus = [int(c) for c in tail.split(",")]
    return field_new(p, n, modulus)


def mult_order(a: FieldElement) -> int:
    """Smallest r >= 1 with a^r = 1; divides q - 1."""
    return a.field.order(a.code)


def frobenius(a: FieldElement, k: int) -> FieldElement:
    """a ** (p**k); the identity map when k is a multiple of n."""
    return a.frobenius(k)


def sqrt_char2(a: FieldElement) -> FieldElement:
    """The unique b with b^2 = a, in characteristic 2 (equals a^(q/2))."""
    return a.sqrt()


def elements(field: Field) -> list[FieldElement]:
    """All q elements exactly once, in increasing canonical code order."""
    return field.elements()


# -- named registry ----------------------------------------------------------
# Moduli for F8, F9, F16, F25 are pinned so that named generators reproduce
# the bundled reference data symbol for symbol.

_REGISTRY_SPECS: dict[str, str] = {
    "F2": "2^1:0,1",
    "F3": "3^1:0,1",
    "F4": "2^2:1,1,1",
    "F5": "5^1:0,1",
    "F7": "7^1:0,1",
    "F8": "2^3:1,1,0,1",      # x^3 + x + 1
    "F9": "3^2:1,0,1",        # x^2 + 1
    "F16": "2^4:1,1,0,0,1",   # x^4 + x + 1
    "F25": "5^2:1,4,1",       # x^2 + 4x + 1
}

REGISTRY_ENV_VAR = "CONSTACIRC_FIELD_REGISTRY"


def field_by_name(name: str) -> Field:
    """Look up a named field; the env var may point at a JSON file of extras."""
    override = os.environ.get(REGISTRY_ENV_VAR)
    if override:
        with open(override, "r", encoding="utf-8") as fh:
            extra = json.load(fh)
        if name in extra:
            return field_from_string(extra[name])
    spec = _REGISTRY_SPECS.get(name)
    if spec is None:
        raise KeyError(f"unknown field name {name!r}; known: {sorted(_REGISTRY_SPECS)}")
    return field_from_string(spec)


def registry_names() -> list[str]:
    return sorted(_REGISTRY_SPECS)
