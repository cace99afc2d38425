"""Base coefficient domains: Z, Z[1/N], and GF(2^k).

Every higher-level object (involutive ring, module, Tate group) is a free
module over one of these three kinds of base.  Scalars are plain Python
values: ``int`` over Z, ``fractions.Fraction`` over Z[1/N] (denominators
restricted to primes dividing N), and :class:`GFElement` over GF(2^k).
The base objects carry the arithmetic context and the conversions between
bases that ring maps are allowed to perform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


class BaseRingError(ValueError):
    pass


def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def strip_primes(n: int, primes: tuple[int, ...]) -> int:
    """Remove all factors of the given primes from ``n`` (n > 0)."""
    for p in primes:
        while n % p == 0:
            n //= p
    return n


class BasePID:
    """Common interface of the supported coefficient domains."""

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def invert(self, a):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def two_invertible(self) -> bool:
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def scalar_json(self, a):
        raise NotImplementedError


@dataclass(frozen=True)
class Integers(BasePID):
    """The rational integers Z."""

    def __repr__(self):
        return "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n

    def is_unit(self, a):
        return a in (1, -1)

    def invert(self, a):
        if not self.is_unit(a):
            raise BaseRingError(f"{a} is not a unit in Z")
        return a

    def contains(self, a):
        return isinstance(a, int) or (isinstance(a, Fraction) and a.denominator == 1)

    def two_invertible(self):
        return False

    def to_json(self):
        return {"kind": "integers"}

    def scalar_json(self, a):
        return int(a)


@dataclass(frozen=True)
class IntegersLocalized(BasePID):
    """Z[1/N]: integers with the primes dividing N inverted.

    N >= 2 is arbitrary; operations whose mathematical hypotheses need an
    odd N check that themselves.  Scalars are ``Fraction`` values whose
    denominator only involves primes dividing N.
    """

    N: int

    def __post_init__(self):
        if self.N < 2:
            raise BaseRingError("localization requires N >= 2")

    def __repr__(self):
        return f"Z[1/{self.N}]"

    @property
    def inverted_primes(self) -> tuple[int, ...]:
        return _prime_factors(self.N)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def is_unit(self, a):
        a = Fraction(a)
        if a == 0:
            return False
        return strip_primes(abs(a.numerator), self.inverted_primes) == 1

    def invert(self, a):
        if not self.is_unit(a):
            raise BaseRingError(f"{a} is not a unit in {self}")
        return 1 / Fraction(a)

    def contains(self, a):
        if isinstance(a, int):
            return True
        if not isinstance(a, Fraction):
            return False
        return strip_primes(a.denominator, self.inverted_primes) == 1

    def two_invertible(self):
        return self.N % 2 == 0

    def to_json(self):
        return {"kind": "localized", "N": self.N}

    def scalar_json(self, a):
        a = Fraction(a)
        if a.denominator == 1:
            return int(a)
        return {"n": a.numerator, "d": a.denominator}


# ---------------------------------------------------------------------------
# GF(2^k)


@lru_cache(maxsize=None)
def _irreducible_poly_gf2(k: int) -> int:
    """Bitmask of a monic irreducible degree-k polynomial over F2."""
    if k == 1:
        return 0b10  # x
    for candidate in range(1 << k, 1 << (k + 1)):
        if candidate % 2 == 0:  # constant term 0 => divisible by x
            continue
        if _gf2poly_is_irreducible(candidate):
            return candidate
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def gf2poly_degree(p: int) -> int:
    return p.bit_length() - 1


def gf2poly_mulmod(a: int, b: int, mod: int) -> int:
    deg = gf2poly_degree(mod)
    res = 0
    while b:
        if b & 1:
            res ^= a
        b >>= 1
        a <<= 1
        if gf2poly_degree(a) >= deg:
            a ^= mod
    return res


def gf2poly_mul(a: int, b: int) -> int:
    res = 0
    shift = 0
    while b:
        if b & 1:
            res ^= a << shift
        b >>= 1
        shift += 1
    return res


def gf2poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("GF(2)[x] division by zero")
    db = gf2poly_degree(b)
    q = 0
    while a and gf2poly_degree(a) >= db:
        shift = gf2poly_degree(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _gf2poly_is_irreducible(p: int) -> bool:
    k = gf2poly_degree(p)
    # x^(2^i) mod p, checking gcd conditions: p irreducible iff
    # x^(2^k) == x (mod p) and gcd(x^(2^(k/q)) - x, p) == 1 for prime q | k.
    def frob(times: int) -> int:
        t = 0b10
        for _ in range(times):
            t = gf2poly_mulmod(t, t, p)
        return t

    if frob(k) != 0b10:
        return False
    for q in _prime_factors(k):
        h = frob(k // q) ^ 0b10
        if _gf2poly_gcd(h, p) != 1:
            return False
    return True


def _gf2poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2poly_divmod(a, b)[1]
    return a


class GFElement:
    """Element of GF(2^k), stored as a polynomial bitmask over F2."""

    __slots__ = ("bits", "field")

    def __init__(self, bits: int, field: "GF2k"):
        self.bits = bits
        self.field = field

    def __add__(self, other):
        other = self.field.coerce(other)
        return GFElement(self.bits ^ other.bits, self.field)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self.field.coerce(other)
        return GFElement(
            gf2poly_mulmod(self.bits, other.bits, self.field.modulus), self.field
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.bits == other.bits and self.field == other.field
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.bits, self.field.k))

    def __bool__(self):
        return self.bits != 0

    def __repr__(self):
        if self.field.k == 1:
            return str(self.bits)
        return f"gf{1 << self.field.k}({self.bits:#x})"


@dataclass(frozen=True)
class GF2k(BasePID):
    """The finite field with 2^k elements."""

    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise BaseRingError("field order must be a positive power of 2")

    def __repr__(self):
        return "F2" if self.k == 1 else f"F{1 << self.k}"

    @property
    def modulus(self) -> int:
        return _irreducible_poly_gf2(self.k)

    def coerce(self, a) -> GFElement:
        if isinstance(a, GFElement):
            if a.field != self:
                raise BaseRingError("mixed finite-field arithmetic")
            return a
        if isinstance(a, int):
            return self.from_int(a)
        raise BaseRingError(f"cannot interpret {a!r} in {self}")

    def element(self, bits: int) -> GFElement:
        return GFElement(bits & ((1 << self.k) - 1), self)

    def zero(self):
        return GFElement(0, self)

    def one(self):
        return GFElement(1, self)

    def from_int(self, n):
        return GFElement(n & 1, self)

    def is_zero(self, a):
        return self.coerce(a).bits == 0

    def is_unit(self, a):
        return self.coerce(a).bits != 0

    def invert(self, a):
        a = self.coerce(a)
        if a.bits == 0:
            raise BaseRingError("division by zero in finite field")
        # Fermat: a^(2^k - 2)
        result = self.one()
        power = a
        e = (1 << self.k) - 2
        while e:
            if e & 1:
                result = result * power
            power = power * power
            e >>= 1
        return result

    def contains(self, a):
        return isinstance(a, GFElement) and a.field == self or isinstance(a, int)

    def two_invertible(self):
        return False

    def to_json(self):
        return {"kind": "gf", "k": self.k}

    def scalar_json(self, a):
        return self.coerce(a).bits


#: Convenient shared instances.
ZZ = Integers()
F2 = GF2k(1)


def localized(N: int) -> IntegersLocalized:
    return IntegersLocalized(N)


def base_from_json(data) -> BasePID:
    kind = data["kind"]
    if kind == "integers":
        return ZZ
    if kind == "localized":
        return IntegersLocalized(data["N"])
    if kind == "gf":
        return GF2k(data["k"])
    raise BaseRingError(f"unknown base kind {kind!r}")


def base_morphism(source: BasePID, target: BasePID):
    """Scalar conversion along the canonical map source -> target.

    Supported maps: identity, Z -> Z[1/N], Z -> GF(2^k) (reduction mod 2),
    Z[1/N] -> Z[1/M] when every prime of N divides M, and Z[1/N] -> GF(2^k)
    for odd N.  Raises if no canonical map exists.
    """
    if source == target:
        return lambda a: a
    if isinstance(source, Integers):
        if isinstance(target, IntegersLocalized):
            return lambda a: Fraction(a)
        if isinstance(target, GF2k):
            return lambda a: target.from_int(int(a))
    if isinstance(source, IntegersLocalized):
        if isinstance(target, IntegersLocalized):
            if all(target.N % p == 0 for p in source.inverted_primes):
                return lambda a: Fraction(a)
        if isinstance(target, GF2k) and source.N % 2 == 1:
            def reduce_mod2(a, _t=target):
                f = Fraction(a)
                # denominator is odd, hence 1 mod 2
                return _t.from_int(f.numerator % 2)
            return reduce_mod2
    raise BaseRingError(f"no canonical coefficient map {source} -> {target}")
