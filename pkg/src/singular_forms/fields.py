"""Exact base fields: the rationals and prime fields GF(p) with p >= 5.

Scalars are plain ``fractions.Fraction`` objects over the rationals and
``PrimeFieldElement`` objects over GF(p).  Both support the full arithmetic
operator set, compare against Python ints, and are always kept in canonical
form (lowest terms with positive denominator, residues in ``[0, p)``).
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import Union


class PrimeFieldElement:
    """Residue class modulo a prime, stored reduced to ``[0, p)``."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.val
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.val + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.val - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(v - self.val, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElement(self.val * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return PrimeFieldElement(self.val * pow(v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        if self.val == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return PrimeFieldElement(v * pow(self.val, self.p - 2, self.p), self.p)

    def __neg__(self):
        return PrimeFieldElement(-self.val, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        return self.val == v

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val} (mod {self.p})"

    def __str__(self):
        return str(self.val)


Scalar = Union[Fraction, PrimeFieldElement]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any modulus used here."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers; scalars are ``Fraction`` values."""

    char = 0
    name = "q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def element(self, num, den=1) -> Fraction:
        return Fraction(num, den)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q")

    def parse(self, s) -> Fraction:
        if isinstance(s, int):
            return Fraction(s)
        return Fraction(str(s).strip())

    def to_str(self, x: Fraction) -> str:
        return str(x)

    # Bounded numerators and denominators keep intermediate swell small.
    def random(self, rng: Random) -> Fraction:
        return Fraction(rng.randint(-10, 10), rng.randint(1, 10))

    def random_nonzero(self, rng: Random) -> Fraction:
        while True:
            x = self.random(rng)
            if x:
                return x

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime p >= 5 (characteristics 2 and 3 are not supported)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p < 5:
            raise ValueError(f"prime field modulus must be >= 5, got {p}")
        self.p = p
        self.char = p
        self.name = f"gf{p}"
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def element(self, val: int) -> PrimeFieldElement:
        return PrimeFieldElement(val, self.p)

    def coerce(self, x) -> PrimeFieldElement:
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise ValueError(f"element of GF({x.p}) used in GF({self.p})")
            return x
        if isinstance(x, int):
            return PrimeFieldElement(x, self.p)
        raise TypeError(f"cannot coerce {type(x).__name__} into GF({self.p})")

    def parse(self, s) -> PrimeFieldElement:
        if isinstance(s, int):
            return PrimeFieldElement(s, self.p)
        text = str(s).strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.element(int(num)) / self.element(int(den))
        return PrimeFieldElement(int(text), self.p)

    def to_str(self, x: PrimeFieldElement) -> str:
        return str(x.val)

    def random(self, rng: Random) -> PrimeFieldElement:
        return PrimeFieldElement(rng.randrange(self.p), self.p)

    def random_nonzero(self, rng: Random) -> PrimeFieldElement:
        return PrimeFieldElement(rng.randrange(1, self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


Field = Union[RationalField, PrimeField]

QQ = RationalField()


def field_from_name(name: str) -> Field:
    """Resolve a field spelled as ``q`` or ``gf<p>`` (e.g. ``gf32003``)."""
    text = name.strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text.startswith("gf"):
        return PrimeField(int(text[2:]))
    raise ValueError(f"unknown field {name!r}; expected 'q' or 'gf<p>'")
