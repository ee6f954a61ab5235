"""Exact coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import gmpy2
from gmpy2 import mpq

DEFAULT_PRIME = 32003


class RationalField:
    """Q with gmpy2 rationals as canonical values."""

    char = 0
    name = "QQ"

    def __call__(self, value) -> mpq:
        if isinstance(value, str):
            return mpq(value)
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not allowed")
        return mpq(value)

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / mpq(a)

    def is_unit(self, a) -> bool:
        return a != 0

    def to_fraction(self, a) -> Fraction:
        return Fraction(int(a.numerator), int(a.denominator))

    def format(self, a) -> str:
        a = mpq(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Residues modulo a prime p, stored as least nonnegative ints."""

    def __init__(self, p: int = DEFAULT_PRIME):
        p = int(p)
        if p < 2 or not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not a prime")
        if p > 2**62:
            raise ValueError("modulus too large")
        self.char = p
        self.name = f"GF({p})"

    def __call__(self, value) -> int:
        p = self.char
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not allowed")
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, int):
            return value % p
        if isinstance(value, (Rational, type(mpq(0)))):
            num, den = int(value.numerator), int(value.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator divisible by {p}")
            return num * pow(den, -1, p) % p
        return int(value) % p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def inv(self, a):
        if a % self.char == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.char)

    def is_unit(self, a) -> bool:
        return a % self.char != 0

    def to_fraction(self, a) -> Fraction:
        # symmetric representative, used only for printing
        a %= self.char
        if a > self.char // 2:
            a -= self.char
        return Fraction(a)

    def format(self, a) -> str:
        return str(self.to_fraction(a).numerator)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("GF", self.char))

    def __repr__(self):
        return self.name


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str):
    """Parse ``Q``, ``QQ``, ``Fp``, ``Fp:101`` or ``GF(101)``."""
    s = name.strip()
    if s in ("Q", "QQ"):
        return QQ
    if s in ("Fp", "GF"):
        return GF()
    if s.startswith("Fp:"):
        return GF(int(s[3:]))
    if s.startswith("GF(") and s.endswith(")"):
        return GF(int(s[3:-1]))
    raise ValueError(f"unknown field {name!r}")
