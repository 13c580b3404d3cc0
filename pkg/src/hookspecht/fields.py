"""Exact scalars: the rationals (characteristic 0) or a prime field F_p."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from sympy import GF, QQ, ZZ, isprime

__all__ = ["Field", "parse_scalar"]

MAX_PRIME = 2**31


class Field:
    """Ground field of characteristic ``char`` (0 or a prime below 2**31).

    Scalars are plain Python numbers: ``int``/``Fraction`` over Q, and canonical
    residues ``0..p-1`` over F_p.  The field object does the normalisation.
    """

    __slots__ = ("char", "__dict__")

    def __init__(self, char: int = 0):
        char = int(char)
        if char != 0 and (char < 2 or char >= MAX_PRIME or not isprime(char)):
            raise ValueError(f"characteristic must be 0 or a prime < 2**31, got {char}")
        self.char = char

    def __repr__(self):
        return f"Field({self.char})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __call__(self, x) -> int | Fraction:
        p = self.char
        if p == 0:
            if isinstance(x, Fraction):
                return int(x) if x.denominator == 1 else x
            return int(x) if isinstance(x, int) else Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, x):
        x = self(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.char == 0:
            return self(Fraction(1) / x)
        return pow(x, -1, self.char)

    def divides(self, m: int) -> bool:
        """Whether the characteristic divides ``m`` (0 divides only 0)."""
        return m == 0 if self.char == 0 else m % self.char == 0

    def elements(self):
        if self.char == 0:
            raise ValueError("Q is infinite")
        return range(self.char)

    @cached_property
    def domain(self):
        """The matching sympy domain (ZZ for integral work over Q)."""
        return ZZ if self.char == 0 else GF(self.char, symmetric=False)

    @cached_property
    def fraction_domain(self):
        return QQ if self.char == 0 else self.domain

    def from_domain(self, x):
        if self.char == 0:
            # gmpy2 mpz/mpq and python ints all expose numerator/denominator
            return self(Fraction(int(x.numerator), int(x.denominator)))
        return int(x) % self.char

    def to_domain(self, x, dom=None):
        dom = dom or self.domain
        x = self(x)
        if isinstance(x, Fraction):
            return QQ(x.numerator, x.denominator)
        return dom(x)

    def format(self, x) -> str:
        """``"num/den"`` over Q, ``"k mod p"`` over F_p."""
        x = self(x)
        if self.char == 0:
            x = Fraction(x)
            return f"{x.numerator}/{x.denominator}"
        return f"{x} mod {self.char}"

    def signed(self, x) -> int | Fraction:
        """Integer representative closest to zero in F_p; identity over Q."""
        x = self(x)
        if self.char and x > self.char // 2:
            return x - self.char
        return x


def parse_scalar(text: str) -> tuple[int | Fraction, int]:
    """Inverse of :meth:`Field.format`; returns ``(value, char)``."""
    text = text.strip()
    if " mod " in text:
        k, p = text.split(" mod ")
        return int(k), int(p)
    return Fraction(text), 0
