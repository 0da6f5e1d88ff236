"""Exact real numbers of the form ``(A ± sqrt(N)) / Q``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class QuadraticSurd:
    """``(A + sign*sqrt(N)) / Q`` with integers ``N >= 0`` and ``Q > 0``.

    Perfect-square radicands are folded into ``A`` on construction, so two
    surds are equal exactly when their normal forms agree.
    """

    A: int
    sign: int
    N: int
    Q: int

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("negative radicand")
        if self.Q <= 0:
            raise ValueError("denominator must be positive")
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        r = isqrt(self.N)
        if r * r == self.N and self.N:
            object.__setattr__(self, "A", self.A + self.sign * r)
            object.__setattr__(self, "N", 0)
        if self.N == 0:
            object.__setattr__(self, "sign", 1)

    @property
    def is_rational(self) -> bool:
        return self.N == 0

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.A, self.Q)

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.A, self.Q)

    def _key(self):
        return (self.rational_part, self.sign, Fraction(self.N, self.Q * self.Q))

    def __eq__(self, other):
        if isinstance(other, QuadraticSurd):
            return self._key() == other._key()
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.rational_part == other
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def compare(self, q) -> int:
        """Sign of ``self - q`` for a rational ``q``, computed exactly."""
        q = Fraction(q)
        # self - q = (A - qQ + sign*sqrt(N)) / Q; work with d = qQ - A
        d = q * self.Q - self.A
        if self.N == 0:
            return _sign(-d)
        gap = _sign(self.N - d * d)
        if self.sign > 0:
            return 1 if d < 0 else gap
        return -1 if d > 0 else -gap

    def __lt__(self, q):
        return self.compare(q) < 0

    def __le__(self, q):
        return self.compare(q) <= 0

    def __gt__(self, q):
        return self.compare(q) > 0

    def __ge__(self, q):
        return self.compare(q) >= 0

    def floor(self) -> int:
        r = isqrt(self.N)
        if self.sign > 0 or r * r == self.N:
            return (self.A + self.sign * r) // self.Q
        return (self.A - r - 1) // self.Q

    def largest_int_below(self) -> int:
        """Largest integer strictly less than this number."""
        f = self.floor()
        return f - 1 if self.compare(f) == 0 else f

    def smallest_int_above(self) -> int:
        """Smallest integer strictly greater than this number."""
        return self.floor() + 1

    def __float__(self) -> float:
        return (self.A + self.sign * self.N ** 0.5) / self.Q

    def __str__(self) -> str:
        if self.N == 0:
            return str(Fraction(self.A, self.Q))
        op = "+" if self.sign > 0 else "-"
        return f"({self.A}{op}sqrt({self.N}))/{self.Q}"
