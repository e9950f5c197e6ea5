"""Exact scalar arithmetic for root coordinates.

Crystallographic types need only rationals, which ``fractions.Fraction``
already provides; the icosahedral types (H3, H4, I2(5)) additionally need
the golden ratio, so we implement elements a + b*sqrt(5) with rational a, b.
No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class GoldenNum:
    """An element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).

    Immutable, hashable, totally ordered by the real embedding with
    sqrt(5) > 0.  Mixes freely with int and Fraction operands.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNum is immutable")

    @staticmethod
    def _coerce(x) -> "GoldenNum":
        if isinstance(x, GoldenNum):
            return x
        if isinstance(x, (int, Fraction)):
            return GoldenNum(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GoldenNum(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GoldenNum(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GoldenNum(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GoldenNum(self.a * o.a + 5 * self.b * o.b,
                         self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        norm = o.a * o.a - 5 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        inv = GoldenNum(o.a / norm, -o.b / norm)
        return self * inv

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GoldenNum(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(5)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare |a| with |b|*sqrt(5) exactly
        big_a = a * a > 5 * b * b
        if a > 0:
            return 1 if big_a else -1
        return -1 if big_a else 1

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() >= 0

    def __repr__(self):
        if self.b == 0:
            return f"GoldenNum({self.a})"
        return f"GoldenNum({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*r5"
        return f"{self.a}+{self.b}*r5" if self.b > 0 else f"{self.a}{self.b}*r5"


#: golden ratio (1 + sqrt 5)/2, the fundamental unit of the ring of integers
TAU = GoldenNum(Fraction(1, 2), Fraction(1, 2))

Scalar = Union[Fraction, GoldenNum]


def scalar_is_rational(x: Scalar) -> bool:
    return not isinstance(x, GoldenNum) or x.b == 0


def scalar_to_str(x: Scalar) -> str:
    """Serialize a scalar for JSON ("p/q" or "p/q+p/q*r5")."""
    return str(x)


def scalar_from_str(s: str) -> Scalar:
    """Inverse of :func:`scalar_to_str`."""
    s = s.strip()
    if "r5" not in s:
        return Fraction(s)
    body = s[: s.rindex("*r5")]
    # split off the b-coefficient: the last '+' or '-' not inside a fraction
    # and not a leading sign
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "+-/":
            a_str, b_str = body[:i], body[i:]
            if b_str in ("+", "-"):
                b_str += "1"
            return GoldenNum(Fraction(a_str), Fraction(b_str.lstrip("+")))
    return GoldenNum(0, Fraction(body))
