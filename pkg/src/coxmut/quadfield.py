"""Exact arithmetic in Q(sqrt2, sqrt3).

Elements are a + b*sqrt2 + c*sqrt3 + e*sqrt6 with rational coefficients.
This field contains every Gram entry produced by Coxeter exponents in
{2, 3, 4, 6, inf}, and sign decisions are exact, so Sylvester reduction
never has to approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _sign_q2(a: Fraction, b: Fraction) -> int:
    # sign of a + b*sqrt(2)
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    s = a * a - 2 * b * b
    sgn = (s > 0) - (s < 0)
    return sgn if a > 0 else -sgn


@dataclass(frozen=True)
class QuadField:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    e: Fraction = Fraction(0)

    @staticmethod
    def of(a=0, b=0, c=0, e=0) -> "QuadField":
        return QuadField(Fraction(a), Fraction(b), Fraction(c), Fraction(e))

    def __add__(self, o):
        return QuadField(self.a + o.a, self.b + o.b, self.c + o.c, self.e + o.e)

    def __sub__(self, o):
        return QuadField(self.a - o.a, self.b - o.b, self.c - o.c, self.e - o.e)

    def __neg__(self):
        return QuadField(-self.a, -self.b, -self.c, -self.e)

    def __mul__(self, o):
        a1, b1, c1, e1 = self.a, self.b, self.c, self.e
        a2, b2, c2, e2 = o.a, o.b, o.c, o.e
        return QuadField(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * e1 * e2,
            a1 * b2 + b1 * a2 + 3 * (c1 * e2 + e1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * e2 + e1 * b2),
            a1 * e2 + e1 * a2 + b1 * c2 + c1 * b2,
        )

    def scale(self, r) -> "QuadField":
        r = Fraction(r)
        return QuadField(self.a * r, self.b * r, self.c * r, self.e * r)

    def conj2(self):
        # sqrt2 -> -sqrt2
        return QuadField(self.a, -self.b, self.c, -self.e)

    def conj3(self):
        # sqrt3 -> -sqrt3
        return QuadField(self.a, self.b, -self.c, -self.e)

    def inverse(self) -> "QuadField":
        if self.is_zero():
            raise ZeroDivisionError("QuadField inverse of zero")
        partial = self.conj2() * self.conj3() * self.conj2().conj3()
        norm = (self * partial).a  # rational by Galois symmetry
        return partial.scale(Fraction(1) / norm)

    def __truediv__(self, o):
        return self * o.inverse()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.e == 0

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}, by splitting off sqrt(3) and comparing
        squares inside Q(sqrt2)."""
        sp = _sign_q2(self.a, self.b)
        sq = _sign_q2(self.c, self.e)
        if sq == 0:
            return sp
        if sp == 0:
            return sq
        if sp == sq:
            return sp
        # p + q*sqrt3 with opposite signs: multiply by p - q*sqrt3 (sign sp)
        p2a = self.a * self.a + 2 * self.b * self.b
        p2b = 2 * self.a * self.b
        q2a = self.c * self.c + 2 * self.e * self.e
        q2b = 2 * self.c * self.e
        return sp * _sign_q2(p2a - 3 * q2a, p2b - 3 * q2b)

    def __lt__(self, o):
        return (self - o).sign() < 0

    def __le__(self, o):
        return (self - o).sign() <= 0

    def __gt__(self, o):
        return (self - o).sign() > 0

    def __ge__(self, o):
        return (self - o).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * 2**0.5 + float(self.c) * 3**0.5 + float(self.e) * 6**0.5

    def __repr__(self):
        return f"QuadField({self.a}, {self.b}, {self.c}, {self.e})"


ZERO = QuadField.of(0)
ONE = QuadField.of(1)
HALF_SQRT2 = QuadField.of(0, Fraction(1, 2))
HALF_SQRT3 = QuadField.of(0, 0, Fraction(1, 2))
