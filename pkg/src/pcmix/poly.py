"""Dense univariate polynomials over exact rationals.

Polynomials are the coefficient domain of the truncated series in
:mod:`pcmix.series` and the value type of every polynomial family.  All
arithmetic is exact; floats are rejected at construction time.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]


def as_fraction(value: Rational) -> Fraction:
    """Coerce an int or Fraction to Fraction, rejecting inexact types."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """Immutable polynomial in one variable, coefficients lowest degree first.

    The zero polynomial stores an empty coefficient tuple; otherwise the
    last coefficient is nonzero, so ``len(coeffs) == degree + 1``.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def constant_value(self) -> Fraction:
        """Value as a scalar; only valid for constant polynomials."""
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant polynomial")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def lead(self) -> Fraction:
        """Leading coefficient; only valid for nonzero polynomials."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, j: int) -> Fraction:
        """Coefficient of x**j (zero beyond the stored degree)."""
        if j < 0:
            raise ValueError("coefficient index must be >= 0")
        return self.coeffs[j] if j < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: Union["Poly", Rational]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: Union["Poly", Rational]) -> "Poly":
        return self + (-other if isinstance(other, Poly) else Poly((other,)).__neg__())

    def __rsub__(self, other: Rational) -> "Poly":
        return Poly((other,)) + (-self)

    def __mul__(self, other: Union["Poly", Rational]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("polynomial powers must be >= 0")
        result = Poly((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, point: Rational) -> Fraction:
        """Evaluate at an exact rational point (Horner)."""
        x = as_fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """Substitute ``inner`` for the variable (Horner)."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shifted(self, offset: Rational) -> "Poly":
        """p(x + offset)."""
        return self.compose(Poly((offset, 1)))

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def divide_x(self) -> "Poly":
        """Exact division by x; requires a zero constant term."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError(f"{self} is not divisible by x")
        return Poly(self.coeffs[1:])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                var = "x" if j == 1 else f"x^{j}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self})"


#: The variable itself, for building polynomials by arithmetic.
X = Poly((0, 1))

ZERO = Poly()
ONE = Poly((1,))


def monomial(degree: int, coefficient: Rational = 1) -> Poly:
    """coefficient * x**degree."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    return Poly((0,) * degree + (coefficient,))
