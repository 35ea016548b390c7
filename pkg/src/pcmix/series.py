"""Truncated formal power series in t with polynomial coefficients.

A series is an order-N jet: ordinary coefficients of t^0 .. t^(N-1), each a
:class:`~pcmix.poly.Poly` in x.  Storage is ordinary coefficients; the
exponential coefficient a_n used by every generating function is recovered
as ``n! * coeffs[n]`` through :meth:`Series.egf_coefficient`.

Arithmetic between two series requires equal order.  Mixing truncation
orders silently is the classic source of wrong identities, so the kernel
refuses instead of coercing; callers truncate explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

from .poly import Poly, Rational, as_fraction

Coefficient = Union[Poly, int, Fraction]


class SeriesError(ValueError):
    """Base class for series kernel contract violations."""


class OrderMismatch(SeriesError):
    """Two operands carry different truncation orders."""


class NotInvertible(SeriesError):
    """Multiplicative inverse requested for a non-invertible series."""


class NotDelta(SeriesError):
    """A delta series (order exactly one) was required."""


class OrderExhausted(SeriesError):
    """The truncation order is too small for the requested operation."""


def _as_poly(c: Coefficient) -> Poly:
    if isinstance(c, Poly):
        return c
    return Poly((as_fraction(c),))


class Series:
    """Immutable truncated power series: ``sum(coeffs[n] * t**n, n < order)``."""

    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[Poly, ...]

    def __init__(self, coeffs: Iterable[Coefficient] = (), order: int | None = None):
        cs = [_as_poly(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise SeriesError("series order must be >= 1")
        if len(cs) > order:
            raise SeriesError(f"{len(cs)} coefficients exceed order {order}")
        cs.extend([Poly()] * (order - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    # -- basic structure -------------------------------------------------

    def coefficient(self, n: int) -> Poly:
        """Ordinary coefficient of t**n."""
        if not 0 <= n < self.order:
            raise OrderExhausted(f"coefficient {n} outside order {self.order}")
        return self.coeffs[n]

    def egf_coefficient(self, n: int) -> Poly:
        """n! times the ordinary t**n coefficient."""
        return self.coefficient(n) * factorial(n)

    @property
    def constant_coefficients(self) -> bool:
        """True when no coefficient involves x."""
        return all(c.is_constant for c in self.coeffs)

    @property
    def is_invertible(self) -> bool:
        """Nonzero constant scalar term."""
        c0 = self.coeffs[0]
        return c0.is_constant and not c0.is_zero

    @property
    def is_delta(self) -> bool:
        """Zero constant term and nonzero constant t-coefficient."""
        if not self.coeffs[0].is_zero or self.order < 2:
            return False
        c1 = self.coeffs[1]
        return c1.is_constant and not c1.is_zero

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def _require_same_order(self, other: "Series") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"order {self.order} vs {other.order}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    # -- ring operations -------------------------------------------------

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs), self.order)

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_order(other)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Series", Coefficient]) -> "Series":
        if isinstance(other, (int, Fraction, Poly)):
            factor = _as_poly(other)
            return Series(tuple(c * factor for c in self.coeffs), self.order)
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same_order(other)
        n = self.order
        out = [Poly()] * n
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return Series(out, n)

    def __rmul__(self, other: Coefficient) -> "Series":
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> "Series":
        if exponent < 0:
            raise SeriesError("series powers must be >= 0")
        result = one_series(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires a nonzero constant scalar term."""
        c0 = self.coeffs[0]
        if not c0.is_constant or c0.is_zero:
            raise NotInvertible(f"constant term {c0} is not a nonzero constant")
        inv0 = 1 / c0.constant_value
        out = [Poly((inv0,))]
        for n in range(1, self.order):
            acc = Poly()
            for i in range(1, n + 1):
                a = self.coeffs[i]
                if not a.is_zero:
                    acc = acc + a * out[n - i]
            out.append(acc * -inv0)
        return Series(out, self.order)

    def compose(self, inner: "Series") -> "Series":
        """Substitute ``inner`` for t; ``inner`` must have zero constant term."""
        self._require_same_order(inner)
        if not inner.coeffs[0].is_zero:
            raise NotDelta("composition needs an inner series with zero constant term")
        acc = constant_series(self.coeffs[-1], self.order)
        for i in range(self.order - 2, -1, -1):
            acc = acc * inner + constant_series(self.coeffs[i], self.order)
        return acc

    def revert(self) -> "Series":
        """Compositional inverse of a delta series.

        Solved coefficient-by-coefficient from ``compose(result, self) = t``,
        a triangular system since self**m has no terms below t**m.
        """
        if not self.is_delta:
            raise NotDelta("compositional inverse needs a delta series")
        n_max = self.order
        f1 = self.coeffs[1].constant_value
        powers = [None, self]  # self**m, filled on demand
        for m in range(2, n_max):
            powers.append(powers[-1] * self)
        out = [Poly(), Poly((1 / f1,))]
        for n in range(2, n_max):
            acc = Poly()
            for m in range(1, n):
                cm = powers[m].coeffs[n]
                if not cm.is_zero:
                    acc = acc + out[m] * cm
            out.append(acc * (-(f1 ** -n)))
        return Series(out, n_max)

    # -- reshaping --------------------------------------------------------

    def truncate(self, order: int) -> "Series":
        """Drop coefficients at and above ``order``."""
        if not 1 <= order <= self.order:
            raise OrderExhausted(f"cannot truncate order {self.order} to {order}")
        return Series(self.coeffs[:order], order)

    def derivative(self) -> "Series":
        """Term-wise t-derivative; the order drops by one."""
        if self.order < 2:
            raise OrderExhausted("cannot differentiate an order-1 series")
        return Series(tuple((n + 1) * c for n, c in enumerate(self.coeffs[1:])), self.order - 1)

    def divide_t(self) -> "Series":
        """Exact division by t; requires a zero constant term, drops the order."""
        if not self.coeffs[0].is_zero:
            raise SeriesError("division by t needs a zero constant term")
        if self.order < 2:
            raise OrderExhausted("cannot divide an order-1 series by t")
        return Series(self.coeffs[1:], self.order - 1)

    def scale_t(self, factor: Rational) -> "Series":
        """Substitute ``factor * t`` for t."""
        f = as_fraction(factor)
        scale = Fraction(1)
        out = []
        for c in self.coeffs:
            out.append(c * scale)
            scale *= f
        return Series(out, self.order)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            body = str(c) if c.is_constant else f"({c})"
            if n == 0:
                terms.append(body)
            else:
                t = "t" if n == 1 else f"t^{n}"
                terms.append(t if body == "1" else f"{body}*{t}")
        head = " + ".join(terms) if terms else "0"
        return f"{head} + O(t^{self.order})"

    def __repr__(self) -> str:
        return f"Series({self})"


# -- constructors ----------------------------------------------------------


def zero_series(order: int) -> Series:
    return Series((), order)


def one_series(order: int) -> Series:
    return Series((Poly((1,)),), order)


def constant_series(value: Coefficient, order: int) -> Series:
    return Series((_as_poly(value),), order)


def t_series(order: int) -> Series:
    """The series t itself."""
    if order < 2:
        raise SeriesError("t needs order >= 2")
    return Series((Poly(), Poly((1,))), order)


def exp_series(order: int) -> Series:
    """exp(t) truncated: coefficients 1/n!."""
    return Series(tuple(Fraction(1, factorial(n)) for n in range(order)), order)


def exp_neg_series(order: int) -> Series:
    """exp(-t) truncated: coefficients (-1)^n / n!."""
    return Series(
        tuple(Fraction((-1) ** n, factorial(n)) for n in range(order)), order
    )


def log1p_scaled(a: Rational, order: int) -> Series:
    """log(1 + t/a): coefficient of t^n is (-1)^(n-1) / (n * a^n) for n >= 1."""
    a = as_fraction(a)
    if a == 0:
        raise SeriesError("log(1 + t/a) needs a != 0")
    coeffs = [Fraction(0)]
    for n in range(1, order):
        coeffs.append(Fraction((-1) ** (n - 1), n) * a ** -n)
    return Series(coeffs, order)


def binomial_pow(a: Rational, exponent: Union[Poly, Rational], order: int) -> Series:
    """(1 + t/a)**e for a polynomial (or scalar) exponent e.

    The t^n coefficient is the polynomial e*(e-1)*...*(e-n+1) / (n! * a^n).
    """
    a = as_fraction(a)
    if a == 0:
        raise SeriesError("(1 + t/a)^e needs a != 0")
    e = _as_poly(exponent)
    coeffs = [Poly((1,))]
    running = Poly((1,))
    scale = Fraction(1)
    for n in range(1, order):
        running = running * (e - (n - 1))
        scale /= n * a
        coeffs.append(running * scale)
    return Series(coeffs, order)


def exp_xt(order: int) -> Series:
    """exp(x*t): the t^n coefficient is x^n / n!."""
    coeffs = []
    for n in range(order):
        coeffs.append(Poly((0,) * n + (Fraction(1, factorial(n)),)))
    return Series(coeffs, order)
