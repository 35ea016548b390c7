"""Umbral calculus: linear functionals, operators and Sheffer sequences.

A constant-coefficient series f acts two ways on polynomials:

* as a linear functional, pairing the n-th exponential coefficient of f
  with the x^n coefficient of the polynomial (``apply_functional``);
* as a differential operator, t acting as d/dx (``operator_apply``).

A Sheffer pair (g, f) with g invertible and f delta determines a unique
polynomial sequence; ``ShefferPair.polynomial`` constructs it from the
generating function (1/g(fbar)) * exp(x*fbar) with fbar the compositional
inverse of f, expanded as the finite sum of x^m * fbar^m / m!.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .poly import Poly, X
from .series import (
    NotDelta,
    NotInvertible,
    OrderExhausted,
    Series,
    SeriesError,
    one_series,
)


def _require_constant(f: Series, what: str) -> None:
    if not f.constant_coefficients:
        raise SeriesError(f"{what} needs a series with x-free coefficients")


def apply_functional(f: Series, p: Poly) -> Fraction:
    """Pair the series f, read as a linear functional, with the polynomial p.

    The value is the sum over n of n! * [t^n] f * [x^n] p; the order of f
    must cover the degree of p.
    """
    _require_constant(f, "a functional")
    if f.order <= p.degree:
        raise OrderExhausted(
            f"functional of order {f.order} cannot see degree {p.degree}"
        )
    total = Fraction(0)
    for n, c in enumerate(p.coeffs):
        if c:
            total += factorial(n) * f.coeffs[n].constant_value * c
    return total


def operator_apply(f: Series, p: Poly) -> Poly:
    """Apply f(t) as a differential operator, t acting as d/dx."""
    _require_constant(f, "an operator")
    if f.order <= p.degree:
        raise OrderExhausted(
            f"operator of order {f.order} cannot act on degree {p.degree}"
        )
    result = Poly()
    d = p
    for k in range(p.degree + 1):
        c = f.coeffs[k].constant_value
        if c:
            result = result + d * c
        d = d.derivative()
        if d.is_zero:
            break
    return result


class ShefferPair:
    """A pair (g, f): g invertible, f delta, both with x-free coefficients."""

    def __init__(self, g: Series, f: Series, label: str = ""):
        if g.order != f.order:
            raise SeriesError(f"pair orders differ: {g.order} vs {f.order}")
        _require_constant(g, "a Sheffer pair")
        _require_constant(f, "a Sheffer pair")
        if not g.is_invertible:
            raise NotInvertible("g must have a nonzero constant term")
        if not f.is_delta:
            raise NotDelta("f must be a delta series")
        self.g = g
        self.f = f
        self.label = label or "pair"
        self._fbar: Series | None = None
        self._egf: list[list[Fraction]] | None = None
        self._recurrence_ops: tuple[Series, Series] | None = None

    @property
    def order(self) -> int:
        return self.g.order

    @property
    def fbar(self) -> Series:
        """Compositional inverse of f, computed once."""
        if self._fbar is None:
            self._fbar = self.f.revert()
        return self._fbar

    def _table(self) -> list[list[Fraction]]:
        # row m, column n: n! [t^n] (1/g(fbar)) fbar^m / m!,
        # the x^m coefficient of the n-th sequence member.
        if self._egf is None:
            running = self.g.compose(self.fbar).inverse()
            rows = []
            for m in range(self.order):
                scale = Fraction(1, factorial(m))
                rows.append(
                    [
                        factorial(n) * running.coeffs[n].constant_value * scale
                        for n in range(self.order)
                    ]
                )
                if m + 1 < self.order:
                    running = running * self.fbar
            self._egf = rows
        return self._egf

    def polynomial(self, n: int) -> Poly:
        """The degree-n member of the sequence attached to this pair."""
        if not 0 <= n < self.order:
            raise OrderExhausted(
                f"{self.label}: degree {n} needs order > {n}, have {self.order}"
            )
        table = self._table()
        return Poly([table[m][n] for m in range(n + 1)])

    def __repr__(self) -> str:
        return f"ShefferPair({self.label}, order={self.order})"


def sheffer_polynomial(pair: ShefferPair, n: int) -> Poly:
    """Sequence member of degree n for the pair."""
    return pair.polynomial(n)


def sheffer_orthogonality_check(pair: ShefferPair, n_max: int) -> bool:
    """True iff <g * f^k | s_n> equals n! * delta(n, k) for all n, k <= n_max."""
    if n_max >= pair.order:
        raise OrderExhausted(f"n_max {n_max} needs order > {n_max}")
    running = pair.g
    for k in range(n_max + 1):
        for n in range(n_max + 1):
            expected = Fraction(factorial(n)) if n == k else Fraction(0)
            if apply_functional(running, pair.polynomial(n)) != expected:
                return False
        running = running * pair.f
    return True


def connection_coefficients(
    source: ShefferPair, target: ShefferPair, n: int
) -> list[Fraction]:
    """Coefficients expanding the source sequence member over the target basis.

    Returns the row c[0..n] with source_n(x) = sum of c[m] * target_m(x).
    """
    if source.order != target.order:
        raise SeriesError("connection needs pairs of equal order")
    if not 0 <= n < source.order:
        raise OrderExhausted(f"degree {n} needs order > {n}")
    fbar = source.fbar
    base = target.g.compose(fbar) * source.g.compose(fbar).inverse()
    ell = target.f.compose(fbar)
    out = []
    running = base
    for m in range(n + 1):
        value = factorial(n) * running.coeffs[n].constant_value
        out.append(value / factorial(m))
        if m < n:
            running = running * ell
    return out


def recurrence_next(pair: ShefferPair, s_n: Poly) -> Poly:
    """Next sequence member via the operator recurrence.

    Applies 1/f'(t) first, then multiplication by x minus the operator
    g'(t)/g(t); each operator consumes one order of the pair's series.
    """
    if pair.order < s_n.degree + 2:
        raise OrderExhausted(
            f"{pair.label}: recurrence from degree {s_n.degree} "
            f"needs order >= {s_n.degree + 2}, have {pair.order}"
        )
    if pair._recurrence_ops is None:
        shorter = pair.order - 1
        inv_fprime = pair.f.derivative().inverse()
        g_ratio = pair.g.derivative() * pair.g.truncate(shorter).inverse()
        pair._recurrence_ops = (inv_fprime, g_ratio)
    inv_fprime, g_ratio = pair._recurrence_ops
    v = operator_apply(inv_fprime, s_n)
    return X * v - operator_apply(g_ratio, v)


def transfer_check(f: Series, g: Series, n: int) -> bool:
    """Check the transfer formula between the associated sequences of f and g.

    With p the sequence for (1, f) and q the sequence for (1, g), tests
    q_n(x) = x * (f(t)/g(t))^n * x^{-1} * p_n(x) for n >= 1.
    """
    if n < 1:
        raise ValueError("the transfer formula needs n >= 1")
    if f.order != g.order:
        raise SeriesError("transfer needs series of equal order")
    if not (f.is_delta and g.is_delta):
        raise NotDelta("transfer needs two delta series")
    p_n = ShefferPair(one_series(f.order), f).polynomial(n)
    q_n = ShefferPair(one_series(g.order), g).polynomial(n)
    ratio = f.divide_t() * g.divide_t().inverse()
    lowered = p_n.divide_x()  # associated sequences vanish at 0 for n >= 1
    mapped = X * operator_apply(ratio ** n, lowered)
    return mapped == q_n


def derivative_functional_check(f: Series, p: Poly) -> bool:
    """Check <f(t) | x p(x)> against <df/dt | p(x)>."""
    if f.order < p.degree + 2:
        raise OrderExhausted("the check needs order >= degree(p) + 2")
    return apply_functional(f, X * p) == apply_functional(f.derivative(), p)
