"""Truncated power series with exact rational coefficients.

Only what the column generating functions of the short-chord triangle need:
ring operations, the binomial series of ``sqrt(1 - 2t)``, ``exp`` of a
series without constant term, and the two products built from them.
No floating point is used anywhere.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Iterable

from .errors import ValidationError

__all__ = [
    "RationalSeries",
    "mul",
    "add",
    "scale",
    "sqrt_one_minus_2t",
    "inv_sqrt_one_minus_2t",
    "exp_series",
    "reciprocal",
    "egf_L_column",
    "riordan_short_chord_total",
    "short_chord_total_closed_form",
]


class RationalSeries:
    """``c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValidationError(f"order must be >= 0, got {order}")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValidationError("a series needs at least one coefficient")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int) -> "RationalSeries":
        return cls([c], order)

    @classmethod
    def t(cls, order: int) -> "RationalSeries":
        return cls([0, 1], order)

    def truncate(self, order: int) -> "RationalSeries":
        return RationalSeries(self.coeffs, min(order, self.order))

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return scale(self, -1)

    def __sub__(self, other):
        return add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, RationalSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValidationError("negative powers are not supported")
        out = RationalSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "RationalSeries":
        if self.order == 0:
            return RationalSeries([0], 0)
        return RationalSeries([k * self.coeffs[k] for k in range(1, self.order + 1)])

    def egf_values(self) -> list[Fraction]:
        """``n! * [t^n]`` for ``n = 0..order``."""
        return [factorial(k) * c for k, c in enumerate(self.coeffs)]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            num = f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)
            terms.append(num if k == 0 else f"{num} t" if k == 1 else f"{num} t^{k}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"RationalSeries({self})"

    def to_json(self) -> str:
        return json.dumps([[c.numerator, c.denominator] for c in self.coeffs], separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "RationalSeries":
        return cls(Fraction(p, q) for p, q in json.loads(text))


def _coerce(x, order: int) -> RationalSeries:
    return x if isinstance(x, RationalSeries) else RationalSeries.constant(x, order)


def add(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    order = min(a.order, b.order)
    return RationalSeries([a.coeffs[k] + b.coeffs[k] for k in range(order + 1)])


def scale(a: RationalSeries, r) -> RationalSeries:
    r = Fraction(r)
    return RationalSeries([r * c for c in a.coeffs])


def mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    return RationalSeries([sum(ac[i] * bc[k - i] for i in range(k + 1)) for k in range(order + 1)])


def reciprocal(a: RationalSeries) -> RationalSeries:
    """``1 / a`` for a series with nonzero constant term."""
    c0 = a.coeffs[0]
    if c0 == 0:
        raise ValidationError("cannot invert a series with zero constant term")
    out = [1 / c0]
    for k in range(1, a.order + 1):
        out.append(-sum(a.coeffs[i] * out[k - i] for i in range(1, k + 1)) / c0)
    return RationalSeries(out)


def _binomial_series(alpha: Fraction, x: Fraction, order: int) -> RationalSeries:
    # (1 + x t)^alpha
    coeffs = [Fraction(1)]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * (alpha - k + 1) / k * x)
    return RationalSeries(coeffs)


def sqrt_one_minus_2t(order: int) -> RationalSeries:
    if order < 0:
        raise ValidationError(f"order must be >= 0, got {order}")
    return _binomial_series(Fraction(1, 2), Fraction(-2), order)


def inv_sqrt_one_minus_2t(order: int) -> RationalSeries:
    if order < 0:
        raise ValidationError(f"order must be >= 0, got {order}")
    return _binomial_series(Fraction(-1, 2), Fraction(-2), order)


def exp_series(a: RationalSeries, order: int | None = None) -> RationalSeries:
    """``sum_k a^k / k!`` truncated; ``a`` must have zero constant term."""
    if a.coeffs[0] != 0:
        raise ValidationError(f"exp needs a series with zero constant term, got {a.coeffs[0]}")
    order = a.order if order is None else min(order, a.order)
    a = a.truncate(order)
    out = RationalSeries.constant(1, order)
    power = RationalSeries.constant(1, order)
    for k in range(1, order + 1):
        power = mul(power, a)
        out = add(out, scale(power, Fraction(1, factorial(k))))
    return out


def _initial_and_multiplier(order: int):
    root = sqrt_one_minus_2t(order)
    initial = mul(exp_series(root - 1), reciprocal(root))
    multiplier = 1 - root
    return initial, multiplier


def egf_L_column(s: int, order: int) -> RationalSeries:
    """Column ``s`` of the short-chord triangle as an exponential generating function."""
    if s < 0:
        raise ValidationError(f"column must be >= 0, got {s}")
    initial, multiplier = _initial_and_multiplier(order)
    return scale(mul(initial, multiplier ** s), Fraction(1, factorial(s)))


def riordan_short_chord_total(order: int) -> RationalSeries:
    """Triangle times the column ``(0, 1, 2, ...)``: ``g * f * exp(f)``."""
    initial, multiplier = _initial_and_multiplier(order)
    return mul(mul(initial, multiplier), exp_series(multiplier))


def short_chord_total_closed_form(order: int) -> RationalSeries:
    """``(1 - 2t)^(-1/2) - 1`` from its own binomial series."""
    return inv_sqrt_one_minus_2t(order) - 1
