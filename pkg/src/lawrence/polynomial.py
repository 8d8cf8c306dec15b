"""Univariate polynomials with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import comb
from typing import Iterable, Sequence


@total_ordering
class _NegInf:
    """Degree of the zero polynomial; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


class IntPolynomial:
    """Immutable polynomial ``c[0] + c[1] t + ...`` with trimmed coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * k + [coeff])

    @classmethod
    def one_minus_t_power(cls, k: int) -> "IntPolynomial":
        return cls([(-1) ** j * comb(k, j) for j in range(k + 1)])

    @classmethod
    def t_minus_one_power(cls, k: int) -> "IntPolynomial":
        return cls([(-1) ** (k - j) * comb(k, j) for j in range(k + 1)])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``t**k``."""
        if k < 0:
            raise ValueError("negative shift")
        return IntPolynomial((0,) * k + self.coeffs) if self.coeffs else self

    def substitute_reciprocal(self, total_degree: int) -> "IntPolynomial":
        """``t**total_degree * p(1/t)``; requires ``total_degree >= deg p``."""
        if self.degree > total_degree:
            raise ValueError(f"total degree {total_degree} below polynomial degree {self.degree}")
        padded = list(self.coeffs) + [0] * (total_degree + 1 - len(self.coeffs))
        return IntPolynomial(reversed(padded))

    def series_over_one_minus_t(self, power: int, order: int) -> list[int]:
        """Coefficients of ``self / (1 - t)**power`` for ``t**0 .. t**order``."""
        if order < 0:
            return []
        out = []
        for m in range(order + 1):
            out.append(sum(c * comb(m - k + power - 1, power - 1)
                           for k, c in enumerate(self.coeffs) if k <= m)
                       if power > 0 else self[m])
        return out

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_polynomial(self.coeffs)


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot use {type(x).__name__} as IntPolynomial")


def format_polynomial(coeffs: Sequence[int], var: str = "t") -> str:
    """Ascending display, e.g. ``1 + 3t + 4t^2``."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def add(p, q) -> IntPolynomial:
    return _coerce(p) + _coerce(q)


def multiply(p, q) -> IntPolynomial:
    return _coerce(p) * _coerce(q)


def evaluate_at_rational(p: IntPolynomial, x) -> Fraction:
    return p.evaluate(x)


def shift_by_t_power(p: IntPolynomial, k: int) -> IntPolynomial:
    return p.shift(k)


def substitute_reciprocal(p: IntPolynomial, total_degree: int) -> IntPolynomial:
    return p.substitute_reciprocal(total_degree)
