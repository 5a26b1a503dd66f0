"""Exact integer polynomials in the color count k."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable

ExactRational = Fraction


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @property
    def symbol(self) -> str:
        return {Sign.NEGATIVE: "-", Sign.ZERO: "0", Sign.POSITIVE: "+"}[self]


def _trim(coefficients: Iterable[int]) -> tuple[int, ...]:
    coeffs = [int(c) for c in coefficients]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients, ascending powers of k.

    The zero polynomial has an empty coefficient tuple; otherwise the last
    coefficient is nonzero.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def constant(cls, value: int) -> IntPolynomial:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> IntPolynomial:
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls((0,) * degree + (coefficient,))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    @staticmethod
    def _coerce(other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> IntPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return ZERO
        product = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                product[i + j] += x * y
        return IntPolynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, k: int) -> int:
        return self.evaluate(k)

    def evaluate(self, k: int) -> int:
        """Exact value at an integer k (Horner)."""
        value = 0
        for c in reversed(self.coefficients):
            value = value * k + c
        return value

    def substitute_shift(self, shift: int) -> IntPolynomial:
        """Return q with q(k) = self(k - shift)."""
        result = ZERO
        moved = K - shift
        for c in reversed(self.coefficients):
            result = result * moved + c
        return result

    def to_list(self) -> list[int]:
        return list(self.coefficients)

    @classmethod
    def from_list(cls, values: Iterable[int]) -> IntPolynomial:
        values = list(values)
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
            raise ValueError("polynomial coefficients must be integers")
        return cls(tuple(values))

    def pretty(self, variable: str = "k") -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                base = variable if power == 1 else f"{variable}^{power}"
                body = base if magnitude == 1 else f"{magnitude}{base}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.pretty()


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
K = IntPolynomial((0, 1))


@dataclass(frozen=True)
class Threshold:
    """Sign of the leading coefficient and an N past which the sign holds."""

    sign: Sign
    n: int | None

    def to_dict(self) -> dict:
        return {"sign": self.sign.symbol, "N": self.n}


def falling_factorial(p: int) -> IntPolynomial:
    """k(k-1)...(k-p+1)."""
    if p < 0:
        raise ValueError("falling factorial needs p >= 0")
    result = ONE
    for i in range(p):
        result = result * (K - i)
    return result


def threshold_n(p: IntPolynomial) -> Threshold:
    """Explicit N with sign(p(k)) = sign(leading) for every integer k >= N.

    Starts from the Cauchy root bound and steps down while exact evaluation
    keeps the sign. The result is a valid threshold, not a certified minimum.
    """
    if p.is_zero:
        return Threshold(Sign.ZERO, None)
    sign = Sign.POSITIVE if p.leading > 0 else Sign.NEGATIVE
    if p.degree == 0:
        return Threshold(sign, 1)
    lead = abs(p.leading)
    cauchy = 1 + max(Fraction(abs(a), lead) for a in p.coefficients[:-1])
    n = max(1, math.ceil(cauchy))
    while n > 1 and sign * p.evaluate(n - 1) > 0:
        n -= 1
    return Threshold(sign, n)


def rational_eval(numerator: IntPolynomial, denominator: IntPolynomial, k: int) -> Fraction:
    den = denominator.evaluate(k)
    if den == 0:
        raise ZeroDivisionError(f"denominator vanishes at k={k}")
    return Fraction(numerator.evaluate(k), den)


def format_rational(value: Fraction) -> str | int:
    """JSON-friendly rendering: integers stay integers."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"
