from app.polynomial.intpoly import (
    ExactRational,
    IntPolynomial,
    K,
    ONE,
    Sign,
    Threshold,
    ZERO,
    falling_factorial,
    format_rational,
    rational_eval,
    threshold_n,
)

__all__ = [
    "ExactRational",
    "IntPolynomial",
    "K",
    "ONE",
    "Sign",
    "Threshold",
    "ZERO",
    "falling_factorial",
    "format_rational",
    "rational_eval",
    "threshold_n",
]
