"""Truncated univariate power series over exact rationals.

A series is a plain list of Fraction coefficients c[0..cap]; every
operation truncates at the length of its inputs.
"""

from fractions import Fraction
from math import factorial


def zero_series(cap: int) -> list[Fraction]:
    return [Fraction(0)] * (cap + 1)


def exp_series(cap: int) -> list[Fraction]:
    return [Fraction(1, factorial(k)) for k in range(cap + 1)]


def series_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = min(len(a), len(b))
    return [a[k] + b[k] for k in range(n)]


def series_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = min(len(a), len(b))
    out = zero_series(n - 1)
    for i, x in enumerate(a[:n]):
        if x == 0:
            continue
        for j in range(n - i):
            if b[j]:
                out[i + j] += x * b[j]
    return out


def series_compose(outer: list[Fraction], inner: list[Fraction]) -> list[Fraction]:
    """outer(inner(t)) truncated; inner must have zero constant term."""
    if inner and inner[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(len(outer), len(inner))
    out = zero_series(n - 1)
    out[0] = outer[0]
    power = zero_series(n - 1)
    power[0] = Fraction(1)
    for k in range(1, n):
        power = series_mul(power, inner[:n])
        if outer[k] == 0:
            continue
        for j, c in enumerate(power):
            out[j] += outer[k] * c
    return out
