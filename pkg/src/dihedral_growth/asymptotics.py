"""Leading-order growth for fixed k and exponential growth on the diagonal k = n."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt
from typing import Iterable

import mpmath

from .counting import gamma, gamma_max
from .oracle import CapacityError

DIGITS = 50

# convergent of sqrt(2) - 1; any T in (0, 1) yields a valid upper bound
UPPER_BOUND_T = Fraction(408, 985)


def _mp(value) -> mpmath.mpf:
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def growth_constant() -> mpmath.mpf:
    """3 + 2*sqrt(2) at the working precision."""
    with mpmath.workdps(DIGITS):
        return 3 + 2 * mpmath.sqrt(2)


def alpha(x: int) -> Fraction:
    """Leading coefficient of count_N(x, y) as a polynomial in y."""
    if x < 1:
        raise ValueError("alpha(x) needs x >= 1")
    return Fraction(2**x, factorial(x - 1))


def beta(x: int) -> Fraction:
    """Leading coefficient of count_R(x, y) as a polynomial in y."""
    if x < 2:
        raise ValueError("beta(x) needs x >= 2")
    return Fraction(4 * comb(2 * x - 2, x - 1), 2**x * factorial(x - 2))


def reflection_probability(p: int) -> Fraction:
    """Probability that a uniform random subset of {1..2p-2} has size p-1."""
    if p < 1:
        raise ValueError("p must be at least 1")
    return Fraction(comb(2 * p - 2, p - 1), 4 ** (p - 1))


def leading_coefficient(k: int, p: int) -> Fraction:
    """Coefficient of n**(k-1) in gamma(k, p, n)."""
    if not 1 <= p <= k:
        raise ValueError(f"need 1 <= p <= k, got p={p}, k={k}")
    return reflection_probability(p) * Fraction(2 ** (k - 1), factorial(k - 1))


def binary_entropy(a) -> mpmath.mpf:
    with mpmath.workdps(DIGITS):
        a = _mp(a)
        if not 0 < a < 1:
            raise ValueError("binary entropy needs 0 < a < 1")
        return -a * mpmath.log(a, 2) - (1 - a) * mpmath.log(1 - a, 2)


def diagonal_lower_index(n: int) -> int:
    """floor((2 - sqrt(2)) * n) in integer arithmetic."""
    if n < 1:
        raise ValueError("n must be positive")
    # 2n^2 is never a square, so ceil(sqrt(2) n) = isqrt(2n^2) + 1
    t = 2 * n - isqrt(2 * n * n) - 1
    if not (2 * n - t) ** 2 > 2 * n * n > (2 * n - t - 1) ** 2:
        raise ArithmeticError(f"floor((2 - sqrt 2) n) check failed at n={n}")
    return t


def diagonal_lower_bound(n: int) -> int:
    """2**t * C(n-1, t)**2 with t = floor((2 - sqrt(2)) n); 1 when t is out of range."""
    t = diagonal_lower_index(n)
    if not 1 <= t <= n - 1:
        return 1
    return 2**t * comb(n - 1, t) ** 2


def upper_bound_base(T) -> Fraction:
    """(1+T) / (T(1-T)), minimised at T = sqrt(2) - 1."""
    T = Fraction(T)
    if not 0 < T < 1:
        raise ValueError("T must lie in (0, 1)")
    return (1 + T) / (T * (1 - T))


def diagonal_upper_bound(n: int, T=UPPER_BOUND_T) -> Fraction:
    """T**-n * ((1+T)/(1-T))**n, an upper bound for gamma_max(n, n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return upper_bound_base(T) ** n


@dataclass(frozen=True)
class ExponentEstimate:
    n: int
    gamma: int
    value: mpmath.mpf

    def digits(self, significant: int = 30) -> str:
        return mpmath.nstr(self.value, significant, strip_zeros=False)


def nth_root(value: int, n: int) -> mpmath.mpf:
    with mpmath.workdps(DIGITS):
        return mpmath.root(mpmath.mpf(value), n)


def estimate_growth_exponent(n_max: int, samples: Iterable[int]) -> list[ExponentEstimate]:
    """gamma_max(n, n) ** (1/n) at each sampled n."""
    out = []
    for n in samples:
        if n < 1:
            raise ValueError(f"sample {n} is not positive")
        if n > n_max:
            raise CapacityError(f"sample n={n} exceeds the budget n_max={n_max}")
        g, _ = gamma_max(n, n)
        out.append(ExponentEstimate(n, g, nth_root(g, n)))
    return out


def relative_leading_error(k: int, p: int, n: int) -> Fraction:
    """|gamma(k, p, n) / (C(k, p) n**(k-1)) - 1|, exactly."""
    return abs(Fraction(gamma(k, p, n)) / (leading_coefficient(k, p) * n ** (k - 1)) - 1)
