"""Closed-form counts for product sets in the infinite dihedral group.

``count_N(x, y)`` is the number of vectors in Z**x of L1 norm y and
``count_R(x, y)`` the number of those whose positive entries sum to
``ceil(y/2)`` and negative entries to ``-floor(y/2)``.  ``gamma(k, p, n)``
is the largest ``|S**n|`` over size-k sets with p reflections.

All arithmetic is exact.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from math import comb
from typing import Iterable, Sequence


def binom(m: int, r: int) -> int:
    """C(m, r), with C(m, r) = 0 for r < 0 or r > m >= 0."""
    if r < 0 or m < 0 or r > m:
        return 0
    return comb(m, r)


@dataclass(frozen=True)
class GrowthQuery:
    k: int
    p: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 <= self.p <= self.k:
            raise ValueError(f"need 0 <= p <= k, got p={self.p}, k={self.k}")


@lru_cache(maxsize=None)
def count_N(x: int, y: int) -> int:
    if x < 0 or y < 0:
        raise ValueError("x and y must be non-negative")
    if y == 0:
        return 1
    if x == 0:
        return 0
    return sum(2**s * comb(x, s) * comb(y - 1, s - 1) for s in range(1, min(x, y) + 1))


@lru_cache(maxsize=None)
def count_R(x: int, y: int) -> int:
    if x < 1 or y < 1:
        raise ValueError("R(x, y) is defined for x, y >= 1")
    if y == 1:
        return x
    if x == 1:
        return 0
    neg, pos = y // 2, (y + 1) // 2
    # r items carry the negative mass, the other x - r share the positive mass
    return sum(
        comb(x, r) * comb(neg - 1, r - 1) * comb(pos + x - r - 1, x - r - 1)
        for r in range(1, min(x - 1, neg) + 1)
    )


# -- truncated power series ------------------------------------------------

def _series_mul(f: Sequence[int], g: Sequence[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, fi in enumerate(f[: order + 1]):
        if fi:
            for j, gj in enumerate(g[: order + 1 - i]):
                out[i + j] += fi * gj
    return out


def _series_inverse(f: Sequence[int], order: int) -> list[int]:
    if f[0] not in (1, -1):
        raise ValueError("series must have a unit constant term")
    inv = [0] * (order + 1)
    inv[0] = f[0]
    for d in range(1, order + 1):
        acc = sum(f[j] * inv[d - j] for j in range(1, min(d, len(f) - 1) + 1))
        inv[d] = -acc * f[0]
    return inv


def _series_pow(f: Sequence[int], e: int, order: int) -> list[int]:
    result = [1] + [0] * order
    base = list(f[: order + 1]) + [0] * max(0, order + 1 - len(f))
    while e:
        if e & 1:
            result = _series_mul(result, base, order)
        e >>= 1
        if e:
            base = _series_mul(base, base, order)
    return result


def series_N_univariate(x: int, y_max: int) -> list[int]:
    """Coefficients of ((1+T)/(1-T))**x through T**y_max."""
    if x < 0 or y_max < 0:
        raise ValueError("x and y_max must be non-negative")
    ratio = _series_mul([1, 1], _series_inverse([1, -1], y_max), y_max)
    return _series_pow(ratio, x, y_max)


@dataclass(frozen=True)
class SeriesTable:
    """Coefficients of (1-Y)/(1-X-Y-XY), indexed by ``table[x, y]``."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def x_max(self) -> int:
        return len(self.entries) - 1

    @property
    def y_max(self) -> int:
        return len(self.entries[0]) - 1

    def __getitem__(self, xy: tuple[int, int]) -> int:
        x, y = xy
        return self.entries[x][y]

    def row(self, x: int) -> tuple[int, ...]:
        return self.entries[x]


def series_N_bivariate(x_max: int, y_max: int) -> SeriesTable:
    if x_max < 0 or y_max < 0:
        raise ValueError("x_max and y_max must be non-negative")
    t = [[0] * (y_max + 1) for _ in range(x_max + 1)]
    for x in range(x_max + 1):
        for y in range(y_max + 1):
            if x == 0 and y <= 1:
                # numerator 1 - Y fixes the first two coefficients
                t[x][y] = 1 if y == 0 else 0
                continue
            left = t[x - 1][y] if x else 0
            down = t[x][y - 1] if y else 0
            diag = t[x - 1][y - 1] if x and y else 0
            t[x][y] = left + down + diag
    return SeriesTable(tuple(tuple(r) for r in t))


# -- growth ----------------------------------------------------------------

def _same_parity_prefix(x: int, n: int) -> list[int]:
    """acc[m] = sum of N(x, j) over 0 <= j <= m with j = m (mod 2)."""
    acc = [0] * (n + 1)
    for m in range(n + 1):
        acc[m] = count_N(x, m) + (acc[m - 2] if m >= 2 else 0)
    return acc


def gamma(k: int, p: int, n: int) -> int:
    """Exact maximum of |S**n| over size-k sets with p reflections."""
    GrowthQuery(k, p, n)
    if p == 0:
        return comb(n + k - 1, k - 1)
    x = k - p
    acc = _same_parity_prefix(x, n)
    all_translations = binom(n + x - 1, x - 1)
    # l < n, l = n (mod 2), no reflection mass
    zero_reflection = acc[n - 2] if n >= 2 else 0
    # l = q + j = n (mod 2)  <=>  j = n - q (mod 2), j <= n - q
    with_reflection = sum(count_R(p, q) * acc[n - q] for q in range(1, n + 1))
    return all_translations + zero_reflection + with_reflection


def gamma_one_reflection(k: int, n: int) -> int:
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    tail = sum(2**s * comb(k - 1, s) * comb(n - 1, s) for s in range(1, min(k - 1, n - 1) + 1))
    return 1 + binom(n + k - 2, k - 2) + tail


def gamma_max(k: int, n: int, *, min_p: int = 0) -> tuple[int, tuple[int, ...]]:
    """Maximum of gamma(k, p, n) over min_p <= p <= k and its argmax (ascending)."""
    values = {p: gamma(k, p, n) for p in range(min_p, k + 1)}
    best = max(values.values())
    return best, tuple(p for p, v in values.items() if v == best)


def _table_cell(cell: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, ...]]:
    n, k = cell
    return cell, gamma_max(k, n, min_p=1)[1]


def optimal_p_table(
    k_range: Iterable[int], n_range: Iterable[int], *, workers: int = 1
) -> dict[tuple[int, int], tuple[int, ...]]:
    """Optimal reflection counts keyed by ``(n, k)``; argmax over p >= 1 only."""
    ks, ns = list(k_range), list(n_range)
    if not ks or not ns:
        raise ValueError("ranges must be nonempty")
    if min(ks) < 1 or min(ns) < 1:
        raise ValueError("all k and n must be positive")
    cells = list(cartesian(ns, ks))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = dict(pool.map(_table_cell, cells, chunksize=8))
    else:
        results = dict(map(_table_cell, cells))
    return {cell: results[cell] for cell in cells}


def format_argmax(ps: Sequence[int]) -> str:
    return ", ".join(str(p) for p in sorted(ps))
