"""Brute-force ground truth for product-set sizes and multiplicity images.

Nothing here uses the closed forms in :mod:`counting`; the two are meant to
be compared against each other.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Sequence

import numpy as np

from .dihedral import DihedralElement, multiply, profile
from .generic import GeneratorTuple, l1_vectors

DEFAULT_CAP = 50_000_000
DEFAULT_WORD_BUDGET = 20_000_000

# keys are 2*shift + reflection bit; stay well inside int64
_INT64_SAFE = 2**61


class CapacityError(RuntimeError):
    """An enumeration would exceed its configured size limit."""


@dataclass(frozen=True)
class MultiplicityVector:
    m: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(self.m))
        if not 0 <= self.p <= len(self.m):
            raise ValueError(f"reflection count {self.p} outside 0..{len(self.m)}")

    @property
    def k(self) -> int:
        return len(self.m)

    @property
    def reflection_mass(self) -> int:
        return sum(abs(v) for v in self.m[: self.p])

    @property
    def total_mass(self) -> int:
        return sum(abs(v) for v in self.m)


@dataclass(frozen=True)
class ProductSetLevel:
    """The set S**level (products of exactly ``level`` factors)."""

    level: int
    elements: frozenset[DihedralElement]

    def __len__(self) -> int:
        return len(self.elements)


# -- product sets ------------------------------------------------------------

def _as_elements(S: GeneratorTuple | Iterable[DihedralElement]) -> tuple[DihedralElement, ...]:
    elements = tuple(S)
    if not elements:
        raise ValueError("generating set must be nonempty")
    return elements


def _levels_python(gens: Sequence[DihedralElement], n: int, cap: int) -> set[DihedralElement]:
    level = set(gens)
    for _ in range(n - 1):
        level = {multiply(x, s) for x in level for s in gens}
        if len(level) > cap:
            raise CapacityError(f"product set level exceeds cap of {cap} elements")
    return level


def _levels_numpy(gens: Sequence[DihedralElement], n: int, cap: int) -> np.ndarray:
    g_shift = np.array([s.shift for s in gens], dtype=np.int64)
    g_bit = np.array([int(s.is_reflection) for s in gens], dtype=np.int64)
    keys = np.unique(2 * g_shift + g_bit)
    for _ in range(n - 1):
        shift = keys >> 1
        sign = 1 - 2 * (keys & 1)
        new_shift = shift[:, None] + sign[:, None] * g_shift[None, :]
        new_bit = (keys & 1)[:, None] ^ g_bit[None, :]
        keys = np.unique((2 * new_shift + new_bit).ravel())
        if keys.size > cap:
            raise CapacityError(f"product set level exceeds cap of {cap} elements")
    return keys


def _fits_int64(gens: Sequence[DihedralElement], n: int) -> bool:
    return 2 * n * max(abs(s.shift) for s in gens) + 1 < _INT64_SAFE


def product_set_level(
    S: GeneratorTuple | Iterable[DihedralElement], n: int, *, cap: int = DEFAULT_CAP
) -> ProductSetLevel:
    if n < 1:
        raise ValueError("n must be at least 1")
    gens = _as_elements(S)
    if _fits_int64(gens, n):
        keys = _levels_numpy(gens, n, cap)
        elements = frozenset(
            DihedralElement(int(key) >> 1, -1 if key & 1 else 1) for key in keys.tolist()
        )
    else:
        elements = frozenset(_levels_python(gens, n, cap))
    return ProductSetLevel(n, elements)


def enumerate_product_set(
    S: GeneratorTuple | Iterable[DihedralElement],
    n: int,
    *,
    cap: int = DEFAULT_CAP,
    return_elements: bool = False,
) -> int | tuple[int, frozenset[DihedralElement]]:
    """|S**n| by n - 1 frontier expansions with per-level deduplication.

    Small shifts go through a vectorised int64 path; anything that could
    overflow falls back to Python integers.  Raises CapacityError rather
    than truncating.
    """
    if return_elements:
        level = product_set_level(S, n, cap=cap)
        return len(level), level.elements
    if n < 1:
        raise ValueError("n must be at least 1")
    gens = _as_elements(S)
    if _fits_int64(gens, n):
        return int(_levels_numpy(gens, n, cap).size)
    return len(_levels_python(gens, n, cap))


# -- multiplicity images -----------------------------------------------------

def _check_kpn(k: int, p: int, n: int) -> None:
    if not 1 <= p <= k:
        raise ValueError(f"need 1 <= p <= k, got p={p}, k={k}")
    if n < 1:
        raise ValueError("n must be at least 1")


def _signs(k: int, p: int) -> tuple[int, ...]:
    return (-1,) * p + (1,) * (k - p)


def enumerate_multiplicity_image(
    k: int, p: int, n: int, *, budget: int = DEFAULT_WORD_BUDGET
) -> frozenset[MultiplicityVector]:
    """Profile multiplicities of all k**n words, deduplicated."""
    _check_kpn(k, p, n)
    if k**n > budget:
        raise CapacityError(f"{k}**{n} words exceed the budget of {budget}")
    signs = _signs(k, p)
    seen = {profile(signs, w).multiplicities for w in cartesian(range(1, k + 1), repeat=n)}
    return frozenset(MultiplicityVector(m, p) for m in seen)


def _coerce(m: MultiplicityVector | Sequence[int], p: int) -> MultiplicityVector:
    if isinstance(m, MultiplicityVector):
        if m.p != p:
            raise ValueError(f"vector carries p={m.p}, expected {p}")
        return m
    return MultiplicityVector(tuple(m), p)


def satisfies_membership_criterion(
    m: MultiplicityVector | Sequence[int], k: int, p: int, n: int
) -> bool:
    """Whether m is the multiplicity vector of some word of length n."""
    _check_kpn(k, p, n)
    v = _coerce(m, p)
    if v.k != k:
        raise ValueError(f"vector has length {v.k}, expected {k}")
    q, l = v.reflection_mass, v.total_mass
    if l > n:
        raise ValueError(f"total mass {l} exceeds n={n}")
    if (n - l) % 2:
        return False
    positive = sum(x for x in v.m[:p] if x > 0)
    if positive != (q + 1) // 2 or q - positive != q // 2:
        return False
    if q == 0 and l == n and any(x < 0 for x in v.m[p:]):
        return False
    return True


def criterion_image(k: int, p: int, n: int) -> frozenset[MultiplicityVector]:
    """All m with ||m||_1 <= n accepted by the membership criterion."""
    _check_kpn(k, p, n)
    return frozenset(
        MultiplicityVector(m, p)
        for m in l1_vectors(k, n)
        if satisfies_membership_criterion(m, k, p, n)
    )


def construct_witness_word(
    m: MultiplicityVector | Sequence[int], k: int, p: int, n: int
) -> tuple[int, ...]:
    """A length-n word whose profile multiplicities are exactly ``m``.

    Translations with nonnegative multiplicity come first, then the first
    reflection, then translations with negative multiplicity, then the
    remaining reflections alternating between the positive and negative
    pools, and finally padding with index 1 (which cancels in pairs).
    """
    if not satisfies_membership_criterion(m, k, p, n):
        raise ValueError(f"{tuple(m.m if isinstance(m, MultiplicityVector) else m)} "
                         f"is not in the image for k={k}, p={p}, n={n}")
    v = _coerce(m, p)
    q, l = v.reflection_mass, v.total_mass
    trans = range(p + 1, k + 1)
    x_block = [i for i in trans for _ in range(max(v.m[i - 1], 0))]
    y_block = [i for i in trans for _ in range(max(-v.m[i - 1], 0))]

    if q == 0:
        if l == n:
            word = x_block
        else:
            word = x_block + [1] + y_block + [1] * (n - l - 1)
        return tuple(word)

    refl = range(1, p + 1)
    r_plus = [i for i in refl for _ in range(max(v.m[i - 1], 0))]
    r_minus = [i for i in refl for _ in range(max(-v.m[i - 1], 0))]
    schedule = []
    for j in range(q):
        schedule.append(r_plus[j // 2] if j % 2 == 0 else r_minus[j // 2])
    word = x_block + schedule[:1] + y_block + schedule[1:] + [1] * (n - l)
    return tuple(word)


# -- random sets -------------------------------------------------------------

def random_set_audit(
    k: int, p: int, n: int, trials: int, coefficient_bound: int, seed: int
) -> int:
    """Largest |S**n| seen over random sets with p reflections and k - p translations.

    Shifts are drawn without replacement within each orientation class from
    ``[-coefficient_bound, coefficient_bound]``, so the k elements are distinct.
    """
    if k < 1 or not 0 <= p <= k or n < 1:
        raise ValueError(f"invalid (k, p, n) = ({k}, {p}, {n})")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if coefficient_bound < 0:
        raise ValueError("coefficient_bound must be non-negative")
    pool = range(-coefficient_bound, coefficient_bound + 1)
    if max(p, k - p) > len(pool):
        raise ValueError(
            f"cannot draw {max(p, k - p)} distinct shifts from {len(pool)} values"
        )
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        S = [DihedralElement(a, -1) for a in rng.sample(pool, p)]
        S += [DihedralElement(a, 1) for a in rng.sample(pool, k - p)]
        best = max(best, enumerate_product_set(S, n))
    return best
