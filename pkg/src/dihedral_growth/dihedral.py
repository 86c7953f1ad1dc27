"""Arithmetic in the infinite dihedral group and word profiles.

An element ``(a, b)`` acts on the integers as ``x -> b*x + a`` with
``b in {+1, -1}``.  Words are sequences of 1-based generator indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Literal, Sequence

Orientation = Literal[1, -1]


def _check_orientation(b: int) -> None:
    if b not in (1, -1):
        raise ValueError(f"orientation must be +1 or -1, got {b!r}")


@dataclass(frozen=True, order=True)
class DihedralElement:
    shift: int
    orientation: int = 1

    def __post_init__(self) -> None:
        _check_orientation(self.orientation)

    @property
    def is_reflection(self) -> bool:
        return self.orientation == -1

    @property
    def is_translation(self) -> bool:
        return self.orientation == 1

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        return multiply(self, other)

    def inverse(self) -> DihedralElement:
        return DihedralElement(-self.orientation * self.shift, self.orientation)

    def __call__(self, x: int) -> int:
        return self.orientation * x + self.shift

    def __str__(self) -> str:
        return f"({self.shift},{'+' if self.orientation == 1 else '-'})"


IDENTITY = DihedralElement(0, 1)


def multiply(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    return DihedralElement(x.shift + x.orientation * y.shift, x.orientation * y.orientation)


def product(elements: Iterable[DihedralElement]) -> DihedralElement:
    """Left-to-right product; the empty product is the identity."""
    return reduce(multiply, elements, IDENTITY)


def check_word(word: Sequence[int], k: int) -> tuple[int, ...]:
    """Validate a 1-based index word over ``k`` generators and return it as a tuple."""
    word = tuple(word)
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(word) < 1:
        raise ValueError("words must have length n >= 1")
    for i in word:
        if not 1 <= i <= k:
            raise ValueError(f"index {i} out of range 1..{k}")
    return word


def evaluate_word(generators: Sequence[DihedralElement], word: Sequence[int]) -> DihedralElement:
    word = check_word(word, len(generators))
    return product(generators[i - 1] for i in word)


@dataclass(frozen=True)
class Profile:
    """Per-generator counts and signed multiplicities of an index word.

    ``multiplicities[i]`` is the sum, over positions where generator ``i``
    occurs, of the product of orientations of all earlier letters.
    """

    counts: tuple[int, ...]
    multiplicities: tuple[int, ...]

    @property
    def length(self) -> int:
        return sum(self.counts)


def profile(signs: Sequence[int], word: Sequence[int]) -> Profile:
    k = len(signs)
    for b in signs:
        _check_orientation(b)
    word = check_word(word, k)
    counts = [0] * k
    mult = [0] * k
    running = 1
    for i in word:
        counts[i - 1] += 1
        mult[i - 1] += running
        running *= signs[i - 1]
    return Profile(tuple(counts), tuple(mult))


def reconstruct(generators: Sequence[DihedralElement], m: Sequence[int]) -> DihedralElement:
    """Group element determined by a multiplicity vector.

    Equals ``evaluate_word`` for any word whose profile has multiplicities ``m``.
    """
    if len(m) != len(generators):
        raise ValueError(f"multiplicity vector has length {len(m)}, expected {len(generators)}")
    shift = sum(mi * s.shift for mi, s in zip(m, generators))
    # b**m depends only on the parity of m
    odd_reflections = sum(1 for mi, s in zip(m, generators) if s.is_reflection and mi % 2)
    return DihedralElement(shift, -1 if odd_reflections % 2 else 1)
