"""Canonical generic generator tuples.

Shifts ``a_i = (2n+1)**(i-1)`` separate every pair of integer vectors of
L1 norm at most ``n``: a nonzero difference ``u`` has ``|u_i| <= 2n``, so
``sum(a_i * u_i)`` is a nonzero balanced base-(2n+1) numeral.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .dihedral import DihedralElement


def l1_vectors(dim: int, radius: int, *, exact: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield every vector in Z**dim with L1 norm <= radius (or == radius if exact)."""
    if dim < 0 or radius < 0:
        raise ValueError("dim and radius must be non-negative")
    if dim == 0:
        if radius == 0 or not exact:
            yield ()
        return
    for head in range(-radius, radius + 1):
        rest = radius - abs(head)
        for tail in l1_vectors(dim - 1, rest, exact=exact):
            yield (head,) + tail


def sparse_coefficients(k: int, n: int) -> tuple[int, ...]:
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    base = 2 * n + 1
    return tuple(base**i for i in range(k))


def is_generic(a: Sequence[int], n: int) -> bool:
    """True iff no nonzero u with ||u||_1 <= 2n has a . u == 0 (exhaustive)."""
    if n < 1:
        raise ValueError("n must be positive")
    a = tuple(a)
    for u in l1_vectors(len(a), 2 * n):
        if any(u) and sum(ai * ui for ai, ui in zip(a, u)) == 0:
            return False
    return True


@dataclass(frozen=True)
class GeneratorTuple:
    """Ordered generators: reflections first, then translations."""

    elements: tuple[DihedralElement, ...]
    reflection_count: int
    horizon: int

    def __post_init__(self) -> None:
        k, p = len(self.elements), self.reflection_count
        if not 0 <= p <= k:
            raise ValueError(f"reflection count {p} outside 0..{k}")
        if self.horizon < 1:
            raise ValueError("horizon must be positive")
        for i, s in enumerate(self.elements):
            if s.is_reflection != (i < p):
                raise ValueError("the first p elements must be exactly the reflections")

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def shifts(self) -> tuple[int, ...]:
        return tuple(s.shift for s in self.elements)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(s.orientation for s in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __iter__(self) -> Iterator[DihedralElement]:
        return iter(self.elements)


def build_generator_tuple(k: int, p: int, n: int) -> GeneratorTuple:
    if not 0 <= p <= k:
        raise ValueError(f"need 0 <= p <= k, got p={p}, k={k}")
    shifts = sparse_coefficients(k, n)
    elements = tuple(DihedralElement(a, -1 if i < p else 1) for i, a in enumerate(shifts))
    return GeneratorTuple(elements, p, n)
