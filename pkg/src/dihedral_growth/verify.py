"""Oracle-versus-formula suites behind ``dihedral-growth verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Iterator

import mpmath

from . import asymptotics as asy
from .counting import (
    count_N,
    count_R,
    gamma,
    gamma_max,
    gamma_one_reflection,
    series_N_bivariate,
    series_N_univariate,
)
from .dihedral import DihedralElement, IDENTITY, evaluate_word, multiply, profile, reconstruct
from .generic import build_generator_tuple, is_generic, sparse_coefficients
from .oracle import (
    construct_witness_word,
    criterion_image,
    enumerate_multiplicity_image,
    enumerate_product_set,
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


Check = Callable[[], tuple[bool, str]]


def _image_cases() -> Iterator[tuple[int, int, int]]:
    for k in range(1, 4):
        for p in range(1, k + 1):
            for n in range(1, 6):
                yield k, p, n
    for p in range(1, 5):
        for n in range(1, 5):
            yield 4, p, n


def _gamma_cases() -> Iterator[tuple[int, int, int]]:
    for k in range(1, 5):
        for p in range(k + 1):
            for n in range(1, 6):
                yield k, p, n
    for p in range(6):
        yield 5, p, 4


# -- core ------------------------------------------------------------------

def _lemma_evaluation() -> tuple[bool, str]:
    rng = random.Random(0)
    for k in range(1, 4):
        for p in range(k + 1):
            gens = [DihedralElement(rng.randint(-50, 50), -1 if i < p else 1) for i in range(k)]
            signs = [g.orientation for g in gens]
            for n in range(1, 7):
                for w in cartesian(range(1, k + 1), repeat=n):
                    prof = profile(signs, w)
                    if evaluate_word(gens, w) != reconstruct(gens, prof.multiplicities):
                        return False, f"word {w} on {gens}"
                    if sum(prof.counts) != n:
                        return False, f"counts of {w} do not sum to n"
                    for c, m in zip(prof.counts, prof.multiplicities):
                        if abs(m) > c or (c - m) % 2:
                            return False, f"profile invariant broken for {w}"
    return True, "k<=3, n<=6 exhaustive"


def _group_axioms() -> tuple[bool, str]:
    rng = random.Random(1)
    for _ in range(2000):
        x, y, z = (DihedralElement(rng.randint(-10**30, 10**30), rng.choice((1, -1))) for _ in range(3))
        if multiply(multiply(x, y), z) != multiply(x, multiply(y, z)):
            return False, f"associativity fails at {x}, {y}, {z}"
        if multiply(x, IDENTITY) != x or multiply(IDENTITY, x) != x:
            return False, f"identity fails at {x}"
        if multiply(x, x.inverse()) != IDENTITY:
            return False, f"inverse fails at {x}"
    return True, "2000 random triples"


def _generic_coefficients() -> tuple[bool, str]:
    for k in range(1, 5):
        for n in range(1, 5):
            if not is_generic(sparse_coefficients(k, n), n):
                return False, f"k={k}, n={n}"
    return True, "k<=4, n<=4"


def _brute_counts() -> tuple[bool, str]:
    for x in range(6):
        for y in range(9):
            vecs = [u for u in cartesian(range(-y, y + 1), repeat=x) if sum(map(abs, u)) == y]
            if len(vecs) != count_N(x, y):
                return False, f"N({x},{y})"
            if x >= 1 and y >= 1:
                balanced = sum(
                    1 for u in vecs if sum(v for v in u if v > 0) == (y + 1) // 2
                )
                if balanced != count_R(x, y):
                    return False, f"R({x},{y})"
    return True, "x<=5, y<=8"


def _series() -> tuple[bool, str]:
    table = series_N_bivariate(6, 50)
    for x in range(7):
        uni = series_N_univariate(x, 50)
        for y in range(51):
            if not uni[y] == table[x, y] == count_N(x, y):
                return False, f"N({x},{y})"
    return True, "x<=6, y<=50"


def _one_reflection() -> tuple[bool, str]:
    for k in range(1, 41):
        for n in range(1, 41):
            if gamma(k, 1, n) != gamma_one_reflection(k, n):
                return False, f"k={k}, n={n}"
    return True, "k, n <= 40"


# -- image / witness --------------------------------------------------------

def _image_matches_criterion() -> tuple[bool, str]:
    for k, p, n in _image_cases():
        if enumerate_multiplicity_image(k, p, n) != criterion_image(k, p, n):
            return False, f"k={k}, p={p}, n={n}"
    return True, "1<=p<=k<=3, n<=5 and k=4, n<=4"


def _oracle_matches_gamma() -> tuple[bool, str]:
    for k, p, n in _gamma_cases():
        size = enumerate_product_set(build_generator_tuple(k, p, n), n)
        if size != gamma(k, p, n):
            return False, f"k={k}, p={p}, n={n}: oracle {size}, formula {gamma(k, p, n)}"
        if p >= 1 and (k, n) != (5, 4) and len(enumerate_multiplicity_image(k, p, n)) != size:
            return False, f"image size differs at k={k}, p={p}, n={n}"
    return True, "k<=4, p<=k, n<=5 and k=5, n=4"


def _witness_roundtrip() -> tuple[bool, str]:
    for k, p, n in _image_cases():
        signs = (-1,) * p + (1,) * (k - p)
        for v in criterion_image(k, p, n):
            word = construct_witness_word(v, k, p, n)
            if len(word) != n or profile(signs, word).multiplicities != v.m:
                return False, f"m={v.m}, k={k}, p={p}, n={n}"
    return True, "every member of every image"


# -- asymptotic ---------------------------------------------------------------

def _leading_terms() -> tuple[bool, str]:
    for k in range(1, 6):
        for p in range(1, k + 1):
            e1 = asy.relative_leading_error(k, p, 2000)
            e2 = asy.relative_leading_error(k, p, 4000)
            if e1 > Fraction(1, 10) or e2 > e1 + Fraction(1, 10**6):
                return False, f"k={k}, p={p}: e(2000)={float(e1):.3g}, e(4000)={float(e2):.3g}"
    return True, "1<=p<=k<=5"


def _dominance() -> tuple[bool, str]:
    for p in range(2, 65):
        if asy.reflection_probability(p) >= 1:
            return False, f"p={p}"
    for k in range(2, 65):
        top = asy.leading_coefficient(k, 1)
        for p in range(2, k + 1):
            if asy.leading_coefficient(k, p) >= top:
                return False, f"k={k}, p={p}"
    return True, "p, k <= 64"


# -- diagonal -----------------------------------------------------------------

def _upper_bound() -> tuple[bool, str]:
    for n in range(1, 61):
        if gamma_max(n, n)[0] > asy.diagonal_upper_bound(n, asy.UPPER_BOUND_T):
            return False, f"n={n}"
    return True, "n <= 60, T = 408/985"


def _lower_bound() -> tuple[bool, str]:
    for n in range(1, 201):
        if gamma(n, 1, n) < asy.diagonal_lower_bound(n):
            return False, f"n={n}"
    return True, "n <= 200"


def _exponent_at_80() -> tuple[bool, str]:
    (est,) = asy.estimate_growth_exponent(80, [80])
    ok = 5.3 <= est.value <= 5.8285
    return ok, f"gamma_max(80,80)^(1/80) = {est.digits(12)}"


def _entropy_identity() -> tuple[bool, str]:
    with mpmath.workdps(asy.DIGITS):
        a = 2 - mpmath.sqrt(2)
        gap = abs(mpmath.power(2, a + 2 * asy.binary_entropy(a)) - asy.growth_constant())
    return gap < 1e-9, f"gap {mpmath.nstr(gap, 5)}"


SUITES: dict[str, dict[str, Check]] = {
    "core": {
        "evaluation formula and profile invariants": _lemma_evaluation,
        "group axioms": _group_axioms,
        "generic coefficients": _generic_coefficients,
        "N and R against enumeration": _brute_counts,
        "series against N": _series,
        "one-reflection closed form": _one_reflection,
    },
    "image": {
        "multiplicity image equals criterion set": _image_matches_criterion,
        "product-set oracle equals gamma": _oracle_matches_gamma,
    },
    "witness": {
        "witness words round-trip": _witness_roundtrip,
    },
    "asymptotic": {
        "leading terms at n=2000, 4000": _leading_terms,
        "one reflection dominates": _dominance,
    },
    "diagonal": {
        "upper bound n<=60": _upper_bound,
        "lower bound n<=200": _lower_bound,
        "exponent at n=80": _exponent_at_80,
        "entropy identity": _entropy_identity,
    },
}


def run_suite(name: str) -> list[CheckResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    results = []
    for label, check in SUITES[name].items():
        ok, detail = check()
        results.append(CheckResult(name, label, bool(ok), detail))
    return results
