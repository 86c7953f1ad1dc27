"""Exit criteria.  Each test records a PASS/FAIL line shown in the terminal summary."""
import time
from fractions import Fraction
from itertools import product

import mpmath

from dihedral_growth.asymptotics import (
    UPPER_BOUND_T,
    binary_entropy,
    diagonal_lower_bound,
    diagonal_upper_bound,
    estimate_growth_exponent,
    growth_constant,
    relative_leading_error,
)
from dihedral_growth.counting import (
    count_N,
    count_R,
    gamma,
    gamma_max,
    gamma_one_reflection,
    optimal_p_table,
    series_N_bivariate,
    series_N_univariate,
)
from dihedral_growth.dihedral import profile
from dihedral_growth.generic import build_generator_tuple
from dihedral_growth.oracle import (
    construct_witness_word,
    criterion_image,
    enumerate_multiplicity_image,
    enumerate_product_set,
    random_set_audit,
)

# optimal reflection counts, rows n = 2..20, columns k = 2..10
PAPER_TABLE = """
1 | 1,2 | 2,3 | 3,4 | 4,5 | 5,6 | 6,7 | 7,8 | 8,9
1 | 1 | 2 | 2,3 | 3 | 4 | 5 | 5 | 6
1 | 1 | 1 | 2 | 3 | 3 | 4 | 4 | 5
1 | 1 | 1 | 1 | 2 | 3 | 3 | 4 | 4
1 | 1 | 1 | 1 | 2 | 2 | 3 | 3 | 3
1 | 1 | 1 | 1 | 1 | 2 | 2 | 3 | 3
1 | 1 | 1 | 1 | 1 | 2 | 2 | 2 | 3
1 | 1 | 1 | 1 | 1 | 1 | 2 | 2 | 2
1 | 1 | 1 | 1 | 1 | 1 | 1 | 2 | 2
1 | 1 | 1 | 1 | 1 | 1 | 1 | 2 | 2
1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 2
1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1
1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1
1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1
1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1
1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1
1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1
1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1
1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1
"""


def paper_table():
    rows = [line.split("|") for line in PAPER_TABLE.strip().splitlines()]
    return {
        (n, k): tuple(int(p) for p in cell.split(","))
        for n, row in zip(range(2, 21), rows)
        for k, cell in zip(range(2, 11), row)
    }


def image_cases():
    for k in range(1, 4):
        for p in range(1, k + 1):
            for n in range(1, 6):
                yield k, p, n
    for p in range(1, 5):
        for n in range(1, 5):
            yield 4, p, n


def brute_vectors(dim, norm):
    return [u for u in product(range(-norm, norm + 1), repeat=dim) if sum(map(abs, u)) == norm]


def test_1_paper_value(record):
    start = time.perf_counter()
    value = gamma_max(2, 3)
    elapsed = time.perf_counter() - start
    ok = value == (6, (1,)) and elapsed < 1
    record("1 gamma_max(2,3) = 6, argmax {1}", ok, f"got {value} in {elapsed:.3f}s")
    assert value == (6, (1,))
    assert elapsed < 1


def test_2_table_reproduction(record):
    start = time.perf_counter()
    table = optimal_p_table(range(2, 11), range(2, 21))
    elapsed = time.perf_counter() - start
    expected = paper_table()
    mismatches = [cell for cell in expected if table[cell] != expected[cell]]
    ok = not mismatches and elapsed < 30
    record("2 optimal-p table matches cell-for-cell", ok,
           f"{len(expected) - len(mismatches)}/{len(expected)} cells in {elapsed:.2f}s")
    assert table[2, 4] == (2, 3) and table[6, 6] == (2,) and table[9, 9] == (2,)
    assert not mismatches, mismatches
    assert elapsed < 30


def test_3_oracle_equivalence(record):
    start = time.perf_counter()
    cases = [(k, p, n) for k in range(1, 5) for p in range(k + 1) for n in range(1, 6)]
    cases += [(5, p, 4) for p in range(6)]
    bad = [
        (k, p, n) for k, p, n in cases
        if enumerate_product_set(build_generator_tuple(k, p, n), n) != gamma(k, p, n)
    ]
    elapsed = time.perf_counter() - start
    record("3 product-set oracle equals gamma", not bad and elapsed < 120,
           f"{len(cases) - len(bad)}/{len(cases)} cases in {elapsed:.2f}s")
    assert not bad, bad
    assert elapsed < 120


def test_4_membership_criterion(record):
    start = time.perf_counter()
    bad_image, bad_witness, members = [], [], 0
    for k, p, n in image_cases():
        image = enumerate_multiplicity_image(k, p, n)
        if image != criterion_image(k, p, n):
            bad_image.append((k, p, n))
        signs = (-1,) * p + (1,) * (k - p)
        for v in image:
            members += 1
            word = construct_witness_word(v, k, p, n)
            if len(word) != n or profile(signs, word).multiplicities != v.m:
                bad_witness.append((v.m, k, p, n))
    elapsed = time.perf_counter() - start
    ok = not bad_image and not bad_witness and elapsed < 120
    record("4 image equals criterion set; witnesses round-trip", ok,
           f"{members} members, {len(bad_image)} image and {len(bad_witness)} witness failures, {elapsed:.2f}s")
    assert not bad_image, bad_image
    assert not bad_witness, bad_witness[:5]
    assert elapsed < 120


def test_5_closed_form_consistency(record):
    start = time.perf_counter()
    failures = []
    for k in range(1, 41):
        for n in range(1, 41):
            if gamma(k, 1, n) != gamma_one_reflection(k, n):
                failures.append(("one-reflection", k, n))
    for x in range(6):
        for y in range(9):
            vecs = brute_vectors(x, y)
            if count_N(x, y) != len(vecs):
                failures.append(("N", x, y))
            if x and y:
                balanced = sum(1 for u in vecs if sum(v for v in u if v > 0) == (y + 1) // 2)
                if count_R(x, y) != balanced:
                    failures.append(("R", x, y))
    table = series_N_bivariate(6, 50)
    for x in range(7):
        uni = series_N_univariate(x, 50)
        for y in range(51):
            if not uni[y] == table[x, y] == count_N(x, y):
                failures.append(("series", x, y))
    elapsed = time.perf_counter() - start
    record("5 closed forms, counts and series agree", not failures and elapsed < 60,
           f"{len(failures)} failures in {elapsed:.2f}s")
    assert not failures, failures[:5]
    assert elapsed < 60


def test_6_asymptotic_coefficients(record):
    start = time.perf_counter()
    worst = Fraction(0)
    failures = []
    for k in range(1, 6):
        for p in range(1, k + 1):
            e2000 = relative_leading_error(k, p, 2000)
            e4000 = relative_leading_error(k, p, 4000)
            worst = max(worst, e2000)
            if e2000 > Fraction(1, 10) or e4000 > e2000 + Fraction(1, 10**6):
                failures.append((k, p, float(e2000), float(e4000)))
    elapsed = time.perf_counter() - start
    record("6 leading coefficients within 10% at n=2000, non-increasing at 4000",
           not failures and elapsed < 300, f"worst e(2000) = {float(worst):.2e}, {elapsed:.2f}s")
    assert not failures, failures
    assert elapsed < 300


def test_7_diagonal_exponent(record):
    start = time.perf_counter()
    upper_bad = [n for n in range(1, 61) if gamma_max(n, n)[0] > diagonal_upper_bound(n, UPPER_BOUND_T)]
    lower_bad = [n for n in range(1, 201) if gamma(n, 1, n) < diagonal_lower_bound(n)]
    (est80,) = estimate_growth_exponent(80, [80])
    in_window = 5.3 <= est80.value <= 5.8285
    with mpmath.workdps(50):
        a = 2 - mpmath.sqrt(2)
        gap = abs(mpmath.power(2, a + 2 * binary_entropy(a)) - growth_constant())
    elapsed = time.perf_counter() - start
    ok = not upper_bad and not lower_bad and in_window and gap < 1e-9 and elapsed < 600
    record("7 diagonal bounds, n=80 exponent window, entropy identity", ok,
           f"gamma_max(80,80)^(1/80) = {est80.digits(10)}, gap {mpmath.nstr(gap, 3)}, {elapsed:.2f}s")
    assert not upper_bad, upper_bad
    assert not lower_bad, lower_bad
    assert in_window, est80.value
    assert gap < 1e-9
    assert elapsed < 600


def test_8_maximality_audit(record):
    start = time.perf_counter()
    excess = []
    for k in range(1, 4):
        for p in range(k + 1):
            for n in range(1, 5):
                best = random_set_audit(k, p, n, trials=500, coefficient_bound=20, seed=2024)
                if best > gamma(k, p, n):
                    excess.append((k, p, n, best))
    elapsed = time.perf_counter() - start
    record("8 random sets never beat gamma", not excess and elapsed < 60,
           f"{len(excess)} violations in {elapsed:.2f}s")
    assert not excess, excess
    assert elapsed < 60
