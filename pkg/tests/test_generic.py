from itertools import product

import pytest

from dihedral_growth.dihedral import DihedralElement, evaluate_word, profile, reconstruct
from dihedral_growth.generic import (
    GeneratorTuple,
    build_generator_tuple,
    is_generic,
    l1_vectors,
    sparse_coefficients,
)


def test_sparse_coefficients_values():
    assert sparse_coefficients(3, 2) == (1, 5, 25)
    assert sparse_coefficients(1, 9) == (1,)
    assert sparse_coefficients(2, 3) == (1, 7)


def test_sparse_coefficients_preconditions():
    with pytest.raises(ValueError):
        sparse_coefficients(0, 2)
    with pytest.raises(ValueError):
        sparse_coefficients(2, 0)


def _brute_generic(a, n):
    # independent scan of the whole box [-2n, 2n]^k
    r = 2 * n
    for u in product(range(-r, r + 1), repeat=len(a)):
        if any(u) and sum(map(abs, u)) <= r and sum(x * y for x, y in zip(a, u)) == 0:
            return False
    return True


@pytest.mark.parametrize(
    "a, n, expected",
    [((1, 1), 1, False), ((1, 5, 25), 2, True), ((1, 2), 1, True), ((1, 7), 3, True),
     ((1, 2), 2, False), ((3, 5, 8), 1, True), ((3, 5, 8), 2, False)],
)
def test_is_generic_examples(a, n, expected):
    assert is_generic(a, n) is expected
    assert _brute_generic(a, n) is expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_base_digit_argument(k, n):
    assert is_generic(sparse_coefficients(k, n), n)


def test_l1_vectors_counts():
    assert sorted(l1_vectors(2, 1, exact=True)) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert len(list(l1_vectors(3, 2))) == 25
    assert list(l1_vectors(0, 3)) == [()]
    assert list(l1_vectors(0, 3, exact=True)) == []


class TestBuildGeneratorTuple:
    def test_one_reflection(self):
        S = build_generator_tuple(2, 1, 2)
        assert S.elements == (DihedralElement(1, -1), DihedralElement(5, 1))

    def test_no_reflections(self):
        S = build_generator_tuple(3, 0, 2)
        assert S.elements == (DihedralElement(1, 1), DihedralElement(5, 1), DihedralElement(25, 1))

    def test_all_reflections(self):
        S = build_generator_tuple(2, 2, 2)
        assert S.elements == (DihedralElement(1, -1), DihedralElement(5, -1))
        assert S.signs == (-1, -1)
        assert S.shifts == (1, 5)

    @pytest.mark.parametrize("p", [-1, 3])
    def test_p_out_of_range(self, p):
        with pytest.raises(ValueError):
            build_generator_tuple(2, p, 2)

    def test_orientation_layout_enforced(self):
        with pytest.raises(ValueError):
            GeneratorTuple((DihedralElement(1, 1), DihedralElement(5, -1)), 1, 2)

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_multiplicity_map_injective(self, k, n):
        for p in range(k + 1):
            S = build_generator_tuple(k, p, n)
            seen: dict[DihedralElement, tuple[int, ...]] = {}
            for w in product(range(1, k + 1), repeat=n):
                m = profile(S.signs, w).multiplicities
                g = evaluate_word(S, w)
                assert seen.setdefault(g, m) == m

    @pytest.mark.parametrize("k, n", [(2, 3), (3, 2), (3, 3), (4, 2)])
    def test_reconstruct_injective_on_ball(self, k, n):
        S = build_generator_tuple(k, 1, n)
        images = [reconstruct(S, m) for m in l1_vectors(k, n)]
        assert len(set(images)) == len(images)
