"""Tests for the exact Euclidean-motion oracle."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from realbott import (
    EuclideanMotion,
    acts_freely,
    bott_to_p,
    check_against_rows,
    cocycles,
    compose,
    element_of,
    enumerate_bott,
    free_at_subset,
    generators,
    holonomy_matrix,
    parse_bott,
    square,
)

from conftest import SIXDIM_BOTT_TEXT, zero_bott


class TestEuclideanMotion:
    def test_validation(self):
        with pytest.raises(ValueError):
            EuclideanMotion((1, 2), (0, 0))
        with pytest.raises(ValueError):
            EuclideanMotion((1,), (0, 0))

    def test_compose_with_identity(self):
        g = EuclideanMotion((1, -1), (1, 3))
        e = EuclideanMotion.identity(2)
        assert compose(g, e) == g
        assert compose(e, g) == g

    def test_compose_dimension_mismatch(self):
        with pytest.raises(ValueError):
            compose(EuclideanMotion.identity(2), EuclideanMotion.identity(3))

    def test_square_of_glide(self):
        # half-step along coordinate 1 with a flip of coordinate 2
        g = EuclideanMotion((1, -1), (1, 0))
        assert square(g) == EuclideanMotion((1, 1), (2, 0))

    def test_inverse(self):
        g = EuclideanMotion((1, -1), (1, 3))
        assert compose(g, g.inverse()) == EuclideanMotion.identity(2)
        assert compose(g.inverse(), g) == EuclideanMotion.identity(2)


class TestGenerators:
    def test_zero_matrix(self):
        s1, s2 = generators(zero_bott(2))
        assert s1 == EuclideanMotion((1, 1), (1, 0))
        assert s2 == EuclideanMotion((1, 1), (0, 1))

    def test_klein_bottle(self, klein_bottle):
        s1, s2 = generators(klein_bottle)
        assert s1 == EuclideanMotion((1, -1), (1, 0))
        assert s2 == EuclideanMotion((1, 1), (0, 1))

    def test_squares_are_unit_translations(self, sixdim_bott):
        for i, s in enumerate(generators(sixdim_bott)):
            expected = EuclideanMotion(
                (1,) * 6, tuple(2 if j == i else 0 for j in range(6))
            )
            assert square(s) == expected

    def test_squares_exhaustive_small_n(self):
        for n in (1, 2, 3):
            for a in enumerate_bott(n):
                for i, s in enumerate(generators(a)):
                    sq = square(s)
                    assert sq.signs == (1,) * n
                    assert sq.trans2 == tuple(2 if j == i else 0 for j in range(n))


class TestElementOf:
    def test_empty_subset(self, klein_bottle):
        assert element_of(klein_bottle, ()) == EuclideanMotion.identity(2)

    def test_singleton(self, klein_bottle):
        assert element_of(klein_bottle, [0]) == generators(klein_bottle)[0]

    def test_pair_exact_value(self, klein_bottle):
        # s1 . s2 on the Klein bottle: the flip of coordinate 2 carries
        # the half-step of s2 to -1/2
        g = element_of(klein_bottle, [0, 1])
        assert g == EuclideanMotion((1, -1), (1, -1))

    def test_index_validation(self, klein_bottle):
        with pytest.raises(ValueError):
            element_of(klein_bottle, [2])


class TestActsFreely:
    def test_requires_nonempty(self, klein_bottle):
        with pytest.raises(ValueError):
            acts_freely(klein_bottle, ())

    def test_pure_half_translation(self, sixdim_bott):
        assert acts_freely(sixdim_bott, [sixdim_bott.n - 1])

    def test_exhaustive_agreement_small_n(self):
        for n in (1, 2, 3, 4):
            for a in enumerate_bott(n):
                p = bott_to_p(a)
                for mask in range(1, 1 << n):
                    subset = [i for i in range(n) if (mask >> i) & 1]
                    assert acts_freely(a, subset) == free_at_subset(p, mask)
                    assert acts_freely(a, subset)  # Bott actions are free


class TestHolonomyMatrix:
    def test_empty_subset(self, sixdim_bott):
        assert holonomy_matrix(sixdim_bott, ()) == (1,) * 6

    def test_klein_bottle(self, klein_bottle):
        assert holonomy_matrix(klein_bottle, [0]) == (1, -1)

    def test_sixdim_first_row(self, sixdim_bott):
        assert holonomy_matrix(sixdim_bott, [0]) == (1, 1, -1, -1, -1, -1)

    def test_matches_cocycle_prediction(self):
        for n in (1, 2, 3):
            for a in enumerate_bott(n):
                alphas, betas = cocycles(bott_to_p(a))
                for mask in range(1 << n):
                    subset = [i for i in range(n) if (mask >> i) & 1]
                    predicted = tuple(
                        -1 if (alphas[j] + betas[j]).evaluate(mask) else 1
                        for j in range(n)
                    )
                    assert holonomy_matrix(a, subset) == predicted


class TestCrossCheck:
    def test_sixdim_all_subsets_agree(self, sixdim_bott):
        assert check_against_rows(sixdim_bott) == []

    def test_exhaustive_small_n(self):
        for n in (1, 2, 3, 4):
            for a in enumerate_bott(n):
                assert check_against_rows(a) == []


@st.composite
def motions(draw, dim=None):
    n = dim if dim is not None else draw(st.integers(1, 5))
    signs = draw(st.tuples(*([st.sampled_from((1, -1))] * n)))
    trans2 = draw(st.tuples(*([st.integers(-4, 4)] * n)))
    return EuclideanMotion(signs, trans2)


@st.composite
def motion_triples(draw):
    n = draw(st.integers(1, 5))
    return tuple(draw(motions(dim=n)) for _ in range(3))


class TestGroupLaws:
    @given(motion_triples())
    def test_associative(self, triple):
        g, h, k = triple
        assert compose(compose(g, h), k) == compose(g, compose(h, k))

    @given(motions())
    def test_identity_neutral(self, g):
        e = EuclideanMotion.identity(g.dim)
        assert compose(g, e) == g
        assert compose(e, g) == g
        assert compose(g, g.inverse()) == e
