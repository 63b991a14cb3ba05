"""Unit and property tests for the GF(2) polynomial layer."""

import functools
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realbott.f2poly import (
    F2Matrix,
    GradedPolyF2,
    LinearFormF2,
    decode_degree2,
    degree2_count,
    degree2_index,
    degree2_monomials,
    encode_degree2,
    truncated_product,
)


def poly(num_vars, *terms):
    return GradedPolyF2(num_vars, terms)


def one_plus(form: LinearFormF2) -> GradedPolyF2:
    return GradedPolyF2.one(form.num_vars) + form.as_poly()


# The six truncated-product factors of the six-dimensional reference
# manifold: 1 + alpha_j + beta_j with sign forms 0, 0, x1+x2, x1+x2,
# x1+x2+x3+x4, x1+x2+x3+x4.
SIXDIM_FORMS = [
    LinearFormF2(6, 0b000000),
    LinearFormF2(6, 0b000000),
    LinearFormF2(6, 0b000011),
    LinearFormF2(6, 0b000011),
    LinearFormF2(6, 0b001111),
    LinearFormF2(6, 0b001111),
]

# theta encodings of the same manifold in the 21 degree-2 coordinates.
SIXDIM_THETAS = [
    poly(6, (2, 0, 0, 0, 0, 0)),
    poly(6, (0, 2, 0, 0, 0, 0)),
    poly(6, (0, 0, 2, 0, 0, 0), (1, 0, 1, 0, 0, 0), (0, 1, 1, 0, 0, 0)),
    poly(6, (0, 0, 0, 2, 0, 0), (1, 0, 0, 1, 0, 0), (0, 1, 0, 1, 0, 0)),
    poly(
        6,
        (0, 0, 0, 0, 2, 0),
        (1, 0, 0, 0, 1, 0),
        (0, 1, 0, 0, 1, 0),
        (0, 0, 1, 0, 1, 0),
        (0, 0, 0, 1, 1, 0),
    ),
    poly(
        6,
        (0, 0, 0, 0, 0, 2),
        (1, 0, 0, 0, 0, 1),
        (0, 1, 0, 0, 0, 1),
        (0, 0, 1, 0, 0, 1),
        (0, 0, 0, 1, 0, 1),
    ),
]


class TestGradedPolyF2:
    def test_duplicate_terms_cancel(self):
        p = GradedPolyF2(2, [(1, 0), (1, 0)])
        assert p.is_zero
        assert p == GradedPolyF2.zero(2)

    def test_add_is_symmetric_difference(self):
        p = poly(2, (1, 0), (0, 1))
        q = poly(2, (0, 1), (1, 1))
        assert p + q == poly(2, (1, 0), (1, 1))
        assert p + p == GradedPolyF2.zero(2)

    def test_mul_cancels_cross_terms(self):
        x1 = GradedPolyF2.variable(2, 0)
        x2 = GradedPolyF2.variable(2, 1)
        # (x1 + x2)^2 = x1^2 + x2^2 over GF(2)
        s = x1 + x2
        assert s * s == poly(2, (2, 0), (0, 2))

    def test_mismatched_num_vars(self):
        with pytest.raises(ValueError):
            poly(2, (1, 0)) + poly(3, (1, 0, 0))
        with pytest.raises(ValueError):
            poly(2, (1, 0)) * poly(3, (1, 0, 0))

    def test_bad_monomials_rejected(self):
        with pytest.raises(ValueError):
            GradedPolyF2(2, [(1,)])
        with pytest.raises(ValueError):
            GradedPolyF2(2, [(-1, 0)])

    def test_graded_component(self):
        p = poly(2, (0, 0), (1, 0), (1, 1))
        assert p.graded_component(2) == poly(2, (1, 1))
        assert p.graded_component(0) == GradedPolyF2.one(2)
        assert p.graded_component(5).is_zero
        assert GradedPolyF2.zero(3).graded_component(2).is_zero
        with pytest.raises(ValueError):
            p.graded_component(-1)

    def test_rendering_contract(self):
        assert str(GradedPolyF2.zero(4)) == "0"
        assert str(GradedPolyF2.one(4)) == "1"
        w = poly(6, (0,) * 6, (0, 0, 2, 0, 0, 0), (0, 0, 0, 2, 0, 0))
        assert str(w) == "1 + x3^2 + x4^2"
        # degree ascending, then earlier variables first within a degree
        p = poly(3, (0, 2, 0), (1, 1, 0), (0, 0, 1), (0, 0, 0))
        assert str(p) == "1 + x3 + x1x2 + x2^2"

    def test_degree(self):
        assert GradedPolyF2.zero(2).degree() == -1
        assert GradedPolyF2.one(2).degree() == 0
        assert poly(2, (1, 2)).degree() == 3


class TestTruncatedProduct:
    def test_single_factor(self):
        f = one_plus(LinearFormF2(1, 0b1))
        assert truncated_product([f], 2) == f

    def test_square_of_binomial(self):
        f = one_plus(LinearFormF2(1, 0b1))
        assert truncated_product([f, f], 2) == poly(1, (0,), (2,))

    def test_sixdim_reference(self):
        factors = [one_plus(f) for f in SIXDIM_FORMS]
        w = truncated_product(factors, 2)
        assert w == poly(6, (0,) * 6, (0, 0, 2, 0, 0, 0), (0, 0, 0, 2, 0, 0))
        assert str(w) == "1 + x3^2 + x4^2"

    def test_truncation_drops_high_degree(self):
        f = one_plus(LinearFormF2(2, 0b11))
        full = truncated_product([f, f, f], 6)
        assert truncated_product([f, f, f], 2) == full.truncate(2)

    def test_empty_product_rejected(self):
        with pytest.raises(ValueError):
            truncated_product([], 2)
        with pytest.raises(ValueError):
            truncated_product([GradedPolyF2.one(2)], -1)

    def test_mismatched_factors_rejected(self):
        with pytest.raises(ValueError):
            truncated_product([GradedPolyF2.one(2), GradedPolyF2.one(3)], 2)


@st.composite
def linear_forms(draw, max_vars=16):
    d = draw(st.integers(min_value=1, max_value=max_vars))
    coeffs = draw(st.integers(min_value=0, max_value=(1 << d) - 1))
    return LinearFormF2(d, coeffs)


@st.composite
def small_polys(draw, num_vars):
    monomials = st.tuples(*([st.integers(0, 2)] * num_vars))
    terms = draw(st.lists(monomials, max_size=4))
    return GradedPolyF2(num_vars, terms)


class TestPolynomialProperties:
    @given(linear_forms())
    def test_frobenius_square(self, form):
        # (1 + L)^2 = 1 + L^2 with all cross terms cancelled
        f = one_plus(form)
        expected = GradedPolyF2.one(form.num_vars) + (form * form).graded_component(2)
        assert truncated_product([f, f], 2) == expected
        squares = GradedPolyF2(
            form.num_vars,
            [
                tuple(2 if k == i else 0 for k in range(form.num_vars))
                for i in range(form.num_vars)
                if (form.coeffs >> i) & 1
            ],
        )
        assert form * form == squares

    @settings(max_examples=60)
    @given(st.data())
    def test_truncation_associativity(self, data):
        d = data.draw(st.integers(1, 3), label="num_vars")
        count = data.draw(st.integers(1, 4), label="factors")
        factors = [data.draw(small_polys(d), label=f"f{i}") for i in range(count)]
        max_degree = data.draw(st.integers(0, 4), label="max_degree")
        direct = truncated_product(factors, max_degree)
        split = data.draw(st.integers(1, count), label="split")
        staged_head = truncated_product(factors[:split], max_degree)
        staged = truncated_product([staged_head] + factors[split:], max_degree)
        assert staged == direct
        full = factors[0]
        for f in factors[1:]:
            full = full * f
        assert direct == full.truncate(max_degree)


class TestF2Matrix:
    def test_rref_duplicate_rows(self):
        m = F2Matrix([0b11, 0b11], 2)
        r = m.rref()
        assert r.rows == (0b11,)  # zero rows dropped

    def test_rref_identity(self):
        m = F2Matrix([0b01, 0b10], 2)
        assert m.rref() == m

    def test_rref_deterministic_leftmost_pivot(self):
        m = F2Matrix([0b110, 0b011], 3)
        r = m.rref()
        assert r.rows[0] & 1  # pivot in column 0
        assert r == r.rref()

    def test_row_out_of_range(self):
        with pytest.raises(ValueError):
            F2Matrix([0b100], 2)

    def test_sixdim_theta_rank_against_subset_sums(self):
        encodings = [encode_degree2(t) for t in SIXDIM_THETAS]
        # independent oracle: the span size is the number of distinct
        # XOR subset sums, and rank = log2 of that
        sums = {0}
        for enc in encodings:
            sums |= {s ^ enc for s in sums}
        assert len(sums) == 64
        reduced = F2Matrix(encodings, degree2_count(6)).rref()
        assert reduced.nrows == 6

    def test_in_row_space_reference_values(self):
        encodings = [encode_degree2(t) for t in SIXDIM_THETAS]
        reduced = F2Matrix(encodings, degree2_count(6)).rref()
        x1sq = encode_degree2(poly(6, (2, 0, 0, 0, 0, 0)))
        assert reduced.in_row_space(x1sq)
        w2 = encode_degree2(poly(6, (0, 0, 2, 0, 0, 0), (0, 0, 0, 2, 0, 0)))
        assert not reduced.in_row_space(w2)

    def test_in_row_space_trivial(self):
        empty = F2Matrix([], 4)
        assert empty.in_row_space(0)
        assert not empty.in_row_space(0b1)
        with pytest.raises(ValueError):
            empty.in_row_space(1 << 4)

    @settings(max_examples=80)
    @given(st.data())
    def test_rref_preserves_row_space(self, data):
        ncols = data.draw(st.integers(1, 8), label="ncols")
        rows = data.draw(
            st.lists(st.integers(0, (1 << ncols) - 1), max_size=6), label="rows"
        )
        m = F2Matrix(rows, ncols)
        r = m.rref()
        assert r.rref() == r  # idempotent
        for row in rows:
            assert r.in_row_space(row)
        # rank via distinct subset sums of the original rows
        sums = {0}
        for row in rows:
            sums |= {s ^ row for s in sums}
        assert 1 << r.nrows == len(sums)

    @settings(max_examples=80)
    @given(st.data())
    def test_in_row_space_matches_bruteforce(self, data):
        ncols = data.draw(st.integers(1, 7), label="ncols")
        rows = data.draw(
            st.lists(st.integers(0, (1 << ncols) - 1), max_size=5), label="rows"
        )
        v = data.draw(st.integers(0, (1 << ncols) - 1), label="v")
        reduced = F2Matrix(rows, ncols).rref()
        assert reduced.nrows <= 12
        brute = any(
            v == functools.reduce(lambda x, y: x ^ y, combo, 0)
            for size in range(len(reduced.rows) + 1)
            for combo in itertools.combinations(reduced.rows, size)
        )
        assert reduced.in_row_space(v) == brute


class TestDegree2Coordinates:
    def test_index_enumeration(self):
        d = 6
        assert degree2_count(d) == 21
        seen = [
            degree2_index(d, i, j) for i in range(d) for j in range(i, d)
        ]
        assert seen == list(range(21))

    def test_monomial_order_matches_index(self):
        d = 4
        basis = degree2_monomials(d)
        assert len(basis) == degree2_count(d)
        for col, m in enumerate(basis):
            assert encode_degree2(GradedPolyF2(d, [m])) == 1 << col

    def test_encode_decode_roundtrip(self):
        p = poly(4, (2, 0, 0, 0), (0, 1, 0, 1))
        assert decode_degree2(4, encode_degree2(p)) == p
        assert encode_degree2(GradedPolyF2.zero(4)) == 0

    def test_encode_rejects_wrong_degree(self):
        with pytest.raises(ValueError):
            encode_degree2(poly(3, (1, 0, 0)))
        with pytest.raises(ValueError):
            degree2_index(3, 2, 1)


class TestLinearFormF2:
    def test_evaluate_parity(self):
        f = LinearFormF2(4, 0b1010)
        assert f.evaluate(0b1000) == 1
        assert f.evaluate(0b1010) == 0
        assert f.evaluate(0) == 0

    def test_add(self):
        f = LinearFormF2(3, 0b101) + LinearFormF2(3, 0b001)
        assert f.coeffs == 0b100
        with pytest.raises(ValueError):
            LinearFormF2(3, 0b1) + LinearFormF2(2, 0b1)

    def test_as_poly_and_str(self):
        f = LinearFormF2(3, 0b101)
        assert f.as_poly() == poly(3, (1, 0, 0), (0, 0, 1))
        assert str(f) == "x1 + x3"
        assert str(LinearFormF2(3, 0)) == "0"

    def test_out_of_range_coeffs(self):
        with pytest.raises(ValueError):
            LinearFormF2(2, 0b100)
