import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_jet
from superrigid.jets import (
    Ambient,
    ExprError,
    Jet,
    div_beta,
    format_jet,
    geometric_inverse,
    merge_sign,
    odd_laplacian,
    parse_jet,
)

A22 = Ambient(2, 2)
A11 = Ambient(1, 1)
A23 = Ambient(2, 3, tau=True)


def x(i, amb=A22):
    return Jet.x(amb, i)


def xi(j, amb=A22):
    return Jet.xi(amb, j)


class TestMergeSign:
    def test_disjoint_ordered(self):
        assert merge_sign((1,), (2,)) == (1, (1, 2))

    def test_disjoint_swapped(self):
        assert merge_sign((2,), (1,)) == (-1, (1, 2))

    def test_repeat_kills(self):
        assert merge_sign((1, 3), (3,)) == (0, ())

    def test_interleaved(self):
        # 2 hops over 3 -> one transposition
        assert merge_sign((1, 3), (2,)) == (-1, (1, 2, 3))


class TestProduct:
    def test_odd_square_zero(self):
        assert (xi(1) * xi(1)).is_zero()

    def test_anticommute(self):
        assert xi(2) * xi(1) == (xi(1) * xi(2)).scale(-1)

    def test_even_commute(self):
        f = x(1) * x(2)
        assert f == x(2) * x(1)
        assert f.coeff((1, 1), ()) == 1

    def test_mixed(self):
        f = (x(1) + xi(1)) * (x(1) - xi(1))
        assert f == Jet.x(A22, 1, 2)

    @given(st.integers(0, 2**30), st.integers(0, 1), st.integers(0, 1))
    @settings(max_examples=150)
    def test_supercommutative(self, seed, pf, pg):
        rng = random.Random(seed)
        f = random_jet(A22, rng, parity=pf)
        g = random_jet(A22, rng, parity=pg)
        sign = -1 if pf and pg else 1
        assert f * g == (g * f).scale(sign)

    @given(st.integers(0, 2**30))
    @settings(max_examples=100)
    def test_associative(self, seed):
        rng = random.Random(seed)
        f, g, h = (random_jet(A22, rng) for _ in range(3))
        assert (f * g) * h == f * (g * h)


class TestDerivatives:
    def test_even_partial(self):
        f = Jet.x(A22, 1, 3)
        assert f.d_even(1) == Jet.x(A22, 1, 2).scale(3)
        assert f.d_even(2).is_zero()

    def test_left_odd_partial_signs(self):
        f = xi(1) * xi(2)
        assert f.d_odd(1) == xi(2)
        assert f.d_odd(2) == xi(1).scale(-1)

    def test_odd_partial_squares_to_zero(self):
        rng = random.Random(7)
        f = random_jet(A22, rng, n_terms=6)
        assert f.d_odd(1).d_odd(1).is_zero()

    @given(st.integers(0, 2**30), st.integers(0, 1))
    @settings(max_examples=150)
    def test_odd_leibniz(self, seed, pf):
        rng = random.Random(seed)
        f = random_jet(A22, rng, parity=pf)
        g = random_jet(A22, rng)
        lhs = (f * g).d_odd(1)
        sign = -1 if pf else 1
        rhs = f.d_odd(1) * g + (f * g.d_odd(1)).scale(sign)
        assert lhs == rhs

    @given(st.integers(0, 2**30))
    @settings(max_examples=100)
    def test_even_leibniz(self, seed):
        rng = random.Random(seed)
        f = random_jet(A22, rng)
        g = random_jet(A22, rng)
        assert (f * g).d_even(1) == f.d_even(1) * g + f * g.d_even(1)

    def test_partials_anticommute(self):
        rng = random.Random(3)
        f = random_jet(A22, rng, n_terms=6)
        assert f.d_odd(1).d_odd(2) == f.d_odd(2).d_odd(1).scale(-1)


class TestEuler:
    def test_counts_degree(self):
        f = Jet.monomial(A22, (2, 1), (1,))
        assert f.euler() == f.scale(4)

    def test_tau_excluded_by_default(self):
        f = Jet.tau_gen(A23)
        assert f.euler().is_zero()
        g = Jet.xi(A23, 1)
        assert g.euler() == g

    def test_explicit_index_sets(self):
        f = Jet.monomial(A22, (1, 2), (1, 2))
        assert f.euler(even_idx=[2], odd_idx=[]) == f.scale(2)


class TestLaplacianAndDivergence:
    def test_basic_pairing(self):
        f = x(1) * xi(1)
        assert odd_laplacian(f) == Jet.one(A22)

    def test_two_pair(self):
        f = x(1) * x(2) * xi(1) * xi(2)
        expect = x(2) * xi(2) - x(1) * xi(1)
        assert odd_laplacian(f) == expect

    def test_div_beta_on_tau_free(self):
        f = Jet.x(A23, 1) * Jet.xi(A23, 1)
        assert div_beta(f, F(1, 2)) == Jet.one(A23)

    def test_div_beta_weighted_term(self):
        # f = x1 * tau: laplacian 0; tau-derivative x1 has euler weight 1
        f = Jet.x(A23, 1) * Jet.tau_gen(A23)
        out = div_beta(f, F(1, 2))
        assert out == Jet.x(A23, 1).scale(F(1) - F(1, 2) * 2)


class TestValidityOrder:
    def test_product_takes_min(self):
        f = x(1, A11).truncate(3)
        g = Jet.one(A11)
        assert (f * g).order == 3
        assert (g * f).order == 3

    def test_truncation_drops_high_terms(self):
        f = Jet.x(A11, 1, 5) + Jet.one(A11)
        t = f.truncate(3)
        assert t.terms == Jet.one(A11).terms
        assert t.order == 3

    def test_derivative_lowers(self):
        f = x(1, A11).truncate(3)
        assert f.d_even(1).order == 2
        assert f.d_odd(1).order == 3

    def test_antiderivative_raises(self):
        f = x(1, A11).truncate(3)
        g = f.antiderivative(1)
        assert g.order == 4
        assert g == Jet.x(A11, 1, 2).scale(F(1, 2)).truncate(4)

    def test_antiderivative_constant(self):
        f = Jet.one(A11)
        g = f.antiderivative(1, constant=1)
        assert g == Jet.x(A11, 1) + Jet.one(A11)
        assert f.antiderivative(1).d_even(1) == f


class TestGeometricInverse:
    def test_one_plus_x(self):
        phi = Jet.one(A11) + x(1, A11)
        inv = geometric_inverse(phi, 4)
        expect = Jet.zero(A11).truncate(4)
        for k in range(5):
            expect = expect + Jet.x(A11, 1, k).scale((-1) ** k)
        assert inv == expect

    def test_inverse_property(self):
        rng = random.Random(11)
        phi = Jet.one(A22) + random_jet(A22, rng, parity=0) * x(1)
        inv = geometric_inverse(phi, 5)
        assert (phi * inv).truncate(5).same_series(Jet.one(A22))

    def test_rejects_no_constant_term(self):
        with pytest.raises(ValueError):
            geometric_inverse(x(1, A11), 3)

    def test_scaled_constant(self):
        phi = Jet.const(A11, 2)
        assert geometric_inverse(phi, 2) == Jet.const(A11, F(1, 2)).truncate(2)


class TestFormat:
    def test_examples(self):
        assert format_jet(Jet.zero(A22)) == "0"
        f = (x(1) * xi(2)).scale(2)
        assert format_jet(f) == "2*x1*xi2"
        assert format_jet(Jet.x(A22, 1, 2)) == "x1^2"
        assert format_jet(xi(1).scale(-1)) == "-xi1"
        g = Jet.one(A22) - x(1).scale(F(1, 2))
        assert format_jet(g) == "1 - 1/2*x1"

    def test_tau_name(self):
        assert format_jet(Jet.tau_gen(A23)) == "tau"


class TestParser:
    def test_simple_terms(self):
        assert parse_jet("x1^2", A22) == Jet.x(A22, 1, 2)
        assert parse_jet("xi1*xi2", A22) == xi(1) * xi(2)
        assert parse_jet("2*x1*xi2", A22) == (x(1) * xi(2)).scale(2)

    def test_signs_and_rationals(self):
        f = parse_jet("1/2*x1 - x2 + 3", A22)
        assert f == x(1).scale(F(1, 2)) - x(2) + Jet.const(A22, 3)
        assert parse_jet("-x1", A22) == -x(1)

    def test_juxtaposition(self):
        assert parse_jet("2 x1 xi1", A22) == (x(1) * xi(1)).scale(2)

    def test_parens(self):
        f = parse_jet("x1*(1 + x2)^2", A22)
        assert f == x(1) * (Jet.one(A22) + x(2)) ** 2

    def test_pq_aliases(self):
        amb = Ambient(4, 1)
        assert parse_jet("p1", amb) == Jet.x(amb, 1)
        assert parse_jet("q1", amb) == Jet.x(amb, 2)
        assert parse_jet("p2*q2", amb) == Jet.x(amb, 3) * Jet.x(amb, 4)

    def test_tau_and_params(self):
        f = parse_jet("tau*x1", A23)
        assert f == Jet.x(A23, 1) * Jet.tau_gen(A23)
        g = parse_jet("alpha*x1 + beta", A23, params={"alpha": F(2), "beta": F(1, 3)})
        assert g == Jet.x(A23, 1).scale(2) + Jet.const(A23, F(1, 3))

    def test_roundtrip_format(self):
        f = (x(1) * xi(2)).scale(2) - Jet.x(A22, 2, 3).scale(F(1, 2))
        assert parse_jet(format_jet(f), A22) == f

    def test_errors(self):
        for bad in ("x9", "xi5", "x1^0", "x1^", "(x1", "x1 +", "$", "y1"):
            with pytest.raises(ExprError):
                parse_jet(bad, A22)
        with pytest.raises(ExprError):
            parse_jet("tau", A22)
        with pytest.raises(ExprError):
            parse_jet("xi3", A23)
