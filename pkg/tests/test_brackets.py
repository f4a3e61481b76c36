import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_jet
from superrigid.brackets import (
    GaugeError,
    ParityError,
    bracket_unit_derivation,
    buttin,
    even_skew_defect,
    fd_bracket,
    gauge_transform,
    gen_poisson_even,
    jacobi_mayer,
    jp_product,
    k_bracket,
    odd_jacobi_defect,
    odd_leibniz_defect,
    odd_skew_defect,
    quasi_poisson,
)
from superrigid.jets import Ambient, Jet, parse_jet

O11 = Ambient(1, 1)
O22 = Ambient(2, 2)
O12 = Ambient(1, 2, tau=True)
O23 = Ambient(2, 3, tau=True)
E30 = Ambient(3, 0)


def j(text, amb=O22):
    return parse_jet(text, amb)


class TestButtin:
    def test_pairing(self):
        assert buttin(j("x1"), j("xi1")) == j("1")
        assert buttin(j("xi1"), j("x1")) == j("-1")

    def test_square_example(self):
        assert buttin(j("x1^2"), j("xi1*xi2")) == j("2*x1*xi2")

    def test_rejects_unpaired(self):
        amb = Ambient(2, 1)
        with pytest.raises(ValueError):
            buttin(Jet.x(amb, 1), Jet.xi(amb, 1))

    def test_rejects_mixed_parity(self):
        with pytest.raises(ParityError):
            buttin(j("1 + xi1"), j("x1"))

    @given(st.integers(0, 2**30), st.integers(0, 1), st.integers(0, 1))
    @settings(max_examples=150)
    def test_odd_skew(self, seed, pf, pg):
        rng = random.Random(seed)
        f = random_jet(O22, rng, parity=pf)
        g = random_jet(O22, rng, parity=pg)
        assert odd_skew_defect(buttin, f, g).is_zero()

    @given(st.integers(0, 2**30), st.integers(0, 1), st.integers(0, 1),
           st.integers(0, 1))
    @settings(max_examples=100)
    def test_odd_jacobi(self, seed, pa, pb, pc):
        rng = random.Random(seed)
        a = random_jet(O22, rng, parity=pa)
        b = random_jet(O22, rng, parity=pb)
        c = random_jet(O22, rng, parity=pc)
        assert odd_jacobi_defect(buttin, a, b, c).is_zero()

    @given(st.integers(0, 2**30), st.integers(0, 1), st.integers(0, 1))
    @settings(max_examples=100)
    def test_odd_leibniz_no_unit_term(self, seed, pa, pb):
        rng = random.Random(seed)
        a = random_jet(O22, rng, parity=pa)
        b = random_jet(O22, rng, parity=pb)
        c = random_jet(O22, rng)
        D = lambda v: Jet.zero(O22)
        assert odd_leibniz_defect(buttin, D, a, b, c).is_zero()


class TestKBracket:
    def test_unit_tau(self):
        assert k_bracket(j("1", O12), j("tau", O12)) == j("-2", O12)

    def test_weighted_term(self):
        assert k_bracket(j("x1", O12), j("tau", O12)) == j("-x1", O12)

    def test_tau_tau_cancels(self):
        assert k_bracket(j("tau", O12), j("tau", O12)).is_zero()

    def test_unit_derivation_is_minus_two_dtau(self):
        D = bracket_unit_derivation(k_bracket, O12)
        rng = random.Random(5)
        f = random_jet(O12, rng, n_terms=6)
        assert D(f) == f.d_tau().scale(-2)

    def test_rejects_without_tau(self):
        with pytest.raises(ValueError):
            k_bracket(j("x1"), j("x2"))

    @given(st.integers(0, 2**30), st.integers(0, 1), st.integers(0, 1))
    @settings(max_examples=100)
    def test_odd_leibniz_with_unit_term(self, seed, pa, pb):
        rng = random.Random(seed)
        a = random_jet(O12, rng, parity=pa)
        b = random_jet(O12, rng, parity=pb)
        c = random_jet(O12, rng)
        D = lambda v: v.d_tau().scale(-2)
        assert odd_leibniz_defect(k_bracket, D, a, b, c).is_zero()

    @given(st.integers(0, 2**30), st.integers(0, 1), st.integers(0, 1))
    @settings(max_examples=100)
    def test_odd_skew(self, seed, pf, pg):
        rng = random.Random(seed)
        f = random_jet(O12, rng, parity=pf)
        g = random_jet(O12, rng, parity=pg)
        assert odd_skew_defect(k_bracket, f, g).is_zero()


class TestGenPoissonEven:
    def test_pq_pairing(self):
        amb = Ambient(2, 0)
        assert gen_poisson_even(Jet.x(amb, 1), Jet.x(amb, 2)) == Jet.one(amb)

    def test_odd_diagonal_sign(self):
        amb = Ambient(0, 1)
        xi = Jet.xi(amb, 1)
        assert gen_poisson_even(xi, xi) == Jet.const(amb, -1)

    def test_even_count_has_no_t_terms(self):
        amb = Ambient(2, 1)
        f = Jet.x(amb, 2)
        assert gen_poisson_even(Jet.one(amb), f).is_zero()

    def test_odd_count_t_terms(self):
        amb = Ambient(3, 0)
        D = bracket_unit_derivation(gen_poisson_even, amb)
        # {e, f} = (2-E)(e) df/dt = 2 df/dt
        f = Jet.x(amb, 3) * Jet.x(amb, 1)
        assert D(f) == Jet.x(amb, 1).scale(2)

    @given(st.integers(0, 2**30), st.integers(0, 1), st.integers(0, 1))
    @settings(max_examples=100)
    def test_even_skew(self, seed, pf, pg):
        amb = Ambient(3, 2)
        rng = random.Random(seed)
        f = random_jet(amb, rng, parity=pf)
        g = random_jet(amb, rng, parity=pg)
        assert even_skew_defect(gen_poisson_even, f, g).is_zero()


class TestQuasiPoisson:
    def test_single_pair(self):
        amb = Ambient(2, 0)
        dx = lambda f: f.d_even(1)
        dy = lambda f: f.d_even(2)
        out = quasi_poisson(None, [(dx, dy)], Jet.x(amb, 1), Jet.x(amb, 2))
        assert out == Jet.one(amb)

    def test_center_plus_pair(self):
        amb = Ambient(2, 0)
        x1, x2 = Jet.x(amb, 1), Jet.x(amb, 2)
        Z = lambda f: f.d_even(1).scale(2)
        X = lambda f: (x1 + x2) * f.d_even(1)
        Y = lambda f: f.d_even(2)
        out = quasi_poisson(Z, [(X, Y)], x1, x2)
        assert out == x1 + x2.scale(3)

    def test_antisymmetry(self):
        amb = Ambient(2, 0)
        f = Jet.x(amb, 1) ** 2
        g = Jet.x(amb, 1) * Jet.x(amb, 2)
        Z = lambda h: h.d_even(1)
        X = lambda h: Jet.x(amb, 2) * h.d_even(1)
        Y = lambda h: h.d_even(2)
        a = quasi_poisson(Z, [(X, Y)], f, g)
        b = quasi_poisson(Z, [(X, Y)], g, f)
        assert a == -b


class TestJacobiMayer:
    def test_pinned_values(self):
        x, y, z = (Jet.x(E30, i) for i in (1, 2, 3))
        assert jacobi_mayer(x, y) == Jet.one(E30)
        assert jacobi_mayer(x, z) == x
        assert jacobi_mayer(y, z).is_zero()

    def test_matches_bivector_form(self):
        dx = lambda f: f.d_even(1)
        dy = lambda f: f.d_even(2)
        dz = lambda f: f.d_even(3)
        xdx = lambda f: Jet.x(E30, 1) * f.d_even(1)
        pairs = [(dx, dy), (xdx, dz)]
        for mf in E30.monomials(3):
            for mg in E30.monomials(3):
                f = Jet(E30, {mf: F(1)})
                g = Jet(E30, {mg: F(1)})
                assert jacobi_mayer(f, g) == quasi_poisson(None, pairs, f, g)


class TestGauge:
    def test_accepts_one_plus_x(self):
        phi = j("1 + x1", O11)
        gb = gauge_transform(buttin, phi, order=3)
        one = Jet.one(O11)
        assert gb(one, one).is_zero()
        out = gb(one, Jet.xi(O11, 1))
        assert out.same_series(one)

    def test_twisted_unit_derivation(self):
        phi = j("1 + x1", O11)
        gb = gauge_transform(buttin, phi, order=3)
        assert gb.D(Jet.xi(O11, 1)) == Jet.one(O11)
        # consistency with {e, a} under the twisted bracket
        assert gb(Jet.one(O11), Jet.xi(O11, 1)).same_series(
            gb.D(Jet.xi(O11, 1))
        )

    def test_rejects_nonsquare_zero(self):
        phi = j("1 + x1*xi1")
        with pytest.raises(GaugeError) as exc:
            gauge_transform(buttin, phi, order=3)
        assert exc.value.witness.same_series(j("2*x1*xi1"))

    def test_rejects_non_invertible(self):
        with pytest.raises(GaugeError):
            gauge_transform(buttin, j("x1", O11), order=3)

    def test_twisted_odd_leibniz(self):
        phi = j("1 + x1", O11)
        gb = gauge_transform(buttin, phi, order=3)
        rng = random.Random(9)
        for _ in range(25):
            a = random_jet(O11, rng, parity=rng.randrange(2))
            b = random_jet(O11, rng, parity=rng.randrange(2))
            c = random_jet(O11, rng)
            assert odd_leibniz_defect(gb, gb.D, a, b, c).truncate(2).is_zero()


class TestFdBracket:
    def test_even_type_plus(self):
        amb = Ambient(1, 0)
        ddx = lambda f: f.d_even(1)
        x = Jet.x(amb, 1)
        out = fd_bracket(x, 0, x, 0, [ddx], plus=True, odd_type=False)
        assert out == {0: x.scale(2)}

    def test_even_type_minus_is_lie(self):
        amb = Ambient(1, 0)
        ddx = lambda f: f.d_even(1)
        x2 = Jet.x(amb, 1, 2)
        x = Jet.x(amb, 1)
        out = fd_bracket(x2, 0, x, 0, [ddx], plus=False, odd_type=False)
        # x^2 * (x)' - x * (x^2)' = x^2 - 2x^2 = -x^2
        assert out == {0: -x2}

    def test_cross_slot(self):
        amb = Ambient(0, 2)
        d1 = lambda f: f.d_odd(1)
        d2 = lambda f: f.d_odd(2)
        xi1, xi2 = Jet.xi(amb, 1), Jet.xi(amb, 2)
        out = fd_bracket(xi1, 0, xi2, 1, [d1, d2], plus=True, odd_type=True)
        # f1 D1(f2) = xi1 * d1(xi2) = 0; f2 D2(f1) = xi2 * d2(xi1) = 0
        assert out == {}

    def test_odd_type_sign(self):
        amb = Ambient(0, 2)
        d1 = lambda f: f.d_odd(1)
        one = Jet.one(amb)
        out = fd_bracket(one, 0, one, 0, [d1], plus=True, odd_type=True)
        assert out == {}


class TestJpProduct:
    def setup_method(self):
        self.amb = Ambient(2, 0)
        self.br = gen_poisson_even
        self.D = bracket_unit_derivation(gen_poisson_even, self.amb)

    def pair(self, plain="0", barred="0"):
        return (parse_jet(plain, self.amb), parse_jet(barred, self.amb))

    def test_plain_times_plain(self):
        out = jp_product(self.br, self.D, self.pair("p1"), self.pair("q1"))
        assert out == self.pair("p1*q1")

    def test_bar_times_bar(self):
        out = jp_product(
            self.br, self.D, self.pair(barred="p1"), self.pair(barred="q1")
        )
        assert out == self.pair("1")

    def test_bar_unit_times_plain(self):
        out = jp_product(self.br, self.D, self.pair(barred="1"), self.pair("p1"))
        assert out == self.pair(barred="p1")

    def test_plain_times_bar_sign(self):
        amb = Ambient(0, 1)
        D = bracket_unit_derivation(gen_poisson_even, amb)
        xi = Jet.xi(amb, 1)
        one = Jet.one(amb)
        out = jp_product(gen_poisson_even, D, (xi, Jet.zero(amb)),
                         (Jet.zero(amb), one))
        # odd plain part picks up a minus sign when passing the bar
        assert out == (Jet.zero(amb), -xi)
