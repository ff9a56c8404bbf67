"""The product construction: corner modules, generators, closed forms."""

import pytest

from sl2prod.bimodcat import compose
from sl2prod.product import (F_xi_eta_closed, G2Elt, apply_map, basis_elt,
                             build_product, check_eta22_identity,
                             check_omega3_linearity, check_product_hecke,
                             eps_xi_F_closed, tilde_sigma_closed, zero_elt)
from sl2prod.product.core import tau21, tilde_x_pow
from sl2prod.product.models import gamma21_EE_G1E, one_G1
from sl2prod.product.oracles import (F_xi_eta_oracle, eps_xi_F_oracle,
                                     tilde_sigma_oracle)
from sl2prod.tworep import HypothesesFailedError

CORNERS = ("11", "21", "12", "22")


def all_pass(records):
    return [r for r in records if r["status"] != "pass"]


class TestBuild:
    def test_corner_ranks(self, P):
        # the corner modules carry the ranks forced by the summand words
        r = P.Vy
        for w in P.weights():
            assert P.S["11"].rank(w) == r.word("").rank(w) + r.word("FE").rank(w)
            assert P.S["22"].rank(w) == 4 * r.word("FE").rank(w) + \
                r.word("FFEE").rank(w)

    def test_rejects_broken_input(self):
        from test_tworep import corrupted_rep
        with pytest.raises(HypothesesFailedError):
            build_product(corrupted_rep(), check=True)


class TestHecke:
    def test_product_hecke_all_corners(self, P):
        assert all_pass(check_product_hecke(P)) == []


class TestClosedForms:
    @pytest.mark.parametrize("corner", CORNERS)
    def test_sigma_closed_equals_oracle(self, P, corner):
        assert tilde_sigma_closed(P, corner) == tilde_sigma_oracle(P, corner)

    @pytest.mark.parametrize("corner", CORNERS)
    @pytest.mark.parametrize("i", range(5))
    def test_eps_xi_F_closed_equals_oracle(self, P, corner, i):
        assert eps_xi_F_closed(P, i, corner) == eps_xi_F_oracle(P, i, corner)

    @pytest.mark.parametrize("corner", CORNERS)
    @pytest.mark.parametrize("i", range(5))
    def test_F_xi_eta_closed_equals_oracle(self, P, corner, i):
        assert F_xi_eta_closed(P, i, corner) == F_xi_eta_oracle(P, i, corner)

    @pytest.mark.parametrize("corner", CORNERS)
    def test_x_power_consistency(self, P, corner):
        one = tilde_x_pow(P, 1, corner)
        acc = tilde_x_pow(P, 0, corner)
        for i in range(4):
            acc = compose(one, acc)
            assert acc == tilde_x_pow(P, i + 1, corner)


class TestExamples:
    def test_tau21_crossing_example(self, P):
        # (e, y_1 e, 0) crosses to (0, e, 0)
        r, calc = P.Vy, P.calc
        w = -1
        e = basis_elt(r, "E", w, 0)
        y1e = apply_map(calc.y_at("E", 1), e, "E")
        g = G2Elt(calc, w, e, y1e, zero_elt(r, "FEE", w))
        t = tau21(P, g)
        assert t.a.is_zero()
        assert (t.b - e).is_zero()
        assert t.c.is_zero()

    def test_gamma21_unit_example(self, P):
        # 1 (x) e maps to (e, y_1 e, 0)
        r, calc = P.Vy, P.calc
        e = basis_elt(r, "E", -1, 0)
        g = gamma21_EE_G1E(one_G1(calc, 1), e)
        y1e = apply_map(calc.y_at("E", 1), e, "E")
        assert (g.a - e).is_zero()
        assert (g.b - y1e).is_zero()
        assert g.c.is_zero()


class TestUnits:
    def test_eta22_composite(self, P):
        assert all_pass(check_eta22_identity(P)) == []

    def test_omega3_middle_linearity(self, P):
        assert all_pass(check_omega3_linearity(P, n=200, seed=0)) == []
