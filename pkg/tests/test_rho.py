"""The assembled commutator maps and their two isomorphism certificates."""

import pytest

from sl2prod.bimodcat import certify_iso
from sl2prod.polyring import QQ, parse_poly
from sl2prod.product import tilde_sigma_closed
from sl2prod.product.rho import (_corner_rho, tilde_rho,
                                 triangular_certificate)

CORNERS = ("11", "21", "12", "22")
WINDOW = range(-4, 5)


class TestWellDefined:
    @pytest.mark.parametrize("lam", WINDOW)
    def test_welldefined(self, P, lam):
        assert tilde_rho(P, lam).is_welldefined() is None

    @pytest.mark.parametrize("lam", WINDOW)
    def test_corner_maps_welldefined(self, P, lam):
        f = tilde_rho(P, lam)
        for c in CORNERS:
            assert f.corners[c].is_welldefined() is None, (lam, c)


class TestDeterminantCertificate:
    @pytest.mark.parametrize("lam", WINDOW)
    def test_iso(self, P, lam):
        cert = certify_iso(tilde_rho(P, lam))
        assert cert.ok, (lam, cert.witness)

    def test_dets_are_units(self, P):
        for lam in WINDOW:
            for det in certify_iso(tilde_rho(P, lam)).dets.values():
                p = parse_poly(det, QQ)
                assert p.is_constant()
                assert not p.is_zero()

    def test_nonempty_somewhere(self, P):
        # the certificates are not vacuous: some weights carry actual matrices
        nonempty = [lam for lam in WINDOW
                    if certify_iso(tilde_rho(P, lam)).dets]
        assert nonempty


class TestTriangularCertificate:
    @pytest.mark.parametrize("lam", WINDOW)
    def test_passes(self, P, lam):
        out = triangular_certificate(P, lam)
        assert out["status"] == "pass"
        assert out["lam"] == lam

    def test_covers_all_corners(self, P):
        out = triangular_certificate(P, 0)
        assert set(out["corners"]) == set(CORNERS)


class TestAgreement:
    def test_weight_zero_row_and_column_forms_agree(self, P):
        f0 = tilde_rho(P, 0)
        for c in CORNERS:
            g = _corner_rho(P, c, 0)
            s = tilde_sigma_closed(P, c)
            for lam in f0.corners[c].mats:
                assert g.matrix(lam) == f0.corners[c].matrix(lam), c
                assert s.matrix(lam) == f0.corners[c].matrix(lam), c

    def test_mats_keys_are_corner_weight_pairs(self, P):
        f = tilde_rho(P, 2)
        for key in f.mats:
            corner, w = key
            assert corner in CORNERS
            assert f.matrix(key) is f.mats[key]
