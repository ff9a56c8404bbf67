"""Weight-graded bimodules, matrices, and isomorphism certification."""

import random

import pytest

from sl2prod.bimodcat import (SumBimodule, certify_iso, compose,
                              direct_sum_maps, identity_map, inverse_map,
                              tensor_over_A, zero_map)
from sl2prod.matrixops import (Matrix, ShapeMismatchError, adjugate,
                               bareiss_determinant, block_matrix,
                               kron_identity_left)
from sl2prod.polyring import Poly, QQ
from sl2prod.tworep import make_L1, rho, sigma


def rand_matrix(rng, n, m):
    y = Poly.var(QQ, "y")
    out = Matrix.zero(QQ, n, m)
    for i in range(n):
        for j in range(m):
            p = Poly.const(QQ, rng.randint(-3, 3))
            if rng.random() < 0.5:
                p = p + y * rng.randint(-2, 2)
            out.set(i, j, p)
    return out


class TestMatrix:
    def test_matmul_shapes(self):
        a = Matrix.identity(QQ, 2)
        b = Matrix.zero(QQ, 3, 2)
        with pytest.raises(ShapeMismatchError):
            a @ b

    def test_block_assembly(self):
        a = Matrix.identity(QQ, 2)
        b = Matrix.zero(QQ, 2, 1)
        m = block_matrix(QQ, [[a, b]])
        assert (m.nrows, m.ncols) == (2, 3)
        assert m[(1, 1)] == Poly.one(QQ)

    def test_kron_identity(self):
        m = Matrix.from_rows(QQ, [[Poly.var(QQ, "y")]])
        k = kron_identity_left(3, m)
        assert (k.nrows, k.ncols) == (3, 3)
        assert k[(2, 2)] == Poly.var(QQ, "y")
        assert k[(0, 1)].is_zero()

    def test_determinant_of_triangular(self):
        y = Poly.var(QQ, "y")
        m = Matrix.from_rows(QQ, [
            [Poly.one(QQ), Poly.zero(QQ)],
            [y, -Poly.one(QQ)]])
        assert bareiss_determinant(m) == -Poly.one(QQ)

    def test_determinant_empty(self):
        assert bareiss_determinant(Matrix.zero(QQ, 0, 0)) == Poly.one(QQ)

    def test_determinant_multiplicative(self):
        rng = random.Random(7)
        for _ in range(20):
            a = rand_matrix(rng, 3, 3)
            b = rand_matrix(rng, 3, 3)
            assert (bareiss_determinant(a @ b)
                    == bareiss_determinant(a) * bareiss_determinant(b))

    def test_adjugate_identity(self):
        rng = random.Random(11)
        for _ in range(20):
            m = rand_matrix(rng, 3, 3)
            det = bareiss_determinant(m)
            adj = adjugate(m)
            assert adj @ m == Matrix.identity(QQ, 3).scale(det)
            assert m @ adj == Matrix.identity(QQ, 3).scale(det)


class TestBimodules:
    def test_word_ranks(self):
        rep = make_L1()
        assert rep.word("E").rank(-1) == 1
        assert rep.word("E").rank(1) == 0
        assert rep.word("EF").rank(1) == 1
        assert rep.word("EE").total_rank() == 0

    def test_tensor_matches_word(self):
        rep = make_L1()
        t = tensor_over_A(rep.F, rep.E)
        for lam in (-1, 1):
            assert t.rank(lam) == rep.word("FE").rank(lam)

    def test_sum_offsets(self):
        rep = make_L1()
        s = SumBimodule([rep.word("EF"), rep.word("")])
        assert s.rank(1) == rep.word("EF").rank(1) + rep.word("").rank(1)
        assert s.offset(1, 1) == rep.word("EF").rank(1)


class TestMaps:
    def test_identity_compose(self):
        rep = make_L1()
        f = sigma(rep)
        assert compose(identity_map(f.cod), f) == f
        assert compose(f, identity_map(f.dom)) == f

    def test_zero_map(self):
        rep = make_L1()
        z = zero_map(rep.word("EF"), rep.word("FE"))
        assert z.is_zero()

    def test_direct_sum_entries(self):
        rep = make_L1()
        s = SumBimodule([rep.word("EF"), rep.word("EF")])
        t = SumBimodule([rep.word("FE"), rep.word("")])
        f = direct_sum_maps(s, t, {(0, 0): sigma(rep), (1, 1): rep.eps})
        lam = 1
        assert f.matrix(lam).nrows == t.rank(lam)
        assert f.matrix(lam).ncols == s.rank(lam)

    def test_welldefined(self):
        rep = make_L1()
        assert sigma(rep).is_welldefined() is None


class TestCertification:
    def test_rho_plus_one(self):
        rep = make_L1()
        f = rho(rep, 1)
        cert = certify_iso(f)
        assert cert.ok
        assert f.matrix(1).nrows == 1  # evaluation component only

    def test_rho_minus_one(self):
        rep = make_L1()
        cert = certify_iso(rho(rep, -1))
        assert cert.ok

    def test_empty_map_is_iso(self):
        rep = make_L1()
        cert = certify_iso(rho(rep, 3))
        assert cert.ok and cert.dets == {}

    def test_zero_square_map_fails(self):
        rep = make_L1()
        cert = certify_iso(zero_map(rep.word(""), rep.word("")))
        assert not cert.ok

    def test_inverse_round_trip(self):
        rep = make_L1()
        f = rho(rep, 1)
        g = inverse_map(f)
        assert compose(g, f) == identity_map(f.dom)
        assert compose(f, g) == identity_map(f.cod)

    def test_determinant_unit_not_just_nonzero(self):
        rep = make_L1()
        y = Poly.var(QQ, "y")
        f = rho(rep, 1)
        scaled = f.scale(y)
        assert not certify_iso(scaled).ok
