"""Independent elementwise constructions of the closed-form corner maps.

Every map that the closed forms present as an explicit matrix is rebuilt
here column by column from the defining pairings and one-step operations,
so the two constructions can be compared entry for entry.
"""

from __future__ import annotations

import random

from ..bimodcat import BimoduleMap, compose, identity_map
from ..matrixops import Matrix, ShapeMismatchError
from ..polyring import Poly
from .core import (ProductRep, eps_xi_F_closed, F_xi_eta_closed, tau21,
                   tilde_tau, tilde_x_pow, tilde_x_step_21, tilde_x_step_22)
from .elements import Elt, apply_map, basis_elt, elem_tensor, join, zero_elt
from .models import (G1Elt, G2Elt, L2Elt, UElt, act_G1_on_G2, act_G1_on_U,
                     act_L2_on_L2_left, act_phi1_on_G2, compose_F_after_G1,
                     compose_G1, compose_G1_after_L2, compose_L2_after_G2,
                     compose_L2_after_U, compose_U, decompose_first,
                     decompose_left, gamma21_EE_G1E, gamma22_EE_G1EE,
                     gamma22_EE_G2G2, one_at, one_G1, tau22, zero_G1,
                     zero_G2, zero_L2, zero_U)


class OracleClaimError(AssertionError):
    """An intermediate identity used by an oracle chain failed to hold."""


# ---------------------------------------------------------------------------
# basis pair enumerations for the EF-ordered corner sums
# ---------------------------------------------------------------------------

def _rank(P, word, w):
    return P.Vy.word(word).rank(w)


def _fes(P, w):
    return [basis_elt(P.Vy, "FE", w, k) for k in range(_rank(P, "FE", w))]


def pair_basis(P: ProductRep, corner: str, w: int):
    """Decomposable pairs realizing the flat basis of an EF corner sum."""
    r = P.Vy
    calc = P.calc
    def g1(fe):
        return G1Elt(calc, fe.weight, zero_elt(r, "", fe.weight), fe)
    if corner == "11":
        return [(basis_elt(r, "E", w - 2, i), basis_elt(r, "F", w, j))
                for i in range(_rank(P, "E", w - 2))
                for j in range(_rank(P, "F", w))]
    if corner == "12":
        out = [(basis_elt(r, "E", w, i), one_G1(calc, w))
               for i in range(_rank(P, "E", w))]
        out += [(basis_elt(r, "E", w, i), g1(fe))
                for i in range(_rank(P, "E", w)) for fe in _fes(P, w)]
        return out
    if corner == "21":
        out = [(one_G1(calc, w - 2), basis_elt(r, "F", w, j))
               for j in range(_rank(P, "F", w))]
        out += [(G1Elt(calc, w - 2, zero_elt(r, "", w - 2),
                       elem_tensor(basis_elt(r, "F", w, c),
                                   basis_elt(r, "E", w - 2, d))),
                 basis_elt(r, "F", w, j))
                for c in range(_rank(P, "F", w))
                for d in range(_rank(P, "E", w - 2))
                for j in range(_rank(P, "F", w))]
        return out
    if corner == "22":
        unit = one_G1(calc, w)
        out = [(unit, unit)] if _rank(P, "", w) else []
        out += [(unit, g1(fe)) for fe in _fes(P, w)]
        out += [(g1(fe), unit) for fe in _fes(P, w)]
        out += [(g1(fe1), g1(fe2)) for fe1 in _fes(P, w)
                for fe2 in _fes(P, w)]
        ze = zero_elt(r, "E", w - 2)
        zf = zero_elt(r, "F", w)
        zffe = zero_elt(r, "FFE", w)
        zfee = zero_elt(r, "FEE", w - 2)
        out += [(G2Elt(calc, w - 2, ze, basis_elt(r, "E", w - 2, i), zfee),
                 L2Elt(calc, w, basis_elt(r, "F", w, j), zf, zffe))
                for i in range(_rank(P, "E", w - 2))
                for j in range(_rank(P, "F", w))]
        return out
    raise ShapeMismatchError(f"unknown corner {corner}")


def _eta_pairs(P: ProductRep, w: int):
    """Both coordinate flavors of the coevaluation split at weight w.

    Yields (l_eta at w + 2, g_eta at w, flavor) with flavor "a" or "b".
    """
    r = P.Vy
    calc = P.calc
    eta1 = apply_map(calc.eta(), one_at(calc, w), "FE")
    zf = zero_elt(r, "F", w + 2)
    zffe = zero_elt(r, "FFE", w + 2)
    ze = zero_elt(r, "E", w)
    zfee = zero_elt(r, "FEE", w)
    out = []
    for fL, v in decompose_first(eta1):
        out.append((L2Elt(calc, w + 2, fL, zf, zffe),
                    G2Elt(calc, w, v, ze, zfee), "a"))
        out.append((L2Elt(calc, w + 2, zf, fL, zffe),
                    G2Elt(calc, w, ze, v, zfee), "b"))
    return out


def _columnwise(P: ProductRep, dom, cod, colfn, name: str) -> BimoduleMap:
    """Assemble a map from a per-basis-column elementwise construction."""
    field = P.Vy.A.field
    mats = {}
    for w in dom.weights():
        n, m = cod.rank(w), dom.rank(w)
        mat = Matrix.zero(field, n, m)
        for j in range(m):
            col = colfn(w, j)
            if len(col) != n:
                raise ShapeMismatchError(
                    f"{name}: column {j} at {w} has length {len(col)}")
            for i, v in enumerate(col):
                mat.set(i, j, v)
        mats[w] = mat
    return BimoduleMap(dom, cod, mats, name=name)


# ---------------------------------------------------------------------------
# the commutator map, built elementwise
# ---------------------------------------------------------------------------

def _sigma22_EF_column(P: ProductRep, g2in: G2Elt, lprime: L2Elt) -> UElt:
    """Elementwise image of a mixed column of the constrained corner."""
    calc = P.calc
    r = P.Vy
    w = lprime.weight
    e = g2in.b
    total = zero_U(calc, w)
    zfee = zero_elt(r, "FEE", w - 2)
    zfee_hi = zero_elt(r, "FEE", w)
    ze_hi = zero_elt(r, "E", w)

    def g2_lo(a, b):
        return G2Elt(calc, w - 2, a, b, zfee)

    def g2_hi(a, b):
        return G2Elt(calc, w, a, b, zfee_hi)
    for l_eta, g_eta, flavor in _eta_pairs(P, w):
        ht = tau22(gamma22_EE_G2G2(g_eta, g2in))
        v = g_eta.a if flavor == "a" else g_eta.b
        tens = elem_tensor(v, e)
        claim = []
        if flavor == "a":
            z1 = apply_map(calc.tau_at("EE", 1), tens, "EE")
            for u, rr in decompose_left(z1):
                y1r = apply_map(calc.y_at("E", 1), rr, "E")
                claim.append((g2_hi(ze_hi, u), g2_lo(rr, y1r), 1))
            z2 = apply_map(calc.tau_at("EE", 1),
                           apply_map(calc.y_at("EE", 1), tens, "EE"), "EE")
            for u, rr in decompose_left(z2):
                claim.append((g2_hi(ze_hi, u),
                              g2_lo(zero_elt(r, "E", w - 2), rr), -1))
        else:
            z3 = apply_map(calc.tau_at("EE", 1), tens, "EE")
            for u, rr in decompose_left(z3):
                claim.append((g2_hi(ze_hi, u),
                              g2_lo(zero_elt(r, "E", w - 2), rr), 1))
        acc = None
        for p, q, s in claim:
            t = gamma22_EE_G2G2(p, q)
            t = t if s > 0 else -t
            acc = t if acc is None else acc + t
        if acc is None:
            if not ht.is_zero():
                raise OracleClaimError("empty decomposition of a nonzero "
                                       "crossed image")
        elif not (acc - ht).is_zero():
            raise OracleClaimError("decomposable presentation of the "
                                   "crossed image does not match")
        for p, q, s in claim:
            ghat = compose_L2_after_G2(lprime, q)
            u = compose_U(p, l_eta)
            u = act_G1_on_U(u, ghat)
            total = total + (u if s > 0 else -u)
    return total


def tilde_sigma_oracle(P: ProductRep, corner: str) -> BimoduleMap:
    """The commutator corner map, built column by column from pairings."""
    r = P.Vy
    calc = P.calc
    dom, cod = (r.word("EF") if corner == "11" else P.T[corner]), P.S[corner]

    def col11(w, j):
        e, f = pair_basis(P, "11", w)[j]
        g2 = gamma21_EE_G1E(one_G1(calc, w), e)
        g2t = tau21(P, g2)
        fhat = compose_F_after_G1(f, one_G1(calc, w - 2))
        l = L2Elt(calc, w, zero_elt(r, "F", w), fhat, zero_elt(r, "FFE", w))
        return P.model_to_vec(compose_L2_after_G2(l, g2t))

    def col12(w, j):
        e, chat = pair_basis(P, "12", w)[j]
        g2 = gamma21_EE_G1E(one_G1(calc, w + 2), e)
        g2t = tau21(P, g2)
        return P.model_to_vec(act_G1_on_G2(g2t, chat))

    def col21(w, j):
        c1, f = pair_basis(P, "21", w)[j]
        total = zero_L2(calc, w)
        fhat = compose_F_after_G1(f, one_G1(calc, w - 2))
        lout = L2Elt(calc, w, zero_elt(r, "F", w), fhat,
                     zero_elt(r, "FFE", w))
        for l_eta, g_eta, _ in _eta_pairs(P, w - 2):
            g_mid = act_G1_on_G2(g_eta, c1)
            g_t = tau21(P, g_mid)
            u = compose_U(g_t, l_eta)
            total = total + compose_L2_after_U(lout, u)
        return P.model_to_vec(total)

    def col22(w, j):
        a, b = pair_basis(P, "22", w)[j]
        if isinstance(a, G2Elt):
            return P.model_to_vec(_sigma22_EF_column(P, a, b))
        total = zero_U(calc, w)
        for l_eta, g_eta, _ in _eta_pairs(P, w):
            g_mid = act_G1_on_G2(g_eta, a)
            g_t = tau21(P, g_mid)
            u = compose_U(g_t, l_eta)
            total = total + act_G1_on_U(u, b)
        return P.model_to_vec(total)

    colfn = {"11": col11, "12": col12, "21": col21, "22": col22}[corner]
    return _columnwise(P, dom, cod, colfn, f"sigma{corner}_oracle")


# ---------------------------------------------------------------------------
# the pairing maps, built elementwise
# ---------------------------------------------------------------------------

def _iter_x_E(P, e: Elt, i: int) -> Elt:
    for _ in range(i):
        e = apply_map(P.calc.x_at("E", 1), e, "E")
    return e


def _iter_step21(P, g: G1Elt, i: int) -> G1Elt:
    for _ in range(i):
        g = tilde_x_step_21(P, g)
    return g


def _iter_step22(P, g: G2Elt, i: int) -> G2Elt:
    for _ in range(i):
        g = tilde_x_step_22(P, g)
    return g


def eps_xi_F_oracle(P: ProductRep, i: int, corner: str) -> BimoduleMap:
    """The i-th evaluation pairing on a corner, built column by column."""
    r = P.Vy
    calc = P.calc
    closed = eps_xi_F_closed(P, i, corner)
    y1E = calc.y_at("E", 1)

    def col11(w, j):
        e, f = pair_basis(P, "11", w)[j]
        ei = apply_map(y1E, _iter_x_E(P, e, i), "E")
        return join(ei, f, 1).vec

    def col21(w, j):
        c1, f = pair_basis(P, "21", w)[j]
        ci = _iter_step21(P, c1, i)
        return compose_F_after_G1(f, ci).vec

    def col12(w, j):
        e, chat = pair_basis(P, "12", w)[j]
        ei = _iter_x_E(P, e, i)
        res = join(apply_map(y1E, ei, "E"), chat.phi1, 1)
        if chat.theta.vec:
            res = res + ei.scale(chat.theta.vec[0])
        return res.vec

    def col22(w, j):
        a, b = pair_basis(P, "22", w)[j]
        if isinstance(a, G2Elt):
            g2i = _iter_step22(P, a, i)
            return P.model_to_vec(compose_L2_after_G2(b, g2i))
        gi = _iter_step21(P, a, i)
        return P.model_to_vec(compose_G1(b, gi))

    colfn = {"11": col11, "12": col12, "21": col21, "22": col22}[corner]
    return _columnwise(P, closed.dom, closed.cod, colfn,
                       f"eps_xi{i}_F_{corner}_oracle")


def F_xi_eta_oracle(P: ProductRep, i: int, corner: str) -> BimoduleMap:
    """The i-th coevaluation pairing on a corner, built column by column."""
    r = P.Vy
    calc = P.calc
    closed = F_xi_eta_closed(P, i, corner)

    def col11(w, j):
        return P.model_to_vec(_iter_step21(P, one_G1(calc, w), i))

    def col21(w, j):
        f = basis_elt(r, "F", w, j)
        ci = _iter_step21(P, one_G1(calc, w), i)
        l = L2Elt(calc, w, zero_elt(r, "F", w), f, zero_elt(r, "FFE", w))
        return P.model_to_vec(compose_G1_after_L2(ci, l))

    def col12(w, j):
        e = basis_elt(r, "E", w, j)
        g0 = G2Elt(calc, w, e, apply_map(calc.y_at("E", 1), e, "E"),
                   zero_elt(r, "FEE", w))
        return P.model_to_vec(_iter_step22(P, g0, i))

    def col22(w, j):
        c = P.sum_basis("11", w)[j]
        total = zero_U(calc, w)
        for l_eta, g_eta, _ in _eta_pairs(P, w):
            g0 = act_G1_on_G2(g_eta, c)
            gi = _iter_step22(P, g0, i)
            total = total + compose_U(gi, l_eta)
        return P.model_to_vec(total)

    colfn = {"11": col11, "12": col12, "21": col21, "22": col22}[corner]
    return _columnwise(P, closed.dom, closed.cod, colfn,
                       f"F_xi{i}_eta_{corner}_oracle")


# ---------------------------------------------------------------------------
# product-level checks
# ---------------------------------------------------------------------------

def _map_check(name, lhs, rhs):
    ok = (lhs - rhs).is_zero()
    res = {"check": name, "status": "pass" if ok else "fail"}
    if not ok:
        bad = [w for w in lhs.dom.weights()
               if not (lhs.matrix(w) - rhs.matrix(w)).is_zero()]
        res["witness"] = f"weights {bad}"
    return res


def check_product_hecke(P: ProductRep):
    """Dot and crossing relations on every corner of the product square."""
    r = P.Vy
    calc = P.calc
    out = []

    def relations(tag, t, xin, xout, ident):
        tt = compose(t, t)
        out.append({"check": f"hecke[{tag}]: tau^2 = 0",
                    "status": "pass" if tt.is_zero() else "fail"})
        out.append(_map_check(f"hecke[{tag}]: tau xin = xout tau + 1",
                              compose(t, xin), compose(xout, t) + ident))
        out.append(_map_check(f"hecke[{tag}]: xin tau = tau xout + 1",
                              compose(xin, t), compose(t, xout) + ident))

    relations("11", calc.tau_at("EE", 1), calc.x_at("EE", 1),
              calc.x_at("EE", 2), identity_map(r.word("EE")))
    relations("12", calc.tau_at("EEE", 2), calc.x_at("EEE", 2),
              calc.x_at("EEE", 3), identity_map(r.word("EEE")))

    T21 = tilde_tau(P, "21")
    Xout21 = tilde_x_pow(P, 1, "22")

    def col_xin(w, j):
        g = P.sum_basis("12", w)[j]
        step = tilde_x_step_21(P, one_G1(calc, w))
        return P.model_to_vec(act_G1_on_G2(g, step))
    Xin21 = _columnwise(P, P.M_G2, P.M_G2, col_xin, "xin21")
    relations("21", T21, Xin21, Xout21, identity_map(P.M_G2))

    spanning_all_zero = True
    for w in P.weights():
        span = []
        for i in range(r.word("EE").rank(w)):
            ee = basis_elt(r, "EE", w, i)
            for c1 in (P.sum_basis("11", w + 4)
                       if w + 4 in {x for x in P.M_G1.weights()} else []):
                span.append(gamma22_EE_G1EE(c1, ee))
        for q in P.sum_basis("12", w):
            for p in P.sum_basis("12", w + 2):
                span.append(gamma22_EE_G2G2(p, q))
        for v in span:
            if not v.is_zero():
                spanning_all_zero = False
            if not tau22(tau22(v)).is_zero():
                out.append({"check": "hecke[22]: tau^2 = 0",
                            "status": "fail", "witness": f"weight {w}"})
                return out
    if spanning_all_zero:
        out.append({"check": "hecke[22]: tau^2 = 0", "status": "pass"})
        out.append({"check": "hecke[22]: dot relations", "status": "pass",
                    "witness": "corner trivial"})
    else:
        out.append({"check": "hecke[22]: tau^2 = 0", "status": "pass"})
        raise NotImplementedError(
            "dot relations on the constrained corner need a nonzero "
            "spanning calculus that this build does not implement")
    return out


def check_eta22_identity(P: ProductRep):
    """The coevaluation split reassembles to the identity pairing."""
    calc = P.calc
    r = P.Vy
    out = []
    for w in P.weights():
        eta1 = apply_map(calc.eta(), one_at(calc, w), "FE")
        total = zero_U(calc, w)
        for l_eta, g_eta, _ in _eta_pairs(P, w):
            total = total + compose_U(g_eta, l_eta)
        zfe = zero_elt(r, "FE", w)
        expected = UElt(calc, w, eta1, zfe, zfe, eta1,
                        zero_elt(r, "FFEE", w))
        ok = (total - expected).is_zero()
        out.append({"check": f"eta22 identity at {w}",
                    "status": "pass" if ok else "fail"})
    return out


def check_omega3_linearity(P: ProductRep, n: int = 200, seed: int = 0):
    """Middle linearity of the constrained mixed component over the
    off-diagonal end data, on random decomposable inputs."""
    from .gammas import omega3_apply
    rng = random.Random(seed)
    r = P.Vy
    calc = P.calc
    y = Poly.var(r.A.field, "y")

    def rand(word, w):
        vec = []
        for _ in range(r.word(word).rank(w)):
            p = Poly.zero(r.A.field)
            for k in range(2):
                c = rng.randint(-2, 2)
                if c:
                    p = p + (y ** k) * c
            vec.append(p)
        return Elt(r, word, w, vec)

    weights = [w for w in P.weights()]
    bad = 0
    for t in range(n):
        w = weights[rng.randrange(len(weights))]
        g = G2Elt(calc, w - 2, rand("E", w - 2), rand("E", w - 2),
                  rand("FEE", w - 2))
        l = L2Elt(calc, w, rand("F", w), rand("F", w), rand("FFE", w))
        phi = rand("FE", w - 2)
        lhs = omega3_apply(P, act_phi1_on_G2(g, phi), l)
        rhs = omega3_apply(P, g, act_L2_on_L2_left(phi, l))
        if any(not (a - b).is_zero() for a, b in zip(lhs, rhs)):
            bad += 1
    return [{"check": f"omega3 middle linearity ({n} samples)",
             "status": "pass" if bad == 0 else "fail",
             "witness": f"{bad} failures" if bad else f"seed {seed}"}]
