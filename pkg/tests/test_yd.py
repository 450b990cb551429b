"""YD modules/algebras: braiding, σ̲/θ̲ functors, braided products,
opposites, End(M), quantum commutativity and Azumaya certificates."""

import random

import pytest

from hopflab.fields import QQ
from hopflab.linalg import Matrix, Tensor, mat_mul, rank
from hopflab.twist import deform, eps_eps, hh_one, two_cocycle, dual_cocycle
from hopflab.yd import (YdAlgebra, YdMap, YdModule, azumaya_check,
                        braided_product, braiding, end_algebra, eta,
                        generating_set, h_opposite, is_yd_map,
                        quantum_commutative, random_yd_map, sigma_algebra,
                        sigma_module, theta_algebra, theta_module, theta_phi,
                        verify_braided_functor, verify_theta_braided,
                        verify_yd, verify_yd_algebra, yd_hom_basis,
                        yd_tensor)
from hopflab.catalog import (cqt_c2, group_algebra_c2, regular_comodule_module,
                             r_t, sigma_t, sweedler_h4, theta_t,
                             trivial_algebra, trivial_module)


@pytest.fixture(scope="module")
def kc2_alg(kc2):
    c = cqt_c2(kc2, -1, verify=False)
    mod = regular_comodule_module(c)
    return YdAlgebra(mod, kc2.mult, kc2.unit)


def test_trivial_module_passes(h4):
    assert verify_yd(trivial_module(h4)).ok


def test_regular_module_passes(mreg):
    assert verify_yd(mreg).ok


def test_corrupted_action_detected(mreg, h4):
    bad = Tensor(QQ, mreg.action.shape, list(mreg.action.data))
    bad.data[(1 * 4 + 1) * 4 + 2] = QQ.from_int(5)
    broken = YdModule(h4, 4, bad, mreg.coaction)
    rep = verify_yd(broken)
    assert not rep.ok
    assert rep.first_failure().witness is not None


def test_yd_tensor_is_yd(mreg, h4):
    t = yd_tensor(mreg, trivial_module(h4))
    assert verify_yd(t).ok
    t2 = yd_tensor(mreg, mreg)
    assert verify_yd(t2).ok


def test_braiding_trivial_second_factor_is_flip(mreg, h4):
    phi = braiding(mreg, trivial_module(h4))
    assert phi.matrix == Matrix.identity(QQ, 4)
    assert is_yd_map(phi).ok


def test_braiding_regular_invertible(mreg):
    phi = braiding(mreg, mreg)
    assert phi.matrix.rows == 16
    assert rank(phi.matrix) == 16
    assert is_yd_map(phi).ok


def test_braiding_hexagon_small(kc2):
    c = cqt_c2(kc2, -1, verify=False)
    m = regular_comodule_module(c)
    p = trivial_module(kc2, 1)
    mods = [m, p]
    for ma in mods:
        for mb in mods:
            for mc in mods:
                lhs = braiding(ma, yd_tensor(mb, mc)).matrix
                phi_ab = braiding(ma, mb).matrix
                phi_ac = braiding(ma, mc).matrix
                dim_a, dim_b, dim_c = ma.dim, mb.dim, mc.dim
                first = Matrix.zeros(QQ, dim_a * dim_b * dim_c,
                                     dim_b * dim_a * dim_c)
                for src in range(dim_a * dim_b):
                    for dst in range(dim_b * dim_a):
                        v = phi_ab.data[src][dst]
                        if v:
                            for r in range(dim_c):
                                first.data[src * dim_c + r][dst * dim_c
                                                            + r] = v
                second = Matrix.zeros(QQ, dim_b * dim_a * dim_c,
                                      dim_b * dim_c * dim_a)
                for q in range(dim_b):
                    for src in range(dim_a * dim_c):
                        for dst in range(dim_c * dim_a):
                            v = phi_ac.data[src][dst]
                            if v:
                                second.data[q * dim_a * dim_c + src][
                                    q * dim_c * dim_a + dst] = v
                assert mat_mul(first, second) == lhs


def test_sigma_module_trivial(mreg, h4):
    triv = two_cocycle(h4, eps_eps(h4))
    sm = sigma_module(triv, mreg)
    assert sm.action == mreg.action
    assert sm.coaction == mreg.coaction


def test_sigma_module_roundtrip(mreg, s1):
    hs = deform(s1, verify=False)
    sm = sigma_module(s1, mreg, hs)
    sinv = two_cocycle(hs, s1.sigma_inv)
    back = sigma_module(sinv, sm)
    assert back.action == mreg.action
    assert back.coaction == mreg.coaction


def test_eta_trivial_is_identity(mreg, h4):
    triv = two_cocycle(h4, eps_eps(h4))
    em, inv = eta(triv, mreg, mreg)
    assert em.matrix == Matrix.identity(QQ, 16)
    assert inv == Matrix.identity(QQ, 16)


def test_eta_invertible_and_yd(mreg, s1):
    em, inv = eta(s1, mreg, mreg)
    assert mat_mul(em.matrix, inv) == Matrix.identity(QQ, 16)
    assert is_yd_map(em).ok


def test_braided_functor_square(mreg, s1, h4, unit_obj):
    assert verify_braided_functor(s1, mreg, mreg).ok
    s2 = sigma_t(h4, 2, verify=False)
    assert verify_braided_functor(s2, mreg, unit_obj.module).ok


def test_eta_naturality_random(mreg, unit_obj, s1):
    rng = random.Random(0)
    uo = unit_obj.module
    hs = deform(s1, verify=False)
    eta_mu, _ = eta(s1, mreg, uo, hs)
    eta_uu, _ = eta(s1, uo, uo, hs)
    hom = yd_hom_basis(mreg, uo)
    assert hom, "expected nonzero YD map space"
    for _ in range(3):
        f = random_yd_map(rng, mreg, uo, hom)
        kron = Matrix.zeros(QQ, mreg.dim * uo.dim, uo.dim * uo.dim)
        for p in range(mreg.dim):
            for q in range(uo.dim):
                for p2 in range(uo.dim):
                    v = f.matrix.data[p][p2]
                    if v:
                        kron.data[p * uo.dim + q][p2 * uo.dim + q] = v
        assert mat_mul(kron, eta_uu.matrix) == mat_mul(eta_mu.matrix, kron)


def test_sigma_functoriality_random(mreg, unit_obj, s1):
    rng = random.Random(1)
    uo = unit_obj.module
    hs = deform(s1, verify=False)
    sm = sigma_module(s1, mreg, hs, verify=False)
    su = sigma_module(s1, uo, hs, verify=False)
    hom = yd_hom_basis(mreg, uo)
    for _ in range(4):
        f = random_yd_map(rng, mreg, uo, hom)
        assert is_yd_map(YdMap(sm, su, f.matrix)).ok


def test_sigma_algebra_roundtrip(unit_obj, s1):
    hs = deform(s1, verify=False)
    sa = sigma_algebra(s1, unit_obj, hs)
    sinv = two_cocycle(hs, s1.sigma_inv)
    back = sigma_algebra(sinv, sa)
    assert back.mult == unit_obj.mult
    assert back.module.action == unit_obj.module.action


def test_sigma_preserves_quantum_commutativity(unit_obj, s1):
    assert quantum_commutative(unit_obj)
    sa = sigma_algebra(s1, unit_obj, verify=False)
    assert quantum_commutative(sa)


def test_theta_module_trivial_and_roundtrip(mreg, h4):
    triv = dual_cocycle(h4, hh_one(h4))
    tm = theta_module(triv, mreg)
    assert tm.coaction == mreg.coaction
    th2 = theta_t(h4, 2, verify=False)
    from hopflab.twist import deform_dual
    ht = deform_dual(th2, verify=False)
    tm2 = theta_module(th2, mreg, ht)
    back = theta_module(dual_cocycle(ht, th2.theta_inv), tm2)
    assert back.coaction == mreg.coaction


def test_theta_braided_square(mreg, h4):
    th1 = theta_t(h4, 1, verify=False)
    assert verify_theta_braided(th1, mreg, mreg).ok


def test_theta_algebra_valid(unit_obj, h4):
    th1 = theta_t(h4, 1, verify=False)
    ta = theta_algebra(th1, unit_obj)
    assert verify_yd_algebra(ta).ok


# -- braided products and opposites -------------------------------------------

def test_braided_product_with_ground_field(kc2_alg, kc2):
    k_alg = trivial_algebra(kc2)
    bp = braided_product(kc2_alg, k_alg)
    # A # k ≅ A on the nose (index map p ↦ p·1)
    assert bp.dim == kc2_alg.dim
    assert bp.mult == kc2_alg.mult
    assert verify_yd_algebra(bp).ok


def test_braided_product_kc2(kc2_alg):
    bp = braided_product(kc2_alg, kc2_alg)
    assert bp.dim == 4
    assert verify_yd_algebra(bp).ok


def test_h_opposite_trivial_coaction_is_opposite(h4):
    # End of a trivial module has trivial coaction pieces: use a plain
    # noncommutative algebra with trivial YD structure instead
    mod = trivial_module(h4, 2)
    one, zero = QQ.one, QQ.zero
    # 2x2 upper-triangular-style toy algebra: e0 = 1, e1 nilpotent
    mult = Tensor.zeros(QQ, (2, 2, 2))
    mult.data[(0 * 2 + 0) * 2 + 0] = one
    mult.data[(0 * 2 + 1) * 2 + 1] = one
    mult.data[(1 * 2 + 0) * 2 + 1] = one
    alg = YdAlgebra(mod, mult, [one, zero])
    bar = h_opposite(alg, verify=False)
    for p in range(2):
        for q in range(2):
            base_bar = (p * 2 + q) * 2
            base = (q * 2 + p) * 2
            assert bar.mult.data[base_bar:base_bar + 2] == \
                alg.mult.data[base:base + 2]


def test_h_opposite_of_quantum_commutative_is_same(unit_obj):
    assert quantum_commutative(unit_obj)
    bar = h_opposite(unit_obj)
    assert bar.mult == unit_obj.mult


def test_double_opposite_passes(kc2_alg):
    bar2 = h_opposite(h_opposite(kc2_alg))
    assert verify_yd_algebra(bar2).ok


# -- End(M) and Azumaya ---------------------------------------------------------

def test_end_of_dim1_is_ground_field(h4):
    e = end_algebra(trivial_module(h4, 1))
    assert e.dim == 1
    assert verify_yd_algebra(e).ok


def test_end_regular_valid(mreg):
    e = end_algebra(mreg)
    assert e.dim == 16
    assert verify_yd_algebra(e).ok


def test_sigma_end_and_end_sigma_dims(mreg, s1):
    hs = deform(s1, verify=False)
    e = end_algebra(mreg, verify=False)
    se = sigma_algebra(s1, e, hs)
    es = end_algebra(sigma_module(s1, mreg, hs, verify=False))
    assert se.dim == es.dim == 16
    assert verify_yd_algebra(se).ok
    assert verify_yd_algebra(es).ok


def test_quantum_commutative_cases(kc2, unit_obj, mreg):
    triv = trivial_algebra(kc2)
    assert quantum_commutative(triv)
    e = end_algebra(trivial_module(sweedler_h4(QQ, verify=False), 2),
                    verify=False)
    assert not quantum_commutative(e)   # 2x2 matrix algebra
    assert quantum_commutative(unit_obj)


def test_generating_set_small(kc2_alg):
    gens = generating_set(kc2_alg)
    assert len(gens) >= 1


def test_azumaya_ground_field(h4):
    rep = azumaya_check(trivial_algebra(h4))
    assert rep.ok


def test_azumaya_end_regular(mreg):
    e = end_algebra(mreg, verify=False)
    rep = azumaya_check(e)
    assert rep.ok, rep.render_text()


def test_azumaya_control_fails(kc2):
    control = YdAlgebra(trivial_module(kc2, 2), kc2.mult, kc2.unit)
    rep = azumaya_check(control)
    failed = {c.name for c in rep.failures()}
    assert "is_azumaya" in failed
    assert "F_bijective" in failed and "G_bijective" in failed


def test_azumaya_invariance_under_sigma(kc2):
    """is_azumaya(A) ⇔ is_azumaya(σ̲A) on both an Azumaya instance and the
    non-Azumaya control."""
    from hopflab.catalog import one_cocycle_c2
    from hopflab.twist import coboundary_from
    cob = coboundary_from(one_cocycle_c2(kc2, 2))
    hs = deform(cob, verify=False)
    c = cqt_c2(kc2, -1, verify=False)
    mod = regular_comodule_module(c)
    e = end_algebra(mod, verify=False)
    se = sigma_algebra(cob, e, hs, verify=False)
    assert azumaya_check(e).ok == azumaya_check(se).ok is True
    control = YdAlgebra(trivial_module(kc2, 2), kc2.mult, kc2.unit)
    s_control = sigma_algebra(cob, control, hs, verify=False)
    ok_a = [c2 for c2 in azumaya_check(control).checks
            if c2.name == "is_azumaya"][0].ok
    ok_b = [c2 for c2 in azumaya_check(s_control).checks
            if c2.name == "is_azumaya"][0].ok
    assert ok_a == ok_b is False
