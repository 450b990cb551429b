"""CQT/QT verification, deformations and induced YD structures."""

import pytest

from hopflab.fields import QQ
from hopflab.linalg import Matrix, Tensor
from hopflab.twist import eps_eps, two_cocycle
from hopflab.quasitriangular import (cqt_structure, deform_cqt, deform_qt,
                                     qt_structure, verify_cqt, verify_qt,
                                     yd_from_comodule, yd_from_module)
from hopflab.yd import verify_yd
from hopflab.catalog import (cqt_c2, group_algebra_c2, qt_c2, qt_t, r_t,
                             sigma_t, sweedler_h4, theta_t, trivial_module)


def test_r_t_passes(h4):
    for t in (-2, -1, 0, 1, 2, 3):
        rep = verify_cqt(r_t(h4, t))
        assert rep.ok, rep.render_text()


def test_trivial_r_on_kc2(kc2):
    c = cqt_structure(kc2, eps_eps(kc2))
    assert verify_cqt(c).ok


def test_sign_r_on_kc2(kc2):
    assert verify_cqt(cqt_c2(kc2, -1)).ok


def test_cqt_rejects_corruption(h4):
    from hopflab.quasitriangular import CqtStructure
    r1 = r_t(h4, 1)
    bad = Matrix(QQ, 4, 4, [row[:] for row in r1.r.data])
    bad.data[2][3] = QQ.one   # R(h⊗gh) := 1 instead of -1
    rep = verify_cqt(CqtStructure(h4, bad, r1.r_inv))
    assert not rep.ok


def test_deform_cqt_trivial(h4):
    r1 = r_t(h4, 1)
    triv = two_cocycle(h4, eps_eps(h4))
    assert deform_cqt(r1, triv).r == r1.r


def test_deform_cqt_shift_is_t_minus_s(h4):
    for t in (-1, 0, 2):
        for s in (1, 2, -2):
            got = deform_cqt(r_t(h4, t), sigma_t(h4, s))
            assert got.r == r_t(h4, t - s, verify=False).r


def test_deform_cqt_roundtrip(h4):
    r1 = r_t(h4, 1)
    s1 = sigma_t(h4, 1)
    from hopflab.twist import deform
    hs = deform(s1, verify=False)
    rs = deform_cqt(r1, s1)
    sinv = two_cocycle(hs, s1.sigma_inv)
    back = deform_cqt(rs, sinv)
    assert back.r == r1.r


def test_qt_t_passes(h4):
    assert verify_qt(qt_t(h4, 0)).ok
    assert verify_qt(qt_t(h4, 1)).ok


def test_qt_trivial_on_kc2(kc2):
    from hopflab.twist import hh_one
    q = qt_structure(kc2, hh_one(kc2))
    assert verify_qt(q).ok


def test_deform_qt_trivial(h4):
    from hopflab.twist import dual_cocycle, hh_one
    q1 = qt_t(h4, 1)
    d = dual_cocycle(h4, hh_one(h4))
    assert deform_qt(q1, d).rr == q1.rr


def test_deform_qt_shift_is_minus_s(h4):
    for s in (1, 2, -1):
        got = deform_qt(qt_t(h4, 0), theta_t(h4, s))
        assert got.rr == qt_t(h4, -s, verify=False).rr


def test_deform_qt_roundtrip(h4):
    from hopflab.twist import deform_dual, dual_cocycle
    q0 = qt_t(h4, 0)
    th = theta_t(h4, 2)
    qd = deform_qt(q0, th)
    ht = deform_dual(th, verify=False)
    back = deform_qt(qd, dual_cocycle(ht, th.theta_inv))
    assert back.rr == q0.rr


# -- induced YD structures ----------------------------------------------------

def test_yd_from_comodule_trivial_coaction(h4):
    r1 = r_t(h4, 1)
    triv = trivial_module(h4)
    mod = yd_from_comodule(r1, triv.coaction)
    # action factors through ε
    assert mod.action == triv.action
    assert verify_yd(mod).ok


def test_yd_from_comodule_regular(h4, mreg):
    assert mreg.dim == 4
    assert verify_yd(mreg).ok


def test_yd_from_comodule_kc2_hand_contraction(kc2):
    c = cqt_c2(kc2, -1)
    coaction = Tensor(QQ, (2, 2, 2), list(kc2.comult.data))
    mod = yd_from_comodule(c, coaction)
    # g acts on basis vector g by R(g⊗g) = -1
    assert mod.act_row(1, 1) == [QQ.zero, -QQ.one]
    assert mod.act_row(1, 0) == [QQ.one, QQ.zero]


def test_yd_from_module_trivial_rr(kc2):
    from hopflab.twist import hh_one
    q = qt_structure(kc2, hh_one(kc2))
    action = Tensor(QQ, (2, 2, 2), list(kc2.mult.data))
    mod = yd_from_module(q, action)
    # trivial coaction a ↦ a⊗1
    for p in range(2):
        assert mod.coact(p) == [(p, 0, QQ.one)]


def test_yd_from_module_regular_h4(h4):
    q0 = qt_t(h4, 0)
    action = Tensor(QQ, (4, 4, 4), list(h4.mult.data))
    mod = yd_from_module(q0, action)
    assert verify_yd(mod).ok


def test_yd_from_module_kc2(kc2):
    q = qt_c2(kc2)
    action = Tensor(QQ, (2, 2, 2), list(kc2.mult.data))
    mod = yd_from_module(q, action)
    assert verify_yd(mod).ok
