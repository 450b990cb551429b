"""Catalog entries: tabulated values, provenance-level verification at
load, and characteristic guards."""

import pytest

from hopflab.fields import QQ, FieldError, PrimeField
from hopflab.linalg import mat_mul
from hopflab import catalog as cat


def test_h4_multiplication_table(h4):
    # h·g = -gh
    assert h4.mul_basis(2, 1) == [QQ.zero, QQ.zero, QQ.zero, -QQ.one]
    # g·h = gh, g·gh = h, gh·g = -h
    assert h4.mul_basis(1, 2)[3] == QQ.one
    assert h4.mul_basis(1, 3)[2] == QQ.one
    assert h4.mul_basis(3, 1)[2] == -QQ.one
    # h² = 0 and (gh)² = 0
    assert not any(h4.mul_basis(2, 2))
    assert not any(h4.mul_basis(3, 3))


def test_h4_antipode_square_is_minus_one_on_h(h4):
    ss = mat_mul(h4.antipode, h4.antipode)
    assert ss.data[2] == [QQ.zero, QQ.zero, -QQ.one, QQ.zero]
    assert ss.data[1] == [QQ.zero, QQ.one, QQ.zero, QQ.zero]


def test_r_table_values(h4):
    r1 = cat.r_t(h4, 1)
    assert r1.r.data[2][3] == -QQ.one        # R_1(h⊗gh) = -t = -1
    assert r1.r.data[1][1] == -QQ.one        # R(g⊗g) = -1
    r2 = cat.r_t(h4, 2)
    assert r2.r.data[3][2] == QQ.from_int(2)  # R_t(gh⊗h) = t


def test_sigma_table_values(h4):
    s2 = cat.sigma_t(h4, 2)
    assert s2.sigma.data[3][3] == -QQ.one     # σ_2(gh⊗gh) = -t/2 = -1
    assert s2.sigma.data[2][2] == QQ.one      # σ_2(h⊗h) = t/2 = 1


def test_theta_values(h4):
    from hopflab.twist import hh_one
    th0 = cat.theta_t(h4, 0)
    assert th0.theta == hh_one(h4)
    th2 = cat.theta_t(h4, 2)
    assert th2.theta.data[2][3] == QQ.one     # coefficient of h⊗gh is t/2


def test_qt_t_zero_is_group_summand(h4):
    q0 = cat.qt_t(h4, 0)
    half = QQ.ratio(1, 2)
    assert q0.rr.data[0][0] == half
    assert q0.rr.data[1][1] == -half
    assert not q0.rr.data[2][2]


def test_char2_rejected():
    with pytest.raises(FieldError):
        cat.sweedler_h4(PrimeField(2))
    h5 = cat.sweedler_h4(PrimeField(5))
    assert h5.dim == 4


def test_cqt_c2_sign_validation(kc2):
    with pytest.raises(ValueError):
        cat.cqt_c2(kc2, 3)


def test_all_entries_verify_for_sampled_t():
    for t in (-2, -1, 0, 1, 2, 3):
        entries = cat.catalog_entries(QQ, t)
        names = {e.name for e in entries}
        assert {"h4", "sigma_t", "r_t", "theta_t", "qt_t",
                "unit_object", "end_regular"} <= names


def test_catalog_f5():
    entries = cat.catalog_entries(PrimeField(5), 1)
    assert any(e.name == "h4" for e in entries)


def test_deform_kc2_by_coboundary_lazy(kc2):
    from hopflab.twist import coboundary_from, deform, is_lazy
    mu = cat.one_cocycle_c2(kc2, 2)
    cob = coboundary_from(mu)
    assert is_lazy(cob)
    assert deform(cob, verify=False).mult == kc2.mult


def test_get_entry_unknown():
    with pytest.raises(KeyError):
        cat.get_entry("nope")
