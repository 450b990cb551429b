"""The braided Hopf algebra built from a CQT pair (H, R), its bimodule
actions and coinvariants, the generalized cotensor product, the unit object,
the isomorphism witnesses χ/φ/ψ/ξ, Galois-extension decisions and the
Miyashita-Ulbrich action on centralizers.

Subspace bases are stored as Matrix columns; span comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import HopfAlgebra, dual_hopf
from .linalg import (Matrix, Tensor, apply_rowmap, in_span, kernel_basis,
                     mat_mul, rank, row_space_echelon, same_span, solve)
from .report import CheckReport, VerificationError
from .twist import deform
from .yd import (YdAlgebra, YdMap, YdModule, is_yd_map, quantum_commutative,
                 sigma_algebra, sigma_module, verify_yd, verify_yd_algebra,
                 yd_tensor, _dense)


@dataclass
class Subspace:
    ambient_dim: int
    basis: Matrix          # columns are basis vectors

    @property
    def dim(self):
        return self.basis.cols

    def column_vectors(self):
        return [self.basis.column(j) for j in range(self.basis.cols)]

    def contains(self, vec):
        return in_span(self.basis.field, vec,
                       [list(v) for v in self.column_vectors()],
                       self.ambient_dim)

    def equals(self, other):
        return (self.ambient_dim == other.ambient_dim
                and same_span(self.basis.field,
                              [list(v) for v in self.column_vectors()],
                              [list(v) for v in other.column_vectors()],
                              self.ambient_dim))


@dataclass
class BraidedHopf:
    cqt: object                 # CqtStructure
    underlying: YdAlgebra       # (𝓗_R, ⋆) with adjoint coaction, ▷₁ action
    braided_antipode: Matrix    # S_R, row-as-image

    @property
    def host(self):
        return self.underlying.host

    def star_vec(self, u, v):
        return self.underlying.mul_vec(u, v)


@dataclass
class BimoduleActions:
    module: YdModule
    left_hr: Tensor             # h −▷ m
    right_hr: Tensor            # m ◁− h
    act2: Tensor                # h ▷₂ m


def act1_tensor(c, coaction):
    """h▷₁m = Σ m₀ R(h⊗m₁) from a coaction tensor."""
    h = c.host
    n = h.dim
    f = h.field
    m = coaction.shape[0]
    out = Tensor.zeros(f, (n, m, m))
    for i in range(n):
        ri = c.r.data[i]
        for p in range(m):
            for q in range(m):
                acc = f.zero
                for k in range(n):
                    x = coaction.data[(p * m + q) * n + k]
                    if x and ri[k]:
                        acc = acc + x * ri[k]
                out.data[(i * m + p) * m + q] = acc
    return out


def act2_tensor(c, coaction):
    """h▷₂m = Σ m₀ R(S(m₁)⊗h); the S⁻¹ form is asserted equal."""
    h = c.host
    n = h.dim
    f = h.field
    m = coaction.shape[0]
    out = Tensor.zeros(f, (n, m, m))
    for i in range(n):
        for p in range(m):
            for q in range(m):
                acc = f.zero
                acc2 = f.zero
                for k in range(n):
                    x = coaction.data[(p * m + q) * n + k]
                    if not x:
                        continue
                    s1 = f.zero
                    for t, cv in enumerate(h.S_basis(k)):
                        if cv and c.r.data[t][i]:
                            s1 = s1 + cv * c.r.data[t][i]
                    acc = acc + x * s1
                    s2 = f.zero
                    for t, cv in enumerate(h.Sinv_basis(i)):
                        if cv and c.r.data[k][t]:
                            s2 = s2 + cv * c.r.data[k][t]
                    acc2 = acc2 + x * s2
                if acc != acc2:
                    raise VerificationError(
                        "the two ▷₂ expressions disagree at (%d,%d,%d)"
                        % (i, p, q))
                out.data[(i * m + p) * m + q] = acc
    return out


def build_hr(c, verify=True):
    """𝓗_R: ⋆-product, braided antipode S_R, adjoint coaction and the
    R-induced action; the braided antipode identity is verified."""
    h = c.host
    n = h.dim
    f = h.field

    star = Tensor.zeros(f, (n, n, n))
    for i in range(n):
        di = h.delta(i)
        for j in range(n):
            acc = [f.zero] * n
            # h⋆l = Σ l₂h₂ R(S⁻¹(l₃)l₁ ⊗ h₁), h = e_i, l = e_j
            for (l1, l2, l3), w2 in h.copower(j, 3):
                u = h.mul_vec(h.Sinv_basis(l3), h.basis_vec(l1))
                for h1, h2, w1 in di:
                    scal = f.zero
                    for t, cv in enumerate(u):
                        if cv and c.r.data[t][h1]:
                            scal = scal + cv * c.r.data[t][h1]
                    if not scal:
                        continue
                    w = w1 * w2 * scal
                    for k, cm in h.mul_sparse(l2, h2):
                        acc[k] = acc[k] + w * cm
            base = (i * n + j) * n
            for k in range(n):
                star.data[base + k] = acc[k]

    ss = mat_mul(h.antipode, h.antipode)  # S² (apply S twice)
    s_r = Matrix.zeros(f, n, n)
    for i in range(n):
        acc = [f.zero] * n
        # S_R(h) = Σ S(h₂) R(S²(h₃)S(h₁) ⊗ h₄)
        for (a, b, c3, d), w in h.copower(i, 4):
            u = h.mul_vec(ss.data[c3], h.S_basis(a))
            scal = f.zero
            for t, cv in enumerate(u):
                if cv and c.r.data[t][d]:
                    scal = scal + cv * c.r.data[t][d]
            if not scal:
                continue
            for k, cv in enumerate(h.S_basis(b)):
                if cv:
                    acc[k] = acc[k] + w * scal * cv
        s_r.data[i] = acc

    coaction = Tensor.zeros(f, (n, n, n))
    for i in range(n):
        # adjoint: ρ(h) = Σ h₂ ⊗ S(h₁)h₃
        for (a, b, c3), w in h.copower(i, 3):
            u = h.mul_vec(h.S_basis(a), h.basis_vec(c3))
            for k, cv in enumerate(u):
                if cv:
                    coaction.data[(i * n + b) * n + k] = \
                        coaction.data[(i * n + b) * n + k] + w * cv

    action = act1_tensor(c, coaction)
    mod = YdModule(h, n, action, coaction)
    alg = YdAlgebra(mod, star, list(h.unit))
    bh = BraidedHopf(c, alg, s_r)
    if verify:
        verify_braided_hopf(bh).require("build_hr")
    return bh


def verify_braided_hopf(bh):
    rep = verify_yd_algebra(bh.underlying)
    h = bh.host
    n = h.dim
    f = h.field
    alg = bh.underlying
    bad = None
    for i in range(n):
        left = [f.zero] * n
        right = [f.zero] * n
        for a, b, c in h.delta(i):
            left_v = alg.mul_vec(bh.braided_antipode.data[a], h.basis_vec(b))
            for k, cv in enumerate(left_v):
                if cv:
                    left[k] = left[k] + c * cv
            right_v = alg.mul_vec(h.basis_vec(a), bh.braided_antipode.data[b])
            for k, cv in enumerate(right_v):
                if cv:
                    right[k] = right[k] + c * cv
        want = [h.counit[i] * x for x in h.unit]
        if left != want or right != want:
            bad = (i,)
            break
    rep.add("braided_antipode", bad is None, bad,
            "⋆∘(S_R⊗id)∘Δ = ηε = ⋆∘(id⊗S_R)∘Δ")
    return rep


def bimodule_actions(bh, mod, verify=True):
    """The 𝓗_R-bimodule structure of a YD module: −▷, ◁− and ▷₂."""
    h = bh.host
    c = bh.cqt
    if not mod.host.structures_equal(h):
        raise VerificationError("bimodule_actions: host mismatch")
    n = h.dim
    f = h.field
    m = mod.dim
    a2 = act2_tensor(c, mod.coaction)

    left = Tensor.zeros(f, (n, m, m))
    for i in range(n):
        for p in range(m):
            # h−▷m = Σ S⁻¹(h₂) ▷₁ (h₁·m)
            acc = [f.zero] * m
            for a, b, w in h.delta(i):
                u = mod.act_row(a, p)
                for q0, x in enumerate(u):
                    if not x:
                        continue
                    for q, k, c0 in mod.coact(q0):
                        scal = f.zero
                        for t, cv in enumerate(h.Sinv_basis(b)):
                            if cv and c.r.data[t][k]:
                                scal = scal + cv * c.r.data[t][k]
                        if scal:
                            acc[q] = acc[q] + w * x * c0 * scal
            base = (i * m + p) * m
            for q in range(m):
                left.data[base + q] = acc[q]

    # cross-check the expanded form Σ(h₂·m₀) R(S⁻¹(h₄)⊗h₃m₁S⁻¹(h₁))
    for i in range(n):
        for p in range(m):
            acc = [f.zero] * m
            for (a, b, c3, d), w in h.copower(i, 4):
                for q0, k, c0 in mod.coact(p):
                    u = h.mul_vec(h.mul_basis(c3, k), h.Sinv_basis(a))
                    scal = f.zero
                    for t, cv in enumerate(u):
                        if not cv:
                            continue
                        inner = f.zero
                        for t2, cv2 in enumerate(h.Sinv_basis(d)):
                            if cv2 and c.r.data[t2][t]:
                                inner = inner + cv2 * c.r.data[t2][t]
                        scal = scal + cv * inner
                    if not scal:
                        continue
                    arow = mod.act_row(b, q0)
                    for q in range(m):
                        if arow[q]:
                            acc[q] = acc[q] + w * c0 * scal * arow[q]
            base = (i * m + p) * m
            for q in range(m):
                if left.data[base + q] != acc[q]:
                    raise VerificationError(
                        "the two −▷ expressions disagree at (%d,%d,%d)"
                        % (i, p, q))

    right = Tensor.zeros(f, (n, m, m))
    for i in range(n):
        for p in range(m):
            # m◁−h = Σ S(h₁) ▷₂ (h₂·m)
            acc = [f.zero] * m
            for a, b, w in h.delta(i):
                u = mod.act_row(b, p)
                sa = h.S_basis(a)
                for q0, x in enumerate(u):
                    if not x:
                        continue
                    for t, cv in enumerate(sa):
                        if not cv:
                            continue
                        arow = a2.data
                        for q in range(m):
                            v = arow[(t * m + q0) * m + q]
                            if v:
                                acc[q] = acc[q] + w * x * cv * v
            base = (i * m + p) * m
            for q in range(m):
                right.data[base + q] = acc[q]

    # cross-check the expanded form Σ(h₃·m₀) R(h₄m₁S⁻¹(h₂)⊗h₁)
    for i in range(n):
        for p in range(m):
            acc = [f.zero] * m
            for (a, b, c3, d), w in h.copower(i, 4):
                for q0, k, c0 in mod.coact(p):
                    u = h.mul_vec(h.mul_basis(d, k), h.Sinv_basis(b))
                    scal = f.zero
                    for t, cv in enumerate(u):
                        if cv and c.r.data[t][a]:
                            scal = scal + cv * c.r.data[t][a]
                    if not scal:
                        continue
                    arow = mod.act_row(c3, q0)
                    for q in range(m):
                        if arow[q]:
                            acc[q] = acc[q] + w * c0 * scal * arow[q]
            base = (i * m + p) * m
            for q in range(m):
                if right.data[base + q] != acc[q]:
                    raise VerificationError(
                        "the two ◁− expressions disagree at (%d,%d,%d)"
                        % (i, p, q))

    b = BimoduleActions(mod, left, right, a2)
    if verify:
        verify_bimodule(bh, b).require("bimodule_actions")
    return b


def verify_bimodule(bh, b):
    """Left/right 𝓗_R-module axioms for ⋆ and their commutation."""
    rep = CheckReport()
    h = bh.host
    n = h.dim
    f = h.field
    mod = b.module
    m = mod.dim
    star = bh.underlying

    def act_t(tensor, i, vec):
        out = [f.zero] * m
        for p, x in enumerate(vec):
            if not x:
                continue
            base = (i * m + p) * m
            for q in range(m):
                v = tensor.data[base + q]
                if v:
                    out[q] = out[q] + x * v
        return out

    def act_vec_t(tensor, hvec, vec):
        out = [f.zero] * m
        for i, hx in enumerate(hvec):
            if not hx:
                continue
            u = act_t(tensor, i, vec)
            for q in range(m):
                if u[q]:
                    out[q] = out[q] + hx * u[q]
        return out

    bad = None
    for p in range(m):
        if act_vec_t(b.left_hr, h.unit, mod.basis_vec(p)) != mod.basis_vec(p):
            bad = (p,)
            break
    if bad is None:
        for i in range(n):
            for j in range(n):
                sij = star.mul_vec(h.basis_vec(i), h.basis_vec(j))
                for p in range(m):
                    lhs = act_vec_t(b.left_hr, sij, mod.basis_vec(p))
                    rhs = act_t(b.left_hr, i,
                                act_t(b.left_hr, j, mod.basis_vec(p)))
                    if lhs != rhs:
                        bad = (i, j, p)
                        break
                if bad:
                    break
            if bad:
                break
    rep.add("left_action_for_star", bad is None, bad,
            "(h⋆l)−▷m = h−▷(l−▷m)")

    bad = None
    for p in range(m):
        if act_vec_t(b.right_hr, h.unit, mod.basis_vec(p)) != mod.basis_vec(p):
            bad = (p,)
            break
    if bad is None:
        for i in range(n):
            for j in range(n):
                sij = star.mul_vec(h.basis_vec(i), h.basis_vec(j))
                for p in range(m):
                    lhs = act_vec_t(b.right_hr, sij, mod.basis_vec(p))
                    rhs = act_t(b.right_hr, j,
                                act_t(b.right_hr, i, mod.basis_vec(p)))
                    if lhs != rhs:
                        bad = (i, j, p)
                        break
                if bad:
                    break
            if bad:
                break
    rep.add("right_action_for_star", bad is None, bad,
            "m◁−(h⋆l) = (m◁−h)◁−l")

    bad = None
    for i in range(n):
        for j in range(n):
            for p in range(m):
                lhs = act_t(b.right_hr, j,
                            act_t(b.left_hr, i, mod.basis_vec(p)))
                rhs = act_t(b.left_hr, i,
                            act_t(b.right_hr, j, mod.basis_vec(p)))
                if lhs != rhs:
                    bad = (i, j, p)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("bimodule_commutation", bad is None, bad,
            "(h−▷m)◁−l = h−▷(m◁−l)")
    return rep


def _stacked_kernel(f, rows, dim):
    if not rows:
        return Matrix.identity(f, dim)
    return kernel_basis(Matrix(f, len(rows), dim, rows))


def coinvariants(bh, b, side, cross_check=True):
    """M_◇ (side="right", from −▷) or _◇M (side="left", from ◁−).

    Cross-checked against the action-equality characterization
    (h·m = h▷₁m for M_◇, h·m = h▷₂m for _◇M).
    """
    mod = b.module
    h = mod.host
    f = h.field
    n = h.dim
    m = mod.dim
    rows = []
    tensor = b.left_hr if side == "right" else b.right_hr
    for i in range(n):
        for q in range(m):
            row = [tensor.data[(i * m + p) * m + q] for p in range(m)]
            if h.counit[i]:
                row = list(row)
                row[q] = row[q] - h.counit[i]
            rows.append(row)
    ker = _stacked_kernel(f, rows, m)
    sub = Subspace(m, ker)
    if cross_check:
        cmp_tensor = (act1_tensor(bh.cqt, mod.coaction) if side == "right"
                      else b.act2)
        rows2 = []
        for i in range(n):
            for q in range(m):
                rows2.append([mod.action.data[(i * m + p) * m + q]
                              - cmp_tensor.data[(i * m + p) * m + q]
                              for p in range(m)])
        ker2 = _stacked_kernel(f, rows2, m)
        if not sub.equals(Subspace(m, ker2)):
            raise VerificationError(
                "Lemma-3.1 characterization disagrees (side=%s)" % side)
    return sub


def verify_sigma_coinvariants(s, cqt, mod, host_s=None, cqt_s=None):
    """Coinvariant subspaces agree before and after the deformation."""
    from .quasitriangular import deform_cqt
    rep = CheckReport()
    bh = build_hr(cqt, verify=False)
    b = bimodule_actions(bh, mod, verify=False)
    if host_s is None:
        host_s = deform(s, verify=False)
    if cqt_s is None:
        cqt_s = deform_cqt(cqt, s, verify=False)
    smod = sigma_module(s, mod, host_s, verify=False)
    bh_s = build_hr(cqt_s, verify=False)
    b_s = bimodule_actions(bh_s, smod, verify=False)
    for side in ("right", "left"):
        sub = coinvariants(bh, b, side)
        sub_s = coinvariants(bh_s, b_s, side)
        rep.add("coinvariants_%s_stable" % side, sub.equals(sub_s), None,
                "dim %d vs %d" % (sub.dim, sub_s.dim))
    return rep


# -- the generalized cotensor product ----------------------------------------

def wedge(cqt, ma, mb, verify=True):
    """M∧N ⊆ M⊗N with its induced YD structure.

    Membership: Σ h₁·mᵢ ⊗ h₂▷₁nᵢ = Σ h₁▷₂mᵢ ⊗ h₂·nᵢ for all h.
    """
    h = cqt.host
    f = h.field
    n = h.dim
    da, db = ma.dim, mb.dim
    dim = da * db
    a1_b = act1_tensor(cqt, mb.coaction)
    a2_a = act2_tensor(cqt, ma.coaction)

    rows = []
    for i in range(n):
        ops = {}
        for a, b, c in h.delta(i):
            for p in range(da):
                u1 = ma.act_row(a, p)
                u2 = [a2_a.data[(a * da + p) * da + t] for t in range(da)]
                for q in range(db):
                    v1 = [a1_b.data[(b * db + q) * db + t] for t in range(db)]
                    v2 = mb.act_row(b, q)
                    src = p * db + q
                    for p1 in range(da):
                        x1, x2 = u1[p1], u2[p1]
                        for q1 in range(db):
                            val = f.zero
                            if x1 and v1[q1]:
                                val = val + x1 * v1[q1]
                            if x2 and v2[q1]:
                                val = val - x2 * v2[q1]
                            if val:
                                key = (p1 * db + q1, src)
                                ops[key] = ops.get(key, f.zero) + c * val
        for out in range(dim):
            row = [f.zero] * dim
            touched = False
            for (o, src), val in ops.items():
                if o == out:
                    row[src] = row[src] + val
                    touched = True
            if touched:
                rows.append(row)
    ker = _stacked_kernel(f, rows, dim)
    sub = Subspace(dim, ker)

    wd = sub.dim
    basis_vecs = sub.column_vectors()

    tens = yd_tensor(ma, mb)

    def express(vec):
        rhs = Matrix(f, dim, 1, [[x] for x in vec])
        sol = solve(sub.basis, rhs)
        if sol is None:
            raise VerificationError("wedge is not closed under the structure")
        return [sol.data[j][0] for j in range(wd)]

    action = Tensor.zeros(f, (n, wd, wd))
    for i in range(n):
        for j, w in enumerate(basis_vecs):
            # form A: Σ h₁·m ⊗ h₂▷₁n
            amb = [f.zero] * dim
            amb_b = [f.zero] * dim
            for a, b, c in h.delta(i):
                for src, x in enumerate(w):
                    if not x:
                        continue
                    p, q = divmod(src, db)
                    u1 = ma.act_row(a, p)
                    for p1 in range(da):
                        if not u1[p1]:
                            continue
                        w1 = c * x * u1[p1]
                        for q1 in range(db):
                            v = a1_b.data[(b * db + q) * db + q1]
                            if v:
                                amb[p1 * db + q1] = amb[p1 * db + q1] + w1 * v
                    u2 = a2_a.data
                    for p1 in range(da):
                        x2 = u2[(a * da + p) * da + p1]
                        if not x2:
                            continue
                        w2 = c * x * x2
                        v2 = mb.act_row(b, q)
                        for q1 in range(db):
                            if v2[q1]:
                                amb_b[p1 * db + q1] = amb_b[p1 * db + q1] \
                                    + w2 * v2[q1]
            if amb != amb_b:
                raise VerificationError(
                    "the two wedge actions disagree at (%d, %d)" % (i, j))
            coords = express(amb)
            for t in range(wd):
                action.data[(i * wd + j) * wd + t] = coords[t]

    coaction = Tensor.zeros(f, (wd, wd, n))
    for j, w in enumerate(basis_vecs):
        acc = {}
        for src, x in enumerate(w):
            if not x:
                continue
            for q2, k, c in tens.coact(src):
                acc[(q2, k)] = acc.get((q2, k), f.zero) + x * c
        per_k = {}
        for (q2, k), val in acc.items():
            per_k.setdefault(k, [f.zero] * dim)[q2] = val
        for k, amb in per_k.items():
            coords = express(amb)
            for t in range(wd):
                coaction.data[(j * wd + t) * n + k] = coords[t]

    out = YdModule(h, wd, action, coaction)
    if verify:
        verify_yd(out).require("wedge module")
    return sub, out


def verify_sigma_wedge(s, cqt, ma, mb, alga=None, algb=None,
                       host_s=None, cqt_s=None):
    """Lemma 3.4 span equality with η⁻¹ intertwining; with algebras,
    additionally the Prop-3.5 algebra-map property of η⁻¹."""
    from .quasitriangular import deform_cqt
    from .yd import eta, braided_product
    rep = CheckReport()
    h = cqt.host
    f = h.field
    if host_s is None:
        host_s = deform(s, verify=False)
    if cqt_s is None:
        cqt_s = deform_cqt(cqt, s, verify=False)
    sub, wmod = wedge(cqt, ma, mb, verify=False)
    sa = sigma_module(s, ma, host_s, verify=False)
    sb = sigma_module(s, mb, host_s, verify=False)
    sub_s, wmod_s = wedge(cqt_s, sa, sb, verify=False)

    eta_map, eta_inv = eta(s, ma, mb, host_s)
    da, db = ma.dim, mb.dim
    dim = da * db
    image = [apply_rowmap(v, eta_inv) for v in sub.column_vectors()]
    rep.add("wedge_span_stable",
            same_span(f, image, [list(v) for v in sub_s.column_vectors()],
                      dim),
            None, "dim %d vs %d" % (sub.dim, sub_s.dim))

    # η⁻¹ restricted intertwines σ̲(M∧N) with σ̲M∧σ̲N
    swmod = sigma_module(s, wmod, host_s, verify=False)
    wd = sub.dim
    restr = Matrix.zeros(f, wd, sub_s.dim)
    ok = True
    for j in range(wd):
        amb = apply_rowmap(sub.column_vectors()[j], eta_inv)
        sol = solve(sub_s.basis, Matrix(f, dim, 1, [[x] for x in amb]))
        if sol is None:
            ok = False
            break
        for t in range(sub_s.dim):
            restr.data[j][t] = sol.data[t][0]
    rep.add("eta_inv_restricts", ok)
    if ok:
        rep.merge(is_yd_map(YdMap(swmod, wmod_s, restr)), prefix="wedge_")

    if alga is not None and algb is not None:
        prod = braided_product(alga, algb, cqt=cqt, verify=False)
        sprod = sigma_algebra(s, prod, host_s, verify=False)
        salga = sigma_algebra(s, alga, host_s, verify=False)
        salgb = sigma_algebra(s, algb, host_s, verify=False)
        prod_s = braided_product(salga, salgb, cqt=cqt_s, verify=False)
        bad = None
        for u in range(dim):
            eu = apply_rowmap(prod.module.basis_vec(u), eta_inv)
            for v in range(dim):
                ev = apply_rowmap(prod.module.basis_vec(v), eta_inv)
                lhs = apply_rowmap(_dense(sprod, u, v), eta_inv)
                rhs = prod_s.mul_vec(eu, ev)
                if lhs != rhs:
                    bad = (u, v)
                    break
            if bad:
                break
        rep.add("eta_inv_algebra_map", bad is None, bad,
                "η⁻¹: σ̲(A#_RB) → σ̲A#_{R^σ}σ̲B")
    return rep


def wedge_algebra(cqt, alga, algb, verify=True):
    """A∧B as a subalgebra of A#_RB, carrying the wedge YD structure.

    The wedge subspace must be closed under the braided product and contain
    1#1; both are verified by solving against the wedge basis.
    """
    from .yd import braided_product
    h = cqt.host
    f = h.field
    sub, wmod = wedge(cqt, alga.module, algb.module, verify=False)
    prod = braided_product(alga, algb, cqt=cqt, verify=False)
    wd = sub.dim
    dim = sub.ambient_dim

    def express(vec):
        sol = solve(sub.basis, Matrix(f, dim, 1, [[x] for x in vec]))
        if sol is None:
            raise VerificationError("wedge is not closed as an algebra")
        return [sol.data[j][0] for j in range(wd)]

    basis_vecs = sub.column_vectors()
    mult = Tensor.zeros(f, (wd, wd, wd))
    for i, u in enumerate(basis_vecs):
        for j, v in enumerate(basis_vecs):
            coords = express(prod.mul_vec(u, v))
            for t in range(wd):
                mult.data[(i * wd + j) * wd + t] = coords[t]
    unit_coords = express(list(prod.unit))
    out = YdAlgebra(wmod, mult, unit_coords)
    if verify:
        verify_yd_algebra(out).require("wedge_algebra")
    return out


# -- the unit object ----------------------------------------------------------

def unit_object(host, verify=True):
    """I = H* with h·p = Σ p₁⟨p₂,h⟩ and the coaction dual to
    h*·p = Σ h*₂ p S⁻¹(h*₁)."""
    hd = dual_hopf(host)
    n = host.dim
    f = host.field
    action = Tensor.zeros(f, (n, n, n))
    for i in range(n):
        for j in range(n):
            # e_i·δ_j = Σ_a mult[a,i,j] δ_a
            for a in range(n):
                action.data[(i * n + j) * n + a] = \
                    host.mult.data[(a * n + i) * n + j]
    coaction = Tensor.zeros(f, (n, n, n))
    for i in range(n):
        # left H*-action of δ_i dualized through the basis pairing
        for j in range(n):
            acc = [f.zero] * n
            for a, b, c in hd.delta(i):
                u = hd.mul_vec(hd.mul_basis(b, j), hd.Sinv_basis(a))
                for q, cv in enumerate(u):
                    if cv:
                        acc[q] = acc[q] + c * cv
            for q in range(n):
                coaction.data[(j * n + q) * n + i] = acc[q]
    mod = YdModule(host, n, action, coaction)
    alg = YdAlgebra(mod, Tensor(f, (n, n, n), list(hd.mult.data)),
                    list(hd.unit))
    if verify:
        verify_yd_algebra(alg).require("unit_object")
    return alg


# -- χ, φ, ψ, ξ ---------------------------------------------------------------

def chi_maps(s):
    """χ, χ⁻¹ and χ* = transpose pairing; χχ⁻¹ = id is verified."""
    h = s.host
    n = h.dim
    f = h.field
    chi = Matrix.zeros(f, n, n)
    for i in range(n):
        acc = [f.zero] * n
        for (a, b, c, d), w in h.copower(i, 4):
            u = h.mul_vec(h.Sinv_basis(c), h.basis_vec(a))
            scal = f.zero
            for t, cv in enumerate(u):
                if cv and s.sigma_inv.data[d][t]:
                    scal = scal + cv * s.sigma_inv.data[d][t]
            if scal:
                acc[b] = acc[b] + w * scal
        chi.data[i] = acc
    chi_inv = Matrix.zeros(f, n, n)
    for i in range(n):
        acc = [f.zero] * n
        for (a, b, c, d, e), w in h.copower(i, 5):
            s1 = f.zero
            for t, cv in enumerate(h.Sinv_basis(e)):
                if cv and s.sigma_inv.data[t][a]:
                    s1 = s1 + cv * s.sigma_inv.data[t][a]
            if not s1:
                continue
            s2 = f.zero
            for t, cv in enumerate(h.Sinv_basis(d)):
                if cv and s.sigma.data[t][c]:
                    s2 = s2 + cv * s.sigma.data[t][c]
            if s2:
                acc[b] = acc[b] + w * s1 * s2
        chi_inv.data[i] = acc
    ident = Matrix.identity(f, n)
    if mat_mul(chi, chi_inv) != ident or mat_mul(chi_inv, chi) != ident:
        raise VerificationError("χ and χ⁻¹ are not mutually inverse")
    return chi, chi_inv, chi.transpose()


def verify_unit_deformation(s, host_s=None):
    """Lemma 3.7: χ* is an algebra, module and comodule isomorphism
    σ̲(I) → I^σ."""
    rep = CheckReport()
    h = s.host
    f = h.field
    n = h.dim
    if host_s is None:
        host_s = deform(s, verify=False)
    i_obj = unit_object(h, verify=False)
    si = sigma_algebra(s, i_obj, host_s, verify=False)
    i_s = unit_object(host_s, verify=False)
    chi, chi_inv, chi_star = chi_maps(s)

    rep.add("chi_star_invertible", rank(chi_star) == n)
    rep.merge(is_yd_map(YdMap(si.module, i_s.module, chi_star)),
              prefix="chi_star_")

    bad = None
    for p in range(n):
        for q in range(n):
            lhs = apply_rowmap(_dense(si, p, q), chi_star)
            rhs = i_s.mul_vec(chi_star.data[p], chi_star.data[q])
            if lhs != rhs:
                bad = (p, q)
                break
        if bad:
            break
    rep.add("chi_star_algebra_map", bad is None, bad)
    rep.add("chi_star_unital",
            apply_rowmap(si.unit, chi_star) == i_s.unit)
    return rep


def phi_psi_xi(s, alg):
    """The Lemma 3.8/3.9/3.13 isomorphism witnesses with their displayed
    inverses; all round trips are asserted to be identities."""
    h = s.host
    n = h.dim
    f = h.field
    mod = alg.module
    m = mod.dim

    def build_phi(mat2):
        out = Matrix.zeros(f, m * n, m * n)
        for p in range(m):
            for j in range(n):
                row = out.data[p * n + j]
                for k in range(n):
                    for (k1, k2, k3), w in h.copower(k, 3):
                        if k2 != j:
                            continue
                        u = h.mul_vec(h.Sinv_basis(k3), h.basis_vec(k1))
                        for q, k4, c0 in mod.coact(p):
                            scal = f.zero
                            for t, cv in enumerate(u):
                                if cv and mat2.data[k4][t]:
                                    scal = scal + cv * mat2.data[k4][t]
                            if scal:
                                row[q * n + k] = row[q * n + k] \
                                    + w * c0 * scal
        return out

    phi = build_phi(s.sigma)
    phi_inv = build_phi(s.sigma_inv)

    def build_psi(mat2):
        out = Matrix.zeros(f, n * m, n * m)
        for j in range(n):
            for p in range(m):
                row = out.data[j * m + p]
                for k in range(n):
                    for (k1, k2, k3), w in h.copower(k, 3):
                        if k2 != j:
                            continue
                        u = h.mul_vec(h.Sinv_basis(k3), h.basis_vec(k1))
                        for q, k4, c0 in mod.coact(p):
                            scal = f.zero
                            for t, cv in enumerate(u):
                                if cv and mat2.data[t][k4]:
                                    scal = scal + cv * mat2.data[t][k4]
                            if scal:
                                row[k * m + q] = row[k * m + q] \
                                    + w * c0 * scal
        return out

    psi = build_psi(s.sigma)
    psi_inv = build_psi(s.sigma_inv)

    xi = Matrix.zeros(f, m * n, m * n)
    xi_inv = Matrix.zeros(f, m * n, m * n)
    for p in range(m):
        for i in range(n):
            row = xi.data[p * n + i]
            for (a, b, c, d), w in h.copower(i, 4):
                s1 = f.zero
                for t, cv in enumerate(h.Sinv_basis(b)):
                    if cv and s.sigma.data[t][a]:
                        s1 = s1 + cv * s.sigma.data[t][a]
                if not s1:
                    continue
                for q, k1, c0 in mod.coact(p):
                    s2 = f.zero
                    for t, cv in enumerate(h.Sinv_basis(c)):
                        if cv and s.sigma_inv.data[t][k1]:
                            s2 = s2 + cv * s.sigma_inv.data[t][k1]
                    if s2:
                        row[q * n + d] = row[q * n + d] + w * c0 * s1 * s2
            row2 = xi_inv.data[p * n + i]
            for (a, b, c), w in ((idx, w) for idx, w in h.copower(i, 3)):
                for q, k1, c0 in mod.coact(p):
                    u = h.mul_vec(h.Sinv_basis(a), h.basis_vec(k1))
                    scal = f.zero
                    for t, cv in enumerate(u):
                        if cv and s.sigma_inv.data[b][t]:
                            scal = scal + cv * s.sigma_inv.data[b][t]
                    if scal:
                        row2[q * n + c] = row2[q * n + c] + w * c0 * scal

    for name, a, b in (("phi", phi, phi_inv), ("psi", psi, psi_inv),
                       ("xi", xi, xi_inv)):
        ident = Matrix.identity(f, a.rows)
        if mat_mul(a, b) != ident or mat_mul(b, a) != ident:
            raise VerificationError("%s round trip failed" % name)
    return phi, phi_inv, psi, psi_inv, xi, xi_inv


# -- Galois decisions ---------------------------------------------------------

def _relations(alg, sub_basis_vecs):
    """Generators (a·x)⊗b − a⊗(x·b) of the middle-subalgebra relations."""
    f = alg.host.field
    m = alg.dim
    rels = []
    for x in sub_basis_vecs:
        for p in range(m):
            ax = alg.mul_vec(alg.module.basis_vec(p), x)
            for r in range(m):
                xb = alg.mul_vec(x, alg.module.basis_vec(r))
                vec = [f.zero] * (m * m)
                for t, v in enumerate(ax):
                    if v:
                        vec[t * m + r] = vec[t * m + r] + v
                for t, v in enumerate(xb):
                    if v:
                        vec[p * m + t] = vec[p * m + t] - v
                if any(vec):
                    rels.append(vec)
    return rels


def _beta_quotient_bijective(f, beta, rels, rep, tag):
    """β̄ on A⊗_{A₀}A is bijective iff β is onto and ker β = relations."""
    target = beta.cols
    m2 = beta.rows
    rk = rank(beta)
    onto = rk == target
    rep.add(tag + "_surjective", onto, None,
            "rank %d of %d" % (rk, target))
    bad = None
    for idx, rvec in enumerate(rels):
        img = [f.zero] * target
        for src, v in enumerate(rvec):
            if not v:
                continue
            row = beta.data[src]
            for t in range(target):
                if row[t]:
                    img[t] = img[t] + v * row[t]
        if any(img):
            bad = (idx,)
            break
    rep.add(tag + "_relations_in_kernel", bad is None, bad)
    rel_rank = rank(Matrix(f, len(rels), m2, rels)) if rels else 0
    ker_dim = m2 - rk
    rep.add(tag + "_kernel_is_relations", rel_rank == ker_dim, None,
            "relation rank %d vs kernel dim %d" % (rel_rank, ker_dim))
    return onto and bad is None and rel_rank == ker_dim


def galois_maps(bh, b, alg):
    """Right/left 𝓗_R^*-Galois decisions for A, plus the bigalois verdict."""
    rep = CheckReport()
    h = bh.host
    f = h.field
    n = h.dim
    m = alg.dim
    mod = alg.module

    sub_r = coinvariants(bh, b, "right")
    sub_l = coinvariants(bh, b, "left")
    rep.add("coinvariants_computed", True, None,
            "dim right %d, left %d" % (sub_r.dim, sub_l.dim))

    beta_r = Matrix.zeros(f, m * m, m * n)
    for p in range(m):
        for r in range(m):
            row = beta_r.data[p * m + r]
            for i in range(n):
                for q in range(m):
                    c0 = b.left_hr.data[(i * m + p) * m + q]
                    if not c0:
                        continue
                    for y, cm in alg.mul_sparse(q, r):
                        row[y * n + i] = row[y * n + i] + c0 * cm
    rels_r = _relations(alg, sub_r.column_vectors())
    right_ok = _beta_quotient_bijective(f, beta_r, rels_r, rep, "beta_r")

    beta_l = Matrix.zeros(f, m * m, n * m)
    for r in range(m):
        for p in range(m):
            row = beta_l.data[r * m + p]
            for i in range(n):
                for q in range(m):
                    c0 = b.right_hr.data[(i * m + p) * m + q]
                    if not c0:
                        continue
                    for y, cm in alg.mul_sparse(r, q):
                        row[i * m + y] = row[i * m + y] + c0 * cm
    rels_l = _relations(alg, sub_l.column_vectors())
    left_ok = _beta_quotient_bijective(f, beta_l, rels_l, rep, "beta_l")

    triv_r = sub_r.dim == 1 and sub_r.contains(alg.unit)
    triv_l = sub_l.dim == 1 and sub_l.contains(alg.unit)
    rep.add("right_galois", right_ok)
    rep.add("left_galois", left_ok)
    rep.add("bigalois_object", right_ok and left_ok and triv_r and triv_l,
            None, "coinvariants trivial: right %r, left %r"
            % (triv_r, triv_l))
    return rep


def comodule_coinvariants(alg):
    """A₀ = {a : ρ(a) = a⊗1} from the coaction alone."""
    mod = alg.module
    h = alg.host
    f = h.field
    n = h.dim
    m = alg.dim
    rows = []
    for q in range(m):
        for k in range(n):
            row = [mod.coaction.data[(p * m + q) * n + k] for p in range(m)]
            row = list(row)
            if h.unit[k]:
                row[q] = row[q] - h.unit[k]
            rows.append(row)
    return Subspace(m, _stacked_kernel(f, rows, m))


def comodule_beta(alg):
    """β(a⊗b) = Σ ab₀ ⊗ b₁ on A⊗A → A⊗H."""
    mod = alg.module
    h = alg.host
    f = h.field
    n = h.dim
    m = alg.dim
    beta = Matrix.zeros(f, m * m, m * n)
    for p in range(m):
        for r in range(m):
            row = beta.data[p * m + r]
            for q, k, c in mod.coact(r):
                for y, cm in alg.mul_sparse(p, q):
                    row[y * n + k] = row[y * n + k] + c * cm
    return beta


def comodule_galois(alg):
    """H^op-comodule-algebra Galois decision (the action is ignored)."""
    rep = CheckReport()
    f = alg.host.field
    sub0 = comodule_coinvariants(alg)
    rep.add("coinvariants_computed", True, None, "dim %d" % sub0.dim)
    beta = comodule_beta(alg)
    rels = _relations(alg, sub0.column_vectors())
    ok = _beta_quotient_bijective(f, beta, rels, rep, "beta")
    rep.add("galois", ok)
    return rep


def mu_action_and_pi(alg, verify=True):
    """π(A) = C_A(A₀) with the Miyashita-Ulbrich action; requires A/A₀ to
    be Galois.  Returns (π(A) as a YdAlgebra, report)."""
    rep = CheckReport()
    mod = alg.module
    h = alg.host
    f = h.field
    n = h.dim
    m = alg.dim

    gal = comodule_galois(alg)
    rep.merge(gal, prefix="galois_")
    if not gal.ok:
        raise VerificationError("mu_action_and_pi requires a Galois input")

    sub0 = comodule_coinvariants(alg)
    x_vecs = sub0.column_vectors()

    rows = []
    for x in x_vecs:
        for comp in range(m):
            row = [f.zero] * m
            for p in range(m):
                bp = alg.module.basis_vec(p)
                yx = alg.mul_vec(bp, x)
                xy = alg.mul_vec(x, bp)
                row[p] = yx[comp] - xy[comp]
            rows.append(row)
    pi_sub = Subspace(m, _stacked_kernel(f, rows, m))
    rep.add("centralizer_computed", True, None, "dim %d" % pi_sub.dim)

    # β is stored row-as-image; solve and kernel_basis read columns.
    beta = comodule_beta(alg).transpose()
    rhs = Matrix.zeros(f, m * n, n)
    for k in range(n):
        for y, u in enumerate(alg.unit):
            if u:
                rhs.data[y * n + k][k] = u
    part = solve(beta, rhs)
    if part is None:
        raise VerificationError("β-preimages of 1⊗h do not exist")
    ker = kernel_basis(beta)

    pi_vecs = pi_sub.column_vectors()
    pd = pi_sub.dim

    def triple_table(avec):
        """T[p][r] = v_p · a · v_r as dense vectors."""
        out = []
        for p in range(m):
            va = alg.mul_vec(alg.module.basis_vec(p), avec)
            row = []
            for r in range(m):
                row.append(alg.mul_vec(va, alg.module.basis_vec(r)))
            out.append(row)
        return out

    tables = [triple_table(a) for a in pi_vecs]

    def express_pi(vec):
        sol = solve(pi_sub.basis, Matrix(f, m, 1, [[x] for x in vec]))
        if sol is None:
            return None
        return [sol.data[j][0] for j in range(pd)]

    bad = None
    for j in range(ker.cols):
        kvec = ker.column(j)
        for a_idx in range(pd):
            acc = [f.zero] * m
            tab = tables[a_idx]
            for src, v in enumerate(kvec):
                if not v:
                    continue
                p, r = divmod(src, m)
                w = tab[p][r]
                for t in range(m):
                    if w[t]:
                        acc[t] = acc[t] + v * w[t]
            if any(acc):
                bad = (j, a_idx)
                break
        if bad:
            break
    rep.add("mu_action_well_defined", bad is None, bad,
            "preimage perturbations act by zero on π(A)")

    action = Tensor.zeros(f, (n, pd, pd))
    closed = None
    for k in range(n):
        for a_idx in range(pd):
            acc = [f.zero] * m
            tab = tables[a_idx]
            for src in range(m * m):
                v = part.data[src][k]
                if not v:
                    continue
                p, r = divmod(src, m)
                w = tab[p][r]
                for t in range(m):
                    if w[t]:
                        acc[t] = acc[t] + v * w[t]
            coords = express_pi(acc)
            if coords is None:
                closed = (k, a_idx)
                break
            for t in range(pd):
                action.data[(k * pd + a_idx) * pd + t] = coords[t]
        if closed:
            break
    rep.add("mu_action_lands_in_pi", closed is None, closed)
    if closed:
        raise VerificationError("MU action leaves the centralizer")

    coaction = Tensor.zeros(f, (pd, pd, n))
    closed = None
    for a_idx, avec in enumerate(pi_vecs):
        per_k = {}
        for p, x in enumerate(avec):
            if not x:
                continue
            for q, k, c in mod.coact(p):
                key = k
                vec = per_k.setdefault(key, [f.zero] * m)
                vec[q] = vec[q] + x * c
        for k, amb in per_k.items():
            coords = express_pi(amb)
            if coords is None:
                closed = (a_idx, k)
                break
            for t in range(pd):
                coaction.data[(a_idx * pd + t) * n + k] = coords[t]
        if closed:
            break
    rep.add("pi_subcomodule", closed is None, closed)
    if closed:
        raise VerificationError("π(A) is not a subcomodule")

    mult = Tensor.zeros(f, (pd, pd, pd))
    closed = None
    for a_idx, avec in enumerate(pi_vecs):
        for b_idx, bvec in enumerate(pi_vecs):
            prod = alg.mul_vec(avec, bvec)
            coords = express_pi(prod)
            if coords is None:
                closed = (a_idx, b_idx)
                break
            for t in range(pd):
                mult.data[(a_idx * pd + b_idx) * pd + t] = coords[t]
        if closed:
            break
    rep.add("pi_subalgebra", closed is None, closed)
    if closed:
        raise VerificationError("π(A) is not a subalgebra")

    unit_coords = express_pi(list(alg.unit))
    if unit_coords is None:
        raise VerificationError("unit is not in π(A)")

    pi_alg = YdAlgebra(YdModule(h, pd, action, coaction), mult, unit_coords)
    if verify:
        va = verify_yd_algebra(pi_alg)
        rep.merge(va, prefix="pi_")
        rep.add("pi_quantum_commutative", quantum_commutative(pi_alg))
    return pi_alg, rep
