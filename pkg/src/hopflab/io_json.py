"""JSON (de)serialization for every structure kind.

Formats (scalars are strings "a" or "a/b"; omitted entries are zero):

hopf:         {"field": "Q"|"Fp:<p>", "dim": n, "basis": [names],
               "mult": [[i,j,k,"c"], ...], "comult": [[i,j,k,"c"], ...],
               "unit": ["c", ...], "counit": ["c", ...],
               "antipode": [["c", ...], ...], "antipode_inv": optional}
cocycle / dual_cocycle / cqt / qt:
              {"kind": ..., "host": <name>, "entries": [[i,j,"c"], ...],
               "inverse": optional same shape}
one_cocycle:  {"kind": "one_cocycle", "host": <name>,
               "entries": [[i,"c"], ...], "inverse": optional}
yd_module / yd_algebra:
              {"kind": ..., "host": <name>, "dim": m,
               "action": [[i,p,q,"c"], ...], "coaction": [[p,q,k,"c"], ...],
               "mult": [[p,q,r,"c"], ...], "unit": ["c", ...]}

The antipode matrix rows are images: antipode[i][j] is the coefficient of
e_j in S(e_i).
"""

from __future__ import annotations

import json

from .fields import field_from_spec
from .hopf import HopfAlgebra, verify_hopf_axioms
from .linalg import Matrix, Tensor, check_dim, mat_inverse, mat_mul
from .report import VerificationError


class InputError(ValueError):
    """Malformed or inconsistent input file (CLI exit code 2)."""


def _parse_scalar(field, v):
    try:
        return field.parse(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("bad scalar %r: %s" % (v, exc))


def _sparse_to_tensor(field, shape, triples, what):
    t = Tensor.zeros(field, shape)
    strides = t.strides()
    for entry in triples:
        if len(entry) != len(shape) + 1:
            raise InputError("%s entry %r has wrong arity" % (what, entry))
        *idx, val = entry
        for pos, (i, s) in enumerate(zip(idx, shape)):
            if not isinstance(i, int) or not 0 <= i < s:
                raise InputError("%s index %r out of range" % (what, entry))
        flat = sum(i * s for i, s in zip(idx, strides))
        t.data[flat] = t.data[flat] + _parse_scalar(field, val)
    return t


def _tensor_to_sparse(field, t):
    out = []
    strides = t.strides()

    def unrank(flat):
        idx = []
        for s in strides:
            idx.append(flat // s)
            flat %= s
        return idx

    for flat, v in enumerate(t.data):
        if v:
            out.append(unrank(flat) + [field.fmt(v)])
    return out


def _matrix_sparse(field, m):
    out = []
    for i in range(m.rows):
        for j in range(m.cols):
            if m.data[i][j]:
                out.append([i, j, field.fmt(m.data[i][j])])
    return out


def _sparse_to_matrix(field, rows, cols, entries, what):
    m = Matrix.zeros(field, rows, cols)
    for entry in entries:
        if len(entry) != 3:
            raise InputError("%s entry %r has wrong arity" % (what, entry))
        i, j, val = entry
        if not (isinstance(i, int) and isinstance(j, int)
                and 0 <= i < rows and 0 <= j < cols):
            raise InputError("%s index %r out of range" % (what, entry))
        m.data[i][j] = m.data[i][j] + _parse_scalar(field, val)
    return m


def _vector(field, vals, n, what):
    if len(vals) != n:
        raise InputError("%s has length %d, expected %d"
                         % (what, len(vals), n))
    return [_parse_scalar(field, v) for v in vals]


def hopf_to_json(h):
    f = h.field
    return {
        "kind": "hopf",
        "name": h.name,
        "field": f.spec(),
        "dim": h.dim,
        "basis": list(h.basis_names),
        "mult": _tensor_to_sparse(f, h.mult),
        "comult": _tensor_to_sparse(f, h.comult),
        "unit": [f.fmt(x) for x in h.unit],
        "counit": [f.fmt(x) for x in h.counit],
        "antipode": [[f.fmt(x) for x in row] for row in h.antipode.data],
        "antipode_inv": [[f.fmt(x) for x in row]
                         for row in h.antipode_inv.data],
    }


def hopf_from_json(doc, verify=True, strict=True):
    """Load a Hopf algebra document.

    strict=True rejects non-invertible or inconsistent antipode data at
    load time; strict=False builds the structure anyway so that the axiom
    suite can fail with a witness (used by `validate`).
    """
    try:
        field = field_from_spec(doc["field"])
        n = doc["dim"]
    except KeyError as exc:
        raise InputError("missing key %s" % exc)
    if not isinstance(n, int) or n < 1:
        raise InputError("bad dimension %r" % (n,))
    check_dim(n)
    names = doc.get("basis") or ["e%d" % i for i in range(n)]
    mult = _sparse_to_tensor(field, (n, n, n), doc.get("mult", []), "mult")
    comult = _sparse_to_tensor(field, (n, n, n), doc.get("comult", []),
                               "comult")
    unit = _vector(field, doc["unit"], n, "unit")
    counit = _vector(field, doc["counit"], n, "counit")
    anti = doc["antipode"]
    if len(anti) != n or any(len(r) != n for r in anti):
        raise InputError("antipode must be %dx%d" % (n, n))
    s = Matrix(field, n, n, [[_parse_scalar(field, v) for v in row]
                             for row in anti])
    if "antipode_inv" in doc:
        s_inv = Matrix(field, n, n,
                       [[_parse_scalar(field, v) for v in row]
                        for row in doc["antipode_inv"]])
        ident = Matrix.identity(field, n)
        if (mat_mul(s, s_inv) != ident or mat_mul(s_inv, s) != ident) \
                and strict:
            raise InputError("antipode_inv is not the inverse of antipode")
    else:
        s_inv = mat_inverse(s)
        if s_inv is None:
            if strict:
                raise InputError("antipode is not invertible")
            s_inv = Matrix.zeros(field, n, n)
    h = HopfAlgebra(field, n, names, mult, unit, comult, counit, s, s_inv,
                    name=doc.get("name", "H"))
    if verify:
        verify_hopf_axioms(h).require("hopf axioms at load")
    return h


def functional_to_json(kind, host_name, field, mat, inv=None):
    doc = {"kind": kind, "host": host_name,
           "entries": _matrix_sparse(field, mat)}
    if inv is not None:
        doc["inverse"] = _matrix_sparse(field, inv)
    return doc


def cocycle_to_json(c):
    return functional_to_json("cocycle", c.host.name, c.host.field,
                              c.sigma, c.sigma_inv)


def dual_cocycle_to_json(d):
    return functional_to_json("dual_cocycle", d.host.name, d.host.field,
                              d.theta, d.theta_inv)


def cqt_to_json(c):
    return functional_to_json("cqt", c.host.name, c.host.field, c.r, c.r_inv)


def qt_to_json(q):
    return functional_to_json("qt", q.host.name, q.host.field, q.rr, q.rr_inv)


def one_cocycle_to_json(mu):
    f = mu.host.field
    return {"kind": "one_cocycle", "host": mu.host.name,
            "entries": [[i, f.fmt(v)] for i, v in enumerate(mu.mu) if v],
            "inverse": [[i, f.fmt(v)] for i, v in enumerate(mu.mu_inv) if v]}


def functional_from_json(doc, host):
    """Dispatch on "kind"; returns the appropriate verified-shape object
    (validity checks are up to the caller)."""
    from . import twist, quasitriangular
    f = host.field
    n = host.dim
    kind = doc.get("kind")
    if kind == "one_cocycle":
        mu = [f.zero] * n
        for entry in doc.get("entries", []):
            if len(entry) != 2:
                raise InputError("one_cocycle entry %r" % (entry,))
            i, v = entry
            if not isinstance(i, int) or not 0 <= i < n:
                raise InputError("one_cocycle index %r" % (entry,))
            mu[i] = mu[i] + _parse_scalar(f, v)
        return twist.lazy_one_cocycle(host, mu)
    mat = _sparse_to_matrix(f, n, n, doc.get("entries", []), kind or "entry")
    inv = None
    if "inverse" in doc:
        inv = _sparse_to_matrix(f, n, n, doc["inverse"], "inverse")
    if kind == "cocycle":
        return twist.two_cocycle(host, mat, inv)
    if kind == "dual_cocycle":
        return twist.dual_cocycle(host, mat, inv)
    if kind == "cqt":
        return quasitriangular.cqt_structure(host, mat, inv)
    if kind == "qt":
        return quasitriangular.qt_structure(host, mat, inv)
    raise InputError("unknown kind %r" % (kind,))


def yd_module_to_json(mod, host_name=None):
    f = mod.host.field
    return {"kind": "yd_module", "host": host_name or mod.host.name,
            "dim": mod.dim,
            "action": _tensor_to_sparse(f, mod.action),
            "coaction": _tensor_to_sparse(f, mod.coaction)}


def yd_algebra_to_json(alg, host_name=None):
    f = alg.host.field
    doc = yd_module_to_json(alg.module, host_name)
    doc["kind"] = "yd_algebra"
    doc["mult"] = _tensor_to_sparse(f, alg.mult)
    doc["unit"] = [f.fmt(x) for x in alg.unit]
    return doc


def yd_from_json(doc, host):
    from . import yd
    f = host.field
    n = host.dim
    m = doc.get("dim")
    if not isinstance(m, int) or m < 1:
        raise InputError("bad module dimension %r" % (m,))
    check_dim(m)
    action = _sparse_to_tensor(f, (n, m, m), doc.get("action", []), "action")
    coaction = _sparse_to_tensor(f, (m, m, n), doc.get("coaction", []),
                                 "coaction")
    mod = yd.YdModule(host, m, action, coaction)
    if doc.get("kind") == "yd_algebra":
        mult = _sparse_to_tensor(f, (m, m, m), doc.get("mult", []), "mult")
        unit = _vector(f, doc["unit"], m, "unit")
        return yd.YdAlgebra(mod, mult, unit)
    return mod


def load_document(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON in %s: line %d column %d: %s"
                         % (path, exc.lineno, exc.colno, exc.msg))


def to_json_of(obj):
    """Serialize any supported payload."""
    from .twist import TwoCocycle, DualCocycle, LazyOneCocycle
    from .quasitriangular import CqtStructure, QtStructure
    from .yd import YdAlgebra, YdModule
    if isinstance(obj, HopfAlgebra):
        return hopf_to_json(obj)
    if isinstance(obj, TwoCocycle):
        return cocycle_to_json(obj)
    if isinstance(obj, DualCocycle):
        return dual_cocycle_to_json(obj)
    if isinstance(obj, LazyOneCocycle):
        return one_cocycle_to_json(obj)
    if isinstance(obj, CqtStructure):
        return cqt_to_json(obj)
    if isinstance(obj, QtStructure):
        return qt_to_json(obj)
    if isinstance(obj, YdAlgebra):
        return yd_algebra_to_json(obj)
    if isinstance(obj, YdModule):
        return yd_module_to_json(obj)
    raise InputError("cannot serialize %r" % (type(obj),))
