"""Command-line front end.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fields import QQ, FieldError, field_from_spec
from .linalg import DimensionError
from .report import CheckReport, VerificationError
from . import catalog as cat
from . import io_json
from .hopf import verify_hopf_axioms
from .twist import (TwoCocycle, DualCocycle, LazyOneCocycle, deform,
                    deform_dual, verify_two_cocycle, verify_dual_cocycle,
                    is_lazy, is_lazy_dual)
from .quasitriangular import CqtStructure, QtStructure, verify_cqt, verify_qt
from .yd import (YdAlgebra, YdModule, azumaya_check, verify_yd,
                 verify_yd_algebra)
from .galois import (bimodule_actions, build_hr, galois_maps, unit_object,
                     wedge)
from .suite import T_DEFAULT, run_suite, suite_json


def _load_host(args, doc=None):
    """Resolve the host Hopf algebra from --host (file or catalog name) or
    the document's "host" catalog name."""
    field = field_from_spec(getattr(args, "field", "Q") or "Q")
    ref = getattr(args, "host", None)
    if ref is None and doc is not None:
        ref = doc.get("host")
    if ref is None:
        raise io_json.InputError("no host given (use --host)")
    if ref.endswith(".json"):
        return io_json.hopf_from_json(io_json.load_document(ref))
    name_map = {"h4": cat.sweedler_h4, "kc2": cat.group_algebra_c2,
                "k": lambda f, verify=True: cat.dim1_hopf(f)}
    base = ref.split("^")[0].split("_")[0].lower()
    if base in name_map:
        return name_map[base](field, verify=False)
    raise io_json.InputError("unknown host %r (expected a .json file or a "
                             "catalog name h4/kc2/k)" % ref)


def _emit(doc, as_json):
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(json.dumps(doc, indent=2, sort_keys=True))


def _finish(report, args):
    if getattr(args, "json", False):
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(report.render_text())
    return 0 if report.ok else 1


def cmd_validate(args):
    doc = io_json.load_document(args.file)
    kind = doc.get("kind", "hopf")
    rep = CheckReport()
    if kind == "hopf":
        h = io_json.hopf_from_json(doc, verify=False, strict=False)
        rep = verify_hopf_axioms(h)
    else:
        host = _load_host(args, doc)
        if kind in ("cocycle", "dual_cocycle", "cqt", "qt", "one_cocycle"):
            obj = io_json.functional_from_json(doc, host)
            if isinstance(obj, TwoCocycle):
                rep = verify_two_cocycle(obj)
            elif isinstance(obj, DualCocycle):
                rep = verify_dual_cocycle(obj)
            elif isinstance(obj, CqtStructure):
                rep = verify_cqt(obj)
            elif isinstance(obj, QtStructure):
                rep = verify_qt(obj)
            elif isinstance(obj, LazyOneCocycle):
                rep.add("one_cocycle_invariants", True)
        elif kind in ("yd_module", "yd_algebra"):
            obj = io_json.yd_from_json(doc, host)
            rep = (verify_yd_algebra(obj) if isinstance(obj, YdAlgebra)
                   else verify_yd(obj))
        else:
            raise io_json.InputError("unknown kind %r" % kind)
    return _finish(rep, args)


def cmd_deform(args):
    h = io_json.hopf_from_json(io_json.load_document(args.hopf))
    if args.cocycle:
        doc = io_json.load_document(args.cocycle)
        if doc.get("kind") != "cocycle":
            raise io_json.InputError("--cocycle file must have kind=cocycle")
        c = io_json.functional_from_json(doc, h)
        verify_two_cocycle(c).require("cocycle")
        out = deform(c)
    elif args.dual_cocycle:
        doc = io_json.load_document(args.dual_cocycle)
        if doc.get("kind") != "dual_cocycle":
            raise io_json.InputError(
                "--dual-cocycle file must have kind=dual_cocycle")
        d = io_json.functional_from_json(doc, h)
        verify_dual_cocycle(d).require("dual cocycle")
        out = deform_dual(d)
    else:
        raise io_json.InputError("deform needs --cocycle or --dual-cocycle")
    _emit(io_json.hopf_to_json(out), True)
    return 0


def _check_functional(args, want_kind, verifier, lazy_fn=None):
    doc = io_json.load_document(args.file)
    if doc.get("kind") != want_kind:
        raise io_json.InputError("expected kind=%s" % want_kind)
    host = _load_host(args, doc)
    obj = io_json.functional_from_json(doc, host)
    rep = verifier(obj)
    if lazy_fn is not None and rep.ok:
        rep.add("lazy", lazy_fn(obj))
    return _finish(rep, args)


def cmd_check_cocycle(args):
    return _check_functional(args, "cocycle", verify_two_cocycle, is_lazy)


def cmd_check_cqt(args):
    return _check_functional(args, "cqt", verify_cqt)


def cmd_check_qt(args):
    return _check_functional(args, "qt", verify_qt)


def cmd_check_yd(args):
    doc = io_json.load_document(args.file)
    host = _load_host(args, doc)
    obj = io_json.yd_from_json(doc, host)
    rep = (verify_yd_algebra(obj) if isinstance(obj, YdAlgebra)
           else verify_yd(obj))
    return _finish(rep, args)


def cmd_azumaya(args):
    doc = io_json.load_document(args.file)
    host = _load_host(args, doc)
    obj = io_json.yd_from_json(doc, host)
    if not isinstance(obj, YdAlgebra):
        raise io_json.InputError("azumaya needs a yd_algebra document")
    rep = verify_yd_algebra(obj)
    if rep.ok:
        rep.merge(azumaya_check(obj))
    return _finish(rep, args)


def _load_cqt(args, host):
    doc = io_json.load_document(args.cqt)
    if doc.get("kind") != "cqt":
        raise io_json.InputError("--cqt file must have kind=cqt")
    c = io_json.functional_from_json(doc, host)
    verify_cqt(c).require("cqt structure")
    return c


def cmd_wedge(args):
    doc_m = io_json.load_document(args.m)
    host = _load_host(args, doc_m)
    c = _load_cqt(args, host)
    ma = io_json.yd_from_json(doc_m, host)
    mb = io_json.yd_from_json(io_json.load_document(args.n), host)
    if isinstance(ma, YdAlgebra):
        ma = ma.module
    if isinstance(mb, YdAlgebra):
        mb = mb.module
    sub, wmod = wedge(c, ma, mb)
    rep = verify_yd(wmod)
    rep.add("wedge_dimension", True, None, "dim %d" % sub.dim)
    out = {"wedge_dim": sub.dim,
           "basis": [[host.field.fmt(x) for x in sub.basis.column(j)]
                     for j in range(sub.dim)],
           "module": io_json.yd_module_to_json(wmod),
           "checks": rep.to_json()}
    _emit(out, True)
    return 0 if rep.ok else 1


def cmd_galois(args):
    doc = io_json.load_document(args.file)
    host = _load_host(args, doc)
    c = _load_cqt(args, host)
    alg = io_json.yd_from_json(doc, host)
    if not isinstance(alg, YdAlgebra):
        raise io_json.InputError("galois needs a yd_algebra document")
    bh = build_hr(c, verify=False)
    b = bimodule_actions(bh, alg.module, verify=False)
    rep = galois_maps(bh, b, alg)
    return _finish(rep, args)


def cmd_suite(args):
    field = field_from_spec(args.field)
    t_values = (tuple(int(x) for x in args.t_values.split(","))
                if args.t_values else T_DEFAULT)

    def progress(name, ok, ms):
        if not args.json:
            print("%s  %s (%.0f ms)" % ("PASS" if ok else "FAIL", name, ms))
            sys.stdout.flush()

    overall, details = run_suite(field, t_values, args.seed,
                                 progress=progress)
    if args.json:
        print(json.dumps(suite_json(overall, details, field, t_values,
                                    args.seed),
                         indent=2, sort_keys=True))
    else:
        n_fail = len(overall.failures())
        print("seed=%d field=%s t_values=%s" % (args.seed, field.spec(),
                                                list(t_values)))
        print("%d criteria, %d failed" % (len(overall.checks), n_fail))
    return 0 if overall.ok else 1


def cmd_catalog(args):
    if args.action == "list":
        for name in cat.catalog_names():
            print(name)
        return 0
    field = field_from_spec(args.field)
    t = int(args.param) if args.param is not None else None
    entry = cat.get_entry(args.name, field, t)
    _emit(io_json.to_json_of(entry.payload), True)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="hopflab",
        description="Exact checks for Hopf algebra deformations, "
                    "Yetter-Drinfeld modules and braided Galois objects.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--host", help="host Hopf algebra: file or "
                                       "catalog name")
        sp.add_argument("--field", default="Q", help="Q or Fp:<p>")
        sp.add_argument("--json", action="store_true",
                        help="machine-readable report")

    sp = sub.add_parser("validate", help="run the type's verifier")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("deform", help="emit H^σ or H_θ as JSON")
    sp.add_argument("hopf")
    sp.add_argument("--cocycle")
    sp.add_argument("--dual-cocycle", dest="dual_cocycle")
    sp.set_defaults(fn=cmd_deform)

    for name, fn in (("check-cocycle", cmd_check_cocycle),
                     ("check-cqt", cmd_check_cqt),
                     ("check-qt", cmd_check_qt),
                     ("check-yd", cmd_check_yd),
                     ("azumaya", cmd_azumaya)):
        sp = sub.add_parser(name)
        sp.add_argument("file")
        common(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("wedge", help="generalized cotensor M∧N")
    sp.add_argument("m")
    sp.add_argument("n")
    sp.add_argument("--cqt", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_wedge)

    sp = sub.add_parser("galois", help="𝓗_R*-Galois decision")
    sp.add_argument("file")
    sp.add_argument("--cqt", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_galois)

    sp = sub.add_parser("suite", help="run all acceptance criteria")
    sp.add_argument("--field", default="Q")
    sp.add_argument("--t-values", dest="t_values")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_suite)

    sp = sub.add_parser("catalog", help="list or export built-in entries")
    sp.add_argument("action", choices=["list", "export"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--param")
    sp.add_argument("--field", default="Q")
    sp.set_defaults(fn=cmd_catalog)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (io_json.InputError, FieldError, DimensionError, KeyError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except VerificationError as exc:
        print("check failed: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
