"""Command line frontend.

Every subcommand is a one-shot pipeline over the JSON / text formats
defined by the library modules: lattice dumps, rank-point files with an
order digest, H-representation text, vertex lists, code files, and
polynomial serializations.  Exit codes: 0 success, 1 validation
failure, 2 size cap exceeded.  With --json-errors failures are also
reported as one JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import charpoly, codes, constructions, polytope, rankfun, subspaces
from .errors import CapExceeded, ValidationError


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def _write(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    _write(args, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _lattice(args):
    return subspaces.build_lattice(args.q, args.n, max_size=args.max_lattice)


def _load_point(args, path):
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    lat = subspaces.build_lattice(obj["q"], obj["n"], max_size=args.max_lattice)
    return rankfun.point_from_json(obj, lat)


def _points_text(points):
    lines = [" ".join(str(v) for v in p.values) for p in points]
    return "\n".join(lines) + ("\n" if lines else "")


# -- subcommand handlers -------------------------------------------------

def _cmd_lattice_build(args):
    lat = _lattice(args)
    dump = lat.dump()
    dump["order_digest"] = lat.order_digest()
    _emit_json(args, dump)
    return 0


def _cmd_polytope(args):
    lat = _lattice(args)
    if args.which == "points":
        _write(args, _points_text(polytope.lattice_points(lat)))
        return 0
    H = polytope.build_hrep(lat, reduced=not args.full)
    if args.which == "hrep":
        _write(args, H.to_text())
    elif args.which == "vertices":
        verts = polytope.enumerate_vertices(H, max_dim=args.max_dim)
        _write(args, _points_text(verts))
    elif args.which == "fvector":
        fv = polytope.f_vector(H, max_dim=args.max_dim)
        _write(args, " ".join(str(c) for c in fv) + "\n")
    elif args.which == "dim":
        _write(args, f"{polytope.affine_dimension(H)}\n")
    elif args.which == "witness":
        wit = polytope.interior_witness(lat)
        status = polytope.membership(H, wit).status
        _emit_json(args, {"point": rankfun.point_to_json(wit), "status": status})
    return 0


def _cmd_pm(args):
    p = _load_point(args, args.point)
    if args.which == "check":
        rep = rankfun.check_axioms(p)
        _emit_json(args, {
            "ok": rep.ok,
            "violations": [{"axiom": a, "spaces": list(w), "slack": str(s)}
                           for a, w, s in rep.violations],
        })
    elif args.which in ("flats", "cyclic", "zflats"):
        fn = {"flats": rankfun.flats, "cyclic": rankfun.cyclic_spaces,
              "zflats": rankfun.cyclic_flats}[args.which]
        _emit_json(args, {args.which: sorted(fn(p))})
    elif args.which == "indep":
        rep = rankfun.independence_report(p, args.mu)
        _emit_json(args, {
            "mu": rep.mu,
            "independent": sorted(rep.independent),
            "circuits": sorted(rep.circuits),
            "loops": sorted(rep.loops),
        })
    elif args.which == "classify":
        mu = args.mu if args.mu else rankfun.principal_denominator(p)
        cls = rankfun.classify(p, mu)
        _emit_json(args, {
            "mu": mu,
            "is_qmatroid": cls.is_qmatroid,
            "loop_space": cls.loop_space,
            "is_full": cls.is_full,
            "is_paving": cls.is_paving,
            "is_mu_paving": cls.is_mu_paving,
            "principal_denominator": rankfun.principal_denominator(p),
        })
    return 0


def _cmd_make(args):
    if args.which == "uniform":
        spec = {"kind": "uniform", "q": args.q, "n": args.n, "k": args.k}
    else:
        with open(args.spec, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
        if spec.get("kind") != args.which:
            raise ValidationError(
                f"spec kind {spec.get('kind')!r} does not match subcommand {args.which}")
    point = constructions.compile_spec(spec)
    _emit_json(args, rankfun.point_to_json(point))
    return 0


def _cmd_invariant(args):
    if args.which == "chi":
        p = _load_point(args, args.point)
        chi = charpoly.char_puiseux(p)
        _emit_json(args, {"terms": chi.to_pairs(), "pretty": str(chi),
                          "at_one": chi.eval_at_one()})
        return 0
    # chi-combo: closed form for a paving combination, cross-checked
    with open(args.spec, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    lat = subspaces.build_lattice(spec["q"], spec["n"], max_size=args.max_lattice)
    k = spec["k"]
    lam = Fraction(spec["lambda"])
    s1 = frozenset(lat.index_of_rows([tuple(r) for r in rows]) for rows in spec["s1"])
    s2 = frozenset(lat.index_of_rows([tuple(r) for r in rows]) for rows in spec["s2"])
    rep = constructions.paving_combo_report(
        constructions.paving_spec(lat, k, s1),
        constructions.paving_spec(lat, k, s2), lam)
    direct = charpoly.char_puiseux(rep.point)
    chi1 = charpoly.char_puiseux(constructions.paving(constructions.paving_spec(lat, k, s1)))
    via = args.via
    base = chi1 if via == 1 else charpoly.char_puiseux(
        constructions.paving(constructions.paving_spec(lat, k, s2)))
    formula = charpoly.paving_combo_char(base, (len(s1), len(s2)), k, lat.q, lam, via=via)
    if formula != direct:
        raise ValidationError("closed form disagrees with the direct computation")
    _emit_json(args, {"terms": direct.to_pairs(), "pretty": str(direct),
                      "via": via, "agrees": True})
    return 0


def _cmd_code(args):
    if args.which == "mrd":
        lat = _lattice(args)
        point = codes.mrd_closed_form(lat, args.m, args.d)
        _emit_json(args, rankfun.point_to_json(point))
        return 0
    C = codes.load_code(args.code)
    if args.which == "metrics":
        met = codes.code_metrics(C, cap=args.scan_cap)
        _emit_json(args, {"k": met.k, "d": met.d, "d_perp": met.d_perp,
                          "is_mrd": met.is_mrd})
    elif args.which == "rho":
        lat = subspaces.build_lattice(C.field.q, C.n, max_size=args.max_lattice)
        point = codes.induced_polymatroid(C, lat)
        _emit_json(args, rankfun.point_to_json(point))
    return 0


def build_parser():
    top = _Parser(prog="qrank", description=__doc__)
    top.add_argument("--json-errors", action="store_true",
                     help="report failures as JSON on stderr")
    top.add_argument("--max-lattice", type=int, default=subspaces.MAX_LATTICE_SIZE,
                     help="cap on the number of subspaces")
    sub = top.add_subparsers(dest="command", required=True)

    lat = sub.add_parser("lattice", help="subspace lattice pipelines")
    lsub = lat.add_subparsers(dest="which", required=True)
    lb = lsub.add_parser("build", help="enumerate L(F_q^n) and dump it as JSON")
    lb.add_argument("--q", type=int, required=True)
    lb.add_argument("--n", type=int, required=True)
    lb.add_argument("--out", "-o")
    lb.set_defaults(func=_cmd_lattice_build)

    poly = sub.add_parser("polytope", help="q-rank polytope pipelines")
    psub = poly.add_subparsers(dest="which", required=True)
    for name, hlp in [("hrep", "H-representation as text"),
                      ("points", "all integer points"),
                      ("vertices", "all vertices (double description)"),
                      ("fvector", "face counts by dimension"),
                      ("dim", "affine dimension"),
                      ("witness", "interior witness and its membership")]:
        pc = psub.add_parser(name, help=hlp)
        pc.add_argument("--q", type=int, required=True)
        pc.add_argument("--n", type=int, required=True)
        pc.add_argument("--full", action="store_true",
                        help="use the unreduced polytope (keep the zero coordinate)")
        pc.add_argument("--max-dim", type=int,
                        default=polytope.MAX_VERTEX_ENUM_DIM if name != "fvector"
                        else polytope.MAX_FVECTOR_DIM)
        pc.add_argument("--out", "-o")
        pc.set_defaults(func=_cmd_polytope)

    pm = sub.add_parser("pm", help="q-polymatroid reports for a point file")
    msub = pm.add_subparsers(dest="which", required=True)
    for name, hlp in [("check", "axiom report"),
                      ("flats", "set of flats"),
                      ("cyclic", "set of cyclic spaces"),
                      ("zflats", "set of cyclic flats"),
                      ("indep", "mu-independence report"),
                      ("classify", "classification report")]:
        mc = msub.add_parser(name, help=hlp)
        mc.add_argument("--point", required=True)
        if name in ("indep", "classify"):
            mc.add_argument("--mu", type=int, default=0 if name == "classify" else None,
                            required=(name == "indep"))
        mc.add_argument("--out", "-o")
        mc.set_defaults(func=_cmd_pm)

    mk = sub.add_parser("make", help="compile a construction to a point file")
    ksub = mk.add_subparsers(dest="which", required=True)
    ku = ksub.add_parser("uniform", help="uniform q-matroid")
    ku.add_argument("--q", type=int, required=True)
    ku.add_argument("--n", type=int, required=True)
    ku.add_argument("--k", type=int, required=True)
    ku.add_argument("--out", "-o")
    ku.set_defaults(func=_cmd_make)
    for name in ("paving", "combo", "flag"):
        kc = ksub.add_parser(name, help=f"{name} construction from a JSON spec")
        kc.add_argument("--spec", required=True)
        kc.add_argument("--out", "-o")
        kc.set_defaults(func=_cmd_make)

    inv = sub.add_parser("invariant", help="characteristic Puiseux polynomial")
    isub = inv.add_subparsers(dest="which", required=True)
    ic = isub.add_parser("chi", help="polynomial of a point file")
    ic.add_argument("--point", required=True)
    ic.add_argument("--out", "-o")
    ic.set_defaults(func=_cmd_invariant)
    icc = isub.add_parser("chi-combo",
                          help="closed form for a paving combination spec")
    icc.add_argument("--spec", required=True)
    icc.add_argument("--via", type=int, choices=(1, 2), default=1)
    icc.add_argument("--out", "-o")
    icc.set_defaults(func=_cmd_invariant)

    code = sub.add_parser("code", help="rank-metric code pipelines")
    csub = code.add_subparsers(dest="which", required=True)
    cm = csub.add_parser("metrics", help="k, d, dual distance, MRD check")
    cm.add_argument("--code", required=True)
    cm.add_argument("--scan-cap", type=int, default=codes.CODEWORD_SCAN_CAP)
    cm.add_argument("--out", "-o")
    cm.set_defaults(func=_cmd_code)
    cr = csub.add_parser("rho", help="induced q-polymatroid point")
    cr.add_argument("--code", required=True)
    cr.add_argument("--out", "-o")
    cr.set_defaults(func=_cmd_code)
    cd = csub.add_parser("mrd", help="MRD closed-form rank function")
    cd.add_argument("--q", type=int, required=True)
    cd.add_argument("--n", type=int, required=True)
    cd.add_argument("--m", type=int, required=True)
    cd.add_argument("--d", type=int, required=True)
    cd.add_argument("--out", "-o")
    cd.set_defaults(func=_cmd_code)

    return top


def main(argv=None):
    parser = build_parser()
    json_errors = "--json-errors" in (argv if argv is not None else sys.argv[1:])
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CapExceeded as exc:
        _report_error(exc, json_errors)
        return 2
    except (ValidationError, OSError, json.JSONDecodeError, KeyError) as exc:
        _report_error(exc, json_errors)
        return 1


def _report_error(exc, json_errors):
    if json_errors:
        sys.stderr.write(json.dumps(
            {"error": type(exc).__name__, "message": str(exc)}) + "\n")
    else:
        sys.stderr.write(f"qrank: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
