"""Command-line entry point. Every verb prints one JSON document on stdout.

Exit codes: 0 success, 1 an identity check failed, 2 bad usage or a size cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import config
from . import cqsym as cq
from . import descent as ds
from . import enumer as en
from . import qsym as qs
from . import schur as sc
from . import toric as tr
from . import verify
from .combinatorics import as_subset, cyclic_class, parse_set
from .errors import CQSymError, IdentityFailure, NotCyclic

CAPS = {
    "max-degree": "MAX_DEGREE",
    "max-toric-vertices": "MAX_TORIC_VERTICES",
    "max-toric-class": "MAX_TORIC_CLASS",
    "max-sn": "MAX_SN_IDENTITY",
    "max-disconnected": "MAX_DISCONNECTED",
    "max-group-ring": "MAX_GROUP_RING",
    "max-representative": "MAX_REPRESENTATIVE_SEARCH",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message)


def _subset(text, n, name="--set"):
    try:
        return as_subset(parse_set(text), n)
    except CQSymError as exc:
        raise UsageError(f"{name}: {exc}") from None


def _class_terms(counts: dict) -> list:
    items = sorted(counts.items(), key=lambda t: t[0].canonical)
    return [{"class": list(A.canonical), "coeff": str(Fraction(c))} for A, c in items if c]


def _matrix_json(n, normalized):
    order, rows = cq.basis_matrix(n, normalized)
    return {"order": [list(A.canonical) for A in order], "rows": [[str(x) for x in r] for r in rows]}


# ---------------------------------------------------------------- verbs

def cmd_fcyc(args):
    J = _subset(args.set, args.n)
    f = cq.fcyc_as_qsym(args.n, J)
    out = {"n": args.n, "set": list(J), "class": list(cyclic_class(args.n, J).canonical)}
    if args.basis in ("F", "M"):
        out["expansion"] = f.to_json(args.basis)
    else:
        out["expansion"] = cq.from_qsym(f).to_basis("hFcyc" if args.basis == "hF" else "hMcyc").to_json()
    return out


def cmd_product(args):
    J, K = _subset(args.aset, args.a, "--aset"), _subset(args.bset, args.b, "--bset")
    out = {"a": args.a, "aset": list(J), "b": args.b, "bset": list(K), "basis": "Fcyc"}
    methods = ["shuffle", "quasishuffle"] if args.method == "both" else [args.method]
    results = {m: _class_terms(cq.product_fcyc_terms(args.a, J, args.b, K, m)) for m in methods}
    out["expansions"] = results
    if args.method == "both":
        out["agree"] = results["shuffle"] == results["quasishuffle"]
        if not out["agree"]:
            raise IdentityFailure("product paths disagree", out)
    return out


def cmd_basis_matrix(args):
    if args.n < 1:
        raise UsageError("--n must be positive")
    return {
        "n": args.n,
        "normalized": _matrix_json(args.n, True),
        "unnormalized": _matrix_json(args.n, False),
    }


def _shape(args):
    try:
        return sc.parse_shape(args.lam, args.mu)
    except CQSymError as exc:
        raise UsageError(str(exc)) from None


def cmd_schur_expand(args):
    shape = _shape(args)
    s = sc.schur(shape)
    out = {
        "shape": {"lambda": list(shape.lam), "mu": list(shape.mu)},
        "n": shape.n,
        "f": sc.num_syt(shape),
        "F": s.to_json("F"),
    }
    # connected ribbons still expand, only with signs
    e = sc.schur_in_hfcyc(shape) if not shape.is_connected_ribbon else cq.from_qsym(s).to_basis("hFcyc")
    out["connected_ribbon"] = shape.is_connected_ribbon
    out["hFcyc"] = e.to_json()
    out["nonnegative"] = all(c >= 0 for c in e.coeffs.values())
    return out


def cmd_fibers(args):
    return sc.cdes_fibers(_shape(args)).to_json()


def _dag(text):
    try:
        return tr.Dag.parse(text)
    except CQSymError as exc:
        raise UsageError(str(exc)) from None


def cmd_toric_lext(args):
    D = _dag(args.dag)
    T = tr.toric_class(D)
    ext = tr.toric_extensions(T)
    return {
        "dag": str(D),
        "class_size": len(T),
        "linear_extensions": len(tr.linear_extensions(D)),
        "toric_extensions": [list(w) for w in ext],
        "count": len(ext),
    }


def cmd_toric_enum(args):
    D = _dag(args.dag)
    T = tr.toric_class(D)
    f = tr.toric_enumerator(T)
    e = cq.from_qsym(f)
    return {
        "dag": str(D),
        "n": D.n,
        "Fcyc": _class_terms(cq.fcyc_terms(e)),
        "hFcyc": e.to_basis("hFcyc").to_json(),
    }


def cmd_shuffle_dist(args):
    m, n, i, j = args.m, args.n, args.i, args.j
    if min(m, n) < 1:
        raise UsageError("--m and --n must be positive")
    if args.cyclic:
        dist = en.cdes_shuffle_dist(m, n, i, j)
        gen = en.cdes_shuffle_genfun(m, n, i, j)
    else:
        dist = en.des_shuffle_dist(m, n, i, j)
        gen = en.des_shuffle_genfun(m, n, i, j)
    if not gen["holds"]:
        raise IdentityFailure("generating function disagrees with brute force", {"m": m, "n": n, "i": i, "j": j})
    return {"m": m, "n": n, "i": i, "j": j, "cyclic": args.cyclic, "dist": dist, "total": sum(dist)}


def cmd_psi(args):
    n, R = args.n, args.trunc
    if R < 0:
        raise UsageError("--trunc must be nonnegative")
    if args.cyclic:
        J = _subset(args.set, n)
        f = cq.fcyc_as_qsym(n, J)
        closed = en.psi_Fcyc_closed(n, len(J), R) if n else None
    else:
        J = _subset(args.set, max(n - 1, 0))
        f = qs.fundamental(n, J)
        closed = en.psi_F_closed(n, len(J), R) if n else None
    value = en.psi(f, R)
    if closed is not None and closed != value:
        raise IdentityFailure("closed form disagrees", {"n": n, "set": list(J)})
    return {"n": n, "set": list(J), "cyclic": args.cyclic, "psi": value.to_json()}


def cmd_coproduct(args):
    n = args.n
    if n < 1:
        raise UsageError("--n must be positive")
    B = cyclic_class(n, _subset(args.cls, n, "--class"))
    terms = ds.coproduct_fcyc(n, B)
    items = sorted(terms.items(), key=lambda t: (t[0][0].canonical, t[0][1]))
    return {
        "n": n,
        "class": list(B.canonical),
        "terms": [{"left": list(A.canonical), "right": list(J), "coeff": str(c)} for (A, J), c in items if c],
    }


def cmd_verify(args):
    if args.list:
        return {"suites": sorted(verify.SUITES)}
    names = sorted(verify.SUITES) if args.all else args.suite
    if not names:
        raise UsageError("give --suite NAME, --all or --list")
    unknown = [s for s in names if s not in verify.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    results = {}
    for name in names:
        try:
            results[name] = {"ok": True, **verify.run(name, args.max)}
        except IdentityFailure as exc:
            payload = {"suite": name, "message": str(exc), "counterexample": exc.counterexample}
            raise IdentityFailure(str(exc), {"passed": results, "failed": payload}) from None
    return {"results": results}


# ---------------------------------------------------------------- wiring

def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the verb
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indent the JSON output")
    for flag, attr in CAPS.items():
        common.add_argument(f"--{flag}", type=int, metavar="N", default=argparse.SUPPRESS,
                            help=f"override the cap (default {getattr(config, attr)})")
    p = _Parser(prog="cyclicqsym", description="Exact computations with cyclic quasi-symmetric functions.",
                parents=[common])
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)
    real_add = sub.add_parser
    sub.add_parser = lambda name, **kw: real_add(name, parents=[common], **kw)

    s = sub.add_parser("fcyc", help="expand F^cyc_{n,J}")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--set", required=True)
    s.add_argument("--basis", choices=["F", "M", "hF", "hM"], default="F")
    s.set_defaults(func=cmd_fcyc)

    s = sub.add_parser("product", help="F^cyc_{a,J} * F^cyc_{b,K} on the F^cyc classes")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--aset", required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--bset", required=True)
    s.add_argument("--method", choices=["shuffle", "quasishuffle", "both"], default="both")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("basis-matrix", help="F-type family in the M-type family")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_basis_matrix)

    for verb, func, text in (
        ("schur-expand", cmd_schur_expand, "Schur function in the F and hF^cyc bases"),
        ("fibers", cmd_fibers, "cyclic descent fiber sizes of a skew shape"),
    ):
        s = sub.add_parser(verb, help=text)
        s.add_argument("--lambda", dest="lam", required=True)
        s.add_argument("--mu")
        s.set_defaults(func=func)

    for verb, func, text in (
        ("toric-lext", cmd_toric_lext, "toric linear extensions of a DAG's flip class"),
        ("toric-enum", cmd_toric_enum, "cyclic P-partition enumerator of a DAG's flip class"),
    ):
        s = sub.add_parser(verb, help=text)
        s.add_argument("--dag", required=True, help='e.g. "3;1->2,2->3"')
        s.set_defaults(func=func)

    s = sub.add_parser("shuffle-dist", help="descent distribution over (cyclic) shuffles")
    for name in ("m", "n", "i", "j"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.add_argument("--cyclic", action="store_true")
    s.set_defaults(func=cmd_shuffle_dist)

    s = sub.add_parser("psi", help="max-product specialization of F or F^cyc")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--set", required=True)
    s.add_argument("--trunc", type=int, required=True)
    s.add_argument("--cyclic", action="store_true")
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("coproduct", help="internal coproduct of a normalized F^cyc")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--class", dest="cls", required=True)
    s.set_defaults(func=cmd_coproduct)

    s = sub.add_parser("verify", help="run invariant suites")
    s.add_argument("--suite", action="append", default=[])
    s.add_argument("--all", action="store_true")
    s.add_argument("--list", action="store_true")
    s.add_argument("--max", type=int)
    s.set_defaults(func=cmd_verify)
    return p


def _emit(data, pretty, stream):
    stream.write(json.dumps(data, indent=2 if pretty else None, sort_keys=False) + "\n")


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    pretty = False
    saved = {attr: getattr(config, attr) for attr in CAPS.values()}
    try:
        args = parser.parse_args(argv)
        pretty = getattr(args, "pretty", False)
        if not args.verb:
            raise UsageError("missing verb")
        for flag, attr in CAPS.items():
            value = getattr(args, flag.replace("-", "_"), None)
            if value is not None:
                setattr(config, attr, value)
        _emit(args.func(args), pretty, stdout)
        return 0
    except IdentityFailure as exc:
        _emit({"error": "identity failure", "message": str(exc), "counterexample": exc.counterexample}, pretty, stdout)
        return 1
    except NotCyclic as exc:
        _emit({"error": "not cyclic", "message": str(exc), "witness": [list(w) for w in exc.witness]}, pretty, stdout)
        return 1
    except (UsageError, CQSymError) as exc:
        _emit({"error": "usage", "message": str(exc)}, pretty, stdout)
        return 2
    finally:
        for attr, value in saved.items():
            setattr(config, attr, value)


if __name__ == "__main__":
    sys.exit(main())
