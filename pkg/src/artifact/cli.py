"""Command-line front end: ``artifact <walls|classify|basin|lattice|divisors|hm> ...``.

Exit status 0 on success, 2 on usage errors (argparse), 1 when a computed
result violates a recorded invariant; the diagnostic goes to stderr as JSON.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from . import basin, divisors, hm, lattice, singularities, walls
from .core import OnePS, HomPolynomial, Q, mono_str, qstr


class InvariantViolation(Exception):
    """A computed value disagrees with a recorded invariant."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


def _rational(text: str) -> Fraction:
    try:
        return Q(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _lambda(text: str) -> OnePS:
    try:
        parts = [Q(x) for x in text.strip("()[] ").split(",")]
        return OnePS(parts)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad one-parameter subgroup {text!r}: {exc}") from exc


def _range(text: str) -> range:
    a, _, b = text.partition("..")
    try:
        lo, hi = int(a), int(b or a)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a range like 4..40, got {text!r}") from exc
    return range(lo, hi + 1)


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    return "\n".join([fmt(headers), fmt(["-" * w for w in widths])] + [fmt(r) for r in cells]) + "\n"


# ---------------------------------------------------------------------------
# walls
# ---------------------------------------------------------------------------


# codimensions of the tower on the period side
Z_CODIMENSIONS = (8, 7, 6, 4, 3, 2, 1)
_PENDENZE = {2: "J4,inf", 3: "J3,r", 5: "E14", 6: "E13", 7: "E12"}


def _ps(lam: OnePS) -> str:
    return "(" + ", ".join(qstr(w) for w in lam.weights) + ")"


# germs at p that come from a non-reduced global component
_GLOBAL = {"(4,0)": "(4,0) quadruple conic", "(3,1)": "(3,1) triple conic"}


def _sing_labels(k: int) -> tuple[str, str]:
    p = walls.critical_curve(k)
    at_p = singularities.classify_at_smooth_point(p)
    v = singularities.vertex_Am(p)
    if v.kind == "NotOnCurve":
        return _GLOBAL.get(at_p.label, at_p.label), "v not on C"
    label_v = "A_inf" if v.kind == "AboveTruncation" else v.label
    extras = []
    if v.flag("contains_line"):
        extras.append("C > L")
    if k == 5 and v.flag("tangent_line"):
        extras.append("tangent cone 2T(L)")
    return _GLOBAL.get(at_p.label, at_p.label), ", ".join([label_v] + extras)


def cmd_walls(args) -> tuple[object, Optional[str]]:
    if args.action == "find":
        found = walls.find_walls(args.delta, include_excluded=args.all)
        rows, payload = [], []
        for k in range(8):
            c = walls.wall_for_tag(k, args.delta)
            p = walls.critical_curve(k)
            at_p, at_v = _sing_labels(k)
            rows.append([k, qstr(c.t), f"V({p.f2}, {p.f4})", c.lambda_label, at_p, at_v])
            payload.append({"k": k, "t": qstr(c.t), "f2": str(p.f2), "f4": str(p.f4),
                            "lambda": c.lambda_label, "sing_at_p": at_p, "sing_at_v": at_v})
        tset = sorted(walls.wall_set(args.delta))
        expected = sorted(walls.CRITICAL_T[k] for k in (0, 1, 2, 3, 5, 6, 7))
        if tset != expected:
            raise InvariantViolation("wall set mismatch", found=[qstr(t) for t in tset],
                                     expected=[qstr(t) for t in expected])
        data = {"delta": qstr(args.delta), "t_set": [qstr(t) for t in tset],
                "candidates": [c.to_json() for c in found], "table": payload}
        return data, _table(["k", "t_k", "critical curve", "1-PS", "sing. at p", "at v"], rows)
    if args.action == "certify":
        tags = [args.tag] if args.tag is not None else [0, 1, 2, 3, 4, 5, 6, 7]
        certs = [walls.destab_certificate(k) for k in tags]
        for c in certs:
            if c.balance(c.t_threshold) != 0:
                raise InvariantViolation("mu2 + t mu4 does not vanish at t_k", tag=c.tag)
        rows = [[c.tag, _ps(c.lam), qstr(c.mu2), qstr(c.mu4), qstr(c.t_threshold)]
                for c in certs]
        text = _table(["tag", "1-PS", "mu(f2)", "mu(f4)", "t_k"], rows)
        if args.tag is None:
            # transposed layout: one column per singularity type
            cols = [c for c in certs if c.tag in _PENDENZE]
            text = _table(["Sing. type at p"] + [_PENDENZE[c.tag] for c in cols],
                          [["mu(f2, lambda)"] + [qstr(c.mu2) for c in cols],
                           ["mu(f4, lambda)"] + [qstr(c.mu4) for c in cols],
                           ["t_k"] + [qstr(c.t_threshold) for c in cols]]) + "\n" + text
        return [c.to_json() for c in certs], text
    if args.action == "ladder":
        dims = singularities.w_dimensions()
        ladder = [{"W": k, "dim": dims[k]} for k in singularities.W_LADDER]
        if [r["dim"] for r in ladder] != list(singularities.W_LADDER):
            raise InvariantViolation("W_d is not of dimension d", ladder=ladder)
        if not args.dot:
            return ladder, _table(["W_k", "dim"], [[f"W{r['W']}", r["dim"]] for r in ladder])
        lines = ["digraph ladders {", "  rankdir=LR;"]
        chain = [f"W{k}" for k in singularities.W_LADDER] + ["M_IV"]
        lines += [f'  "{a}" -> "{b}" [label="subset"];' for a, b in zip(chain, chain[1:])]
        zs = [f"Z^{c}" for c in Z_CODIMENSIONS] + ["F"]
        lines += [f'  "{a}" -> "{b}" [label="subset"];' for a, b in zip(zs, zs[1:])]
        return None, "\n".join(lines + ["}"]) + "\n"
    fams = walls.wall_at_half()
    rows = []
    for f in fams:
        bal = walls.balance(f.generic, f.lam, Fraction(1, 2))
        if bal != 0:
            raise InvariantViolation("t = 1/2 family not balanced", family=f.label, value=qstr(bal))
        rows.append([f.label, f.description, _ps(f.lam), qstr(bal)])
    return [f.to_json() for f in fams], _table(["family", "curve", "1-PS", "balance at 1/2"], rows)


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def cmd_classify(args) -> tuple[object, Optional[str]]:
    try:
        p = hm.PencilPoint.parse(args.f2, args.f4)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    res = singularities.classify_curve_at(p, args.at, args.truncation)
    out = {"kind": res.kind, "label": res.label, "tag": res.tag,
           "decided_at_order": res.decided_at, "stable": res.stable,
           "flags": {"tangent_line": res.flag("tangent_line"),
                     "contains_line": res.flag("contains_line")},
           "detail": res.detail}
    if args.at == "smooth-point":
        try:
            n3 = singularities.classify_norm3(singularities.to_norm3(p))
            out["norm3"] = n3.label
        except ValueError:
            out["norm3"] = None
    rows = [[k, json.dumps(v) if isinstance(v, dict) else v] for k, v in out.items()]
    return out, _table(["field", "value"], rows)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# basin
# ---------------------------------------------------------------------------


def cmd_basin(args) -> tuple[object, Optional[str]]:
    if args.action == "weights":
        rep = basin.slice_weights_for_tag(args.tag)
        if rep.diagnostics:
            raise InvariantViolation("orbit weights missing from slice", tag=args.tag,
                                     diagnostics=list(rep.diagnostics))
        j = rep.to_json()
        rows = [[k, " ".join(v) if isinstance(v, list) else v] for k, v in j.items()
                if k not in ("slice_weights", "orbit_weights")]
        return j, _table(["field", "value"], rows)
    if args.action == "check-dimensions":
        out, rows = [], []
        for k in basin.DIMENSION_LAW_TAGS:
            rep = basin.slice_weights_for_tag(k)
            ok = basin.dimension_law_check(rep, k)
            out.append({"tag": k, "negative": len(rep.normal_negative),
                        "positive": len(rep.normal_positive), "zero": rep.normal_zero, "ok": ok})
            rows.append([k, len(rep.normal_negative), len(rep.normal_positive), rep.normal_zero, ok])
        if not all(o["ok"] for o in out):
            raise InvariantViolation("dimension law fails", rows=out)
        return out, _table(["tag", "#neg", "#pos", "#zero", "ok"], rows)
    rows = basin.versal_monomial_table(5)
    return [r.to_json() for r in rows], _table(
        ["weight", "monomial", "local"], [list(r.to_json().values()) for r in rows])


# ---------------------------------------------------------------------------
# lattice
# ---------------------------------------------------------------------------


def cmd_lattice(args) -> tuple[object, Optional[str]]:
    if args.action == "census":
        Ns = [args.N] if args.N is not None else list(range(3, 21))
        if args.dot and args.N is None:
            Ns = [18]
        out, rows = [], []
        for N in Ns:
            c = lattice.boundary_census(N)
            if c.type2_count != lattice.TYPE2_TABLE[N] or not all(x.verified for x in c.type2):
                raise InvariantViolation("census mismatch", N=N, type2=c.type2_count,
                                         expected=lattice.TYPE2_TABLE[N])
            out.append(c)
            rows.append([N, c.type2_count, c.type3_count,
                         ", ".join(x.label for x in c.type2)])
        if args.dot:
            return None, "".join(c.to_dot() for c in out)
        return [c.to_json() for c in out], _table(["N", "Type II", "Type III", "components"], rows)
    if args.action == "verify-classifydn":
        out, rows = [], []
        for n in range(1, 19):
            for label in lattice.classifydn_list(n):
                r = lattice.realize(label, n)
                out.append({"n": n, **r.to_json()})
                rows.append([n, r.label, r.roots, r.verified])
        for label in ("E8", "(E8)^2", "D16+"):
            r = lattice.realize_unimodular(label)
            out.append({"n": r.lattice.rank, **r.to_json()})
            rows.append([r.lattice.rank, r.label, r.roots, r.verified])
        if not all(o["verified"] for o in out):
            raise InvariantViolation("genus verification failed",
                                     failed=[o["label"] for o in out if not o["verified"]])
        return out, _table(["n", "root system", "roots", "verified"], rows)
    rep = lattice.dynkin_chain_check(args.k)
    if not rep.ok:
        raise InvariantViolation("Dynkin chain check failed", report=rep.to_json())
    rows = [["(" + ", ".join(qstr(Q(x)) for x in c) + ")", qstr(Q(s)), qstr(Q(d))]
            for c, s, d in zip(rep.classes, rep.squares, rep.divisibilities)]
    return rep.to_json(), _table(["class (Gamma coords)", "square", "divisibility"], rows)


# ---------------------------------------------------------------------------
# divisors
# ---------------------------------------------------------------------------


def cmd_divisors(args) -> tuple[object, Optional[str]]:
    if args.action == "walls":
        rows = divisors.wall_dictionary()
        return [r.to_json() for r in rows], _table(
            ["k", "t_k", "beta_k"], [[r.k, qstr(r.t), qstr(r.beta)] for r in rows])
    if args.action == "verify":
        checks = dict(divisors.symbolic_identities())
        chain = divisors.borcherds_chain()
        checks["borcherds_chain"] = len(set(chain.values())) == 1
        checks["chow_class"] = divisors.chow_class() == divisors.eta_xi(4, 2)
        if not all(checks.values()):
            raise InvariantViolation("divisor identity failed",
                                     failed=[k for k, v in checks.items() if not v])
        return checks, _table(["identity", "holds"], [[k, v] for k, v in checks.items()])
    slopes = divisors.hilbert_slopes(args.m)
    data = [{"m": m, "class": divisors.hilbert_class(m).to_json(), "t": qstr(t)} for m, t in slopes]
    return data, _table(["m", "L_m", "t(m)"],
                        [[m, str(divisors.hilbert_class(m)), qstr(t)] for m, t in slopes])


# ---------------------------------------------------------------------------
# hm
# ---------------------------------------------------------------------------


def cmd_hm(args) -> tuple[object, Optional[str]]:
    if args.action == "mu":
        try:
            if args.f4 is not None:
                p = hm.PencilPoint.parse(args.f2 or "x0*x2 + x1^2", args.f4)
                out = {"mu_f2": qstr(hm.mu_form(p.f2, args.lam)),
                       "mu_f4_coset_min": qstr(hm.mu_coset_min(p, args.lam))}
                if args.t is not None:
                    out["mu_t"] = qstr(hm.mu_t(p, args.lam, args.t))
                    out["limit_in_U"] = hm.limit_in_U(p, args.lam)
            else:
                if args.f is None:
                    raise UsageError("give --f, or --f4 (with optional --f2)")
                f = HomPolynomial.parse(args.f)
                out = {"mu": qstr(hm.mu_form(f, args.lam))}
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from exc
        return out, _table(["quantity", "value"], [[k, v] for k, v in out.items()])
    if args.action == "hilbert-mu":
        spaces = hm.propssci_subspaces(args.d, args.a, args.m)
        lam = hm.propssci_lambda()
        closed = hm.weight_sum_closed_forms(args.d, args.a, args.m)
        out, rows = {}, []
        for name, mons in spaces.items():
            brute = hm.hilbert_mu(hm.HilbertPoint.from_monomials(args.d, args.m, mons), lam) \
                if mons else Fraction(0)
            cf = getattr(closed, f"{name}_sum")
            if brute != cf:
                raise InvariantViolation("closed form disagrees with hilbert_mu", space=name,
                                         closed=qstr(cf), brute=qstr(brute))
            out[name] = {"hilbert_mu": qstr(brute), "closed_form": qstr(cf)}
            rows.append([name, qstr(brute), qstr(cf)])
        return out, _table(["space", "hilbert_mu", "closed form"], rows)
    rep = hm.certify_propssci()
    if not rep.ok:
        raise InvariantViolation("instability certificate failed")
    data = {"grid": [{"d": d, "a": a, "m": m, "P": qstr(p)} for d, a, m, p in rep.grid],
            "oracle": [{"d": d, "a": a, "m": m, "space": n, "closed": qstr(c), "brute": qstr(b)}
                       for d, a, m, n, c, b in rep.oracle], "ok": rep.ok}
    rows = [[d, a, m, n, qstr(c), qstr(b)] for d, a, m, n, c, b in rep.oracle]
    return data, _table(["d", "a", "m", "space", "closed", "brute"], rows)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="artifact", description="Exact GIT / lattice workbench.")
    ap.add_argument("--manifest", action="store_true", help="also print the run manifest")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="JSON output")
        g.add_argument("--table", action="store_true", help="aligned text table (default)")

    w = sub.add_parser("walls", help="critical slopes and certificates")
    ws = w.add_subparsers(dest="action", required=True)
    p = ws.add_parser("find")
    p.add_argument("--delta", type=_rational, default=Fraction(1, 10))
    p.add_argument("--all", action="store_true", help="include excluded candidates in JSON")
    fmt(p)
    p = ws.add_parser("certify")
    p.add_argument("--tag", type=int, choices=range(8))
    fmt(p)
    fmt(ws.add_parser("half"))
    p = ws.add_parser("ladder", help="W and Z stratification chains")
    p.add_argument("--dot", action="store_true")
    fmt(p)

    c = sub.add_parser("classify", help="classify a curve singularity")
    c.add_argument("--f2", required=True)
    c.add_argument("--f4", required=True)
    c.add_argument("--at", choices=("smooth-point", "vertex"), default="smooth-point")
    c.add_argument("--truncation", type=int, default=singularities.DEFAULT_TRUNCATION)
    fmt(c)

    b = sub.add_parser("basin", help="Luna slice weights")
    bs = b.add_subparsers(dest="action", required=True)
    p = bs.add_parser("weights")
    p.add_argument("--tag", type=int, required=True, choices=basin.DIMENSION_LAW_TAGS)
    fmt(p)
    fmt(bs.add_parser("check-dimensions"))
    fmt(bs.add_parser("versal"))

    lt = sub.add_parser("lattice", help="lattice census and checks")
    ls = lt.add_subparsers(dest="action", required=True)
    p = ls.add_parser("census")
    p.add_argument("--N", type=int, choices=range(3, 21))
    p.add_argument("--dot", action="store_true")
    fmt(p)
    fmt(ls.add_parser("verify-classifydn"))
    p = ls.add_parser("chain")
    p.add_argument("--k", type=int, default=8, choices=range(2, 17))
    fmt(p)

    d = sub.add_parser("divisors", help="divisor class bookkeeping")
    ds = d.add_subparsers(dest="action", required=True)
    fmt(ds.add_parser("walls"))
    fmt(ds.add_parser("verify"))
    p = ds.add_parser("hilbert-slope")
    p.add_argument("--m", type=_range, default=range(4, 41))
    fmt(p)

    h = sub.add_parser("hm", help="Hilbert-Mumford indices")
    hs = h.add_subparsers(dest="action", required=True)
    p = hs.add_parser("mu")
    p.add_argument("--lambda", dest="lam", type=_lambda, required=True)
    p.add_argument("--f", help="a single form")
    p.add_argument("--f2")
    p.add_argument("--f4")
    p.add_argument("--t", type=_rational)
    fmt(p)
    p = hs.add_parser("hilbert-mu")
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--m", type=int, default=5)
    fmt(p)
    fmt(hs.add_parser("certify-propssci"))
    return ap


HANDLERS: dict[str, Callable] = {"walls": cmd_walls, "classify": cmd_classify, "basin": cmd_basin,
                                 "lattice": cmd_lattice, "divisors": cmd_divisors, "hm": cmd_hm}


def _source_hash() -> str:
    h = hashlib.sha256()
    for f in sorted(Path(__file__).parent.glob("*.py")):
        h.update(f.read_bytes())
    return h.hexdigest()


def _jsonable(x):
    if isinstance(x, Fraction):
        return qstr(x)
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def run(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "m", None) is not None and isinstance(args.m, range) and len(args.m) == 0:
        parser.print_usage(err)
        return 2
    start = time.perf_counter()
    try:
        data, table = HANDLERS[args.command](args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(err)
        print(f"artifact: error: {exc}", file=err)
        return 2
    except (InvariantViolation, AssertionError) as exc:
        diag = {"error": "invariant violation", "command": args.command, "message": str(exc),
                "details": getattr(exc, "details", {})}
        print(json.dumps(diag, default=_jsonable, indent=2), file=err)
        return 1
    if getattr(args, "json", False) or (table is None):
        text = json.dumps(data, default=_jsonable, indent=2) + "\n" if data is not None else table
    else:
        text = table
    out.write(text)
    if args.manifest:
        params = {k: (qstr(v) if isinstance(v, Fraction) else
                      v.to_json() if isinstance(v, OnePS) else
                      f"{v.start}..{v.stop - 1}" if isinstance(v, range) else v)
                  for k, v in sorted(vars(args).items()) if k != "manifest"}
        manifest = {"command": args.command, "parameters": params,
                    "artifact_hashes": {"output_sha256": hashlib.sha256(text.encode()).hexdigest(),
                                        "source_sha256": _source_hash()},
                    "truncation": {"default": singularities.DEFAULT_TRUNCATION,
                                   "env": os.environ.get("ARTIFACT_TRUNCATION"),
                                   "stability_step": singularities.STABILITY_STEP},
                    "wall_clock_seconds": round(time.perf_counter() - start, 3)}
        print(json.dumps({"manifest": manifest}, indent=2), file=err)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
