"""Command-line entry point: ``matroidkl compute|check|solve``.

Exit codes: 0 all checks pass, 1 usage or cross-check error, 2 a
falsification was found, 3 a resource budget was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import equivariant as eq
from .corpus import family_corpus
from .kl import kl_braid_type, kl_polynomial, kl_thagomizer_closed, kl_uniform_type
from .lattice import LatticeTooLarge
from .matroid import MatroidError, SpecError, parse_spec
from .sweep import CHECKS, check_one, run_sweep

FAMILIES = ("uniform", "thagomizer", "k2n", "braid", "graphic")
SOLVERS = ("uniform", "uniform-eq", "thag", "thag-eq", "braid", "braid-eq")
SOLVE_DEFAULT_MAX = {"uniform": 12, "uniform-eq": 8, "thag": 10, "thag-eq": 8, "braid": 20, "braid-eq": 6}


class CrossCheckError(RuntimeError):
    pass


def _csv_list(text, allowed=None, what="value"):
    items = [x.strip() for x in text.split(",") if x.strip()]
    if allowed is not None:
        bad = [x for x in items if x not in allowed]
        if bad:
            raise argparse.ArgumentTypeError(f"unknown {what}: {', '.join(bad)}")
    return items


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1, ensure_ascii=False)


# ------------------------------------------------------------ compute

def _equivariant_for(M):
    fam = M.family
    if fam is None:
        return None
    kind = fam[0]
    if kind == "uniform":
        return eq.uniform_equivariant_kl(fam[1], fam[2]) if fam[2] >= 1 else None
    if kind == "thagomizer":
        return eq.solve_thagomizer_fe(fam[1], True)[fam[1]]
    if kind == "braid" and fam[1] <= 8:
        return eq.solve_braid_fe(max(fam[1], 1), True)[fam[1]]
    return None


def cmd_compute(args) -> int:
    rows = []
    for spec in args.specs:
        M = parse_spec(spec)
        row = check_one(spec, args.checks) if args.checks else None
        res = kl_polynomial(M)
        out = {"spec": spec, "rank": res.matroid_rank, "kl": res.polynomial.to_list(), "method": res.method,
               "checks": row["checks"] if row else {}, "notes": list(res.notes)}
        if args.equivariant:
            ekl = _equivariant_for(M)
            if ekl is None:
                out["notes"].append("equivariant: unsupported for this matroid")
            else:
                out["equivariant"] = [{"t_degree": i, "schur": c.to_json_obj()} for i, c in enumerate(ekl.coefficients)]
        rows.append(out)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["spec", "rank", "method", "kl"] + list(args.checks or []))
        for r in rows:
            w.writerow([r["spec"], r["rank"], r["method"], " ".join(map(str, r["kl"]))]
                       + [r["checks"].get(c, "") for c in args.checks or []])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(_dump(rows[0] if len(rows) == 1 else rows), args.out)
    if any(v == "fail" for r in rows for v in r["checks"].values()):
        return 2
    return 0


# ------------------------------------------------------------ check

def cmd_check(args) -> int:
    specs = [s for s, _ in family_corpus(args.families, args.max, args.edges)]
    specs.extend(args.spec or [])
    label = f"families={','.join(args.families)} max={args.max} edges={args.edges}"
    report = run_sweep(specs, args.checks, jobs=args.jobs, corpus=label)
    _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
    return report.exit_code


# ------------------------------------------------------------ solve

def _poly_rows(table, family, reference):
    rows, bad = [], []
    for key in sorted(table):
        P = table[key]
        ref = reference(key)
        if ref is not None and ref != P:
            bad.append(f"{family} {key}: functional equation {P.to_list()} vs independent {ref.to_list()}")
        rows.append({"key": list(key) if isinstance(key, tuple) else key, "kl": P.to_list()})
    return rows, bad


def _eq_rows(table, family, reference):
    rows, bad = [], []
    for key in sorted(table):
        ekl = table[key]
        dim = ekl.graded_dimension()
        ref = reference(key)
        if dim != ref:
            bad.append(f"{family} {key}: graded dimension {dim.to_list()} vs {ref.to_list()}")
        if not eq.equivariant_positivity_check(ekl):
            bad.append(f"{family} {key}: not Schur positive")
        rows.append({"key": list(key) if isinstance(key, tuple) else key, "kl": dim.to_list(),
                     "equivariant": [{"t_degree": i, "schur": c.to_json_obj()}
                                     for i, c in enumerate(ekl.coefficients)]})
    return rows, bad


def cmd_solve(args) -> int:
    name = args.fe
    n = args.max if args.max is not None else SOLVE_DEFAULT_MAX[name]
    result = {"fe": name, "max": n}
    if name in ("uniform", "uniform-eq"):
        x_order, u_order = args.orders if args.orders else (n - 1, n)
        equiv = name == "uniform-eq"
        if equiv and n > 8:
            raise CrossCheckError("uniform-eq supports --max <= 8")
        table = eq.solve_uniform_fe(x_order, u_order, equiv, max_total=n)
        if equiv:
            rows, bad = _eq_rows(table, name, lambda k: kl_uniform_type(*k).polynomial)
            for key in sorted(table):
                if table[key] != eq.uniform_equivariant_kl(*key):
                    bad.append(f"{name} {key}: solve differs from the closed form")
        else:
            rows, bad = _poly_rows(table, name, lambda k: kl_uniform_type(*k).polynomial)
    elif name in ("thag", "thag-eq"):
        table = eq.solve_thagomizer_fe(n, name == "thag-eq")
        ref = lambda k: kl_thagomizer_closed(k)  # noqa: E731
        rows, bad = (_eq_rows if name == "thag-eq" else _poly_rows)(table, name, ref)
    else:
        table = eq.solve_braid_fe(n, name == "braid-eq")
        ref = lambda k: kl_braid_type(k).polynomial  # noqa: E731
        rows, bad = (_eq_rows if name == "braid-eq" else _poly_rows)(table, name, ref)
    if args.check_gf:
        if not name.startswith("braid"):
            raise CrossCheckError("--check-gf applies to the braid solver")
        gf = [eq.braid_coefficient_gf_check(i, args.gf_order) for i in args.check_gf]
        result["gf"] = [{k: g[k] for k in ("i", "n_max", "match", "first_mismatch")} for g in gf]
        bad.extend(f"generating function for t^{g['i']} mismatches at z^{g['first_mismatch']}"
                   for g in gf if not g["match"])
    result["table"] = rows
    result["cross_check"] = "fail" if bad else "pass"
    if bad:
        result["diagnostics"] = bad
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["fe", "key", "kl"])
        for r in rows:
            key = r["key"] if not isinstance(r["key"], list) else ",".join(map(str, r["key"]))
            w.writerow([name, key, " ".join(map(str, r["kl"]))])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(_dump(result), args.out)
    if bad:
        for b in bad:
            print(f"cross-check failed: {b}", file=sys.stderr)
        return 1
    return 0


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="matroidkl", description="Kazhdan-Lusztig polynomials of matroids")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", metavar="PATH")

    c = sub.add_parser("compute", help="KL polynomial of one or more matroid specs")
    c.add_argument("specs", nargs="+", metavar="SPEC")
    c.add_argument("--equivariant", action="store_true")
    c.add_argument("--checks", type=lambda s: _csv_list(s, CHECKS, "check"))
    common(c)
    c.set_defaults(func=cmd_compute)

    k = sub.add_parser("check", help="run conjecture checks over a corpus")
    k.add_argument("--families", type=lambda s: _csv_list(s, FAMILIES, "family"), default=["uniform"])
    k.add_argument("--max", type=int, default=8)
    k.add_argument("--edges", type=int, default=8)
    k.add_argument("--checks", type=lambda s: _csv_list(s, CHECKS, "check"), default=list(CHECKS))
    k.add_argument("--spec", action="append", help="extra matroid spec, e.g. linear:PATH:p")
    k.add_argument("--jobs", type=int, default=1)
    common(k)
    k.set_defaults(func=cmd_check)

    s = sub.add_parser("solve", help="solve a generating-function equation order by order")
    s.add_argument("fe", choices=SOLVERS)
    s.add_argument("--max", type=int)
    s.add_argument("--orders", type=lambda s: tuple(int(x) for x in s.split(",")),
                   help="x_order,u_order for the uniform solvers")
    s.add_argument("--check-gf", type=lambda s: [int(x) for x in _csv_list(s)])
    s.add_argument("--gf-order", type=int, default=14)
    common(s)
    s.set_defaults(func=cmd_solve)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LatticeTooLarge as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (MatroidError, CrossCheckError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
