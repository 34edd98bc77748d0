"""Command-line front end: ``python3 -m shifted_kpq <command> ...``.

Exit codes: 0 success or passing check, 1 failing check, 2 usage error.
Partitions are written ``5,4,1``; the empty partition is ``-``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Sequence

from . import bender_knuth as bk
from .genfun import FAMILY_RULES, genfun
from .identities import (Residual, combine, expansion_table, operator_check, pieri_coeff,
                         pieri_coeff_oracle, structure_constants, verify_cauchy)
from .shapes import format_partition, parse_partition, shifted_diagram
from .tableaux import BarTableau, enumerate_tableaux, tableau_from_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ENUM_FAMILIES = {"svtp": "SVT_P", "svtq": "SVT_Q", "ppp": "PP_P", "ppq": "PP_Q",
                 "btp": "BT_P", "btq": "BT_Q"}
CAUCHY_KINDS = {"qp": "QP", "pq": "PQ", "skewp": "skewP", "skewq": "skewQ"}
COEFF_KINDS = {"ahat": "ahat", "bhat": "bhat_full", "chat": "chat_full", "a": "a", "b": "b"}


class UsageError(Exception):
    pass


def partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


# -- output ---------------------------------------------------------------

def emit(payload, fmt: str, out, rows: Sequence[dict] | None = None, text: str | None = None) -> None:
    """Write ``payload`` as JSON, ``rows`` as CSV, or ``text`` for pretty output."""
    if fmt == "json":
        json.dump(payload, out, indent=2, ensure_ascii=False)
        out.write("\n")
    elif fmt == "csv":
        rows = rows if rows is not None else [payload]
        buf = io.StringIO()
        fields: list[str] = []
        for r in rows:
            fields.extend(k for k in r if k not in fields)
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: _flat(v) for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        out.write((text if text is not None else json.dumps(payload, ensure_ascii=False)) + "\n")


def _flat(value) -> str:
    if isinstance(value, (list, tuple)):
        return format_partition(value) if all(isinstance(v, int) for v in value) else json.dumps(value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _residual_rows(res: Residual) -> list[dict]:
    row = res.to_json()
    return [{"check": row["check"], "status": row["status"], "residual_terms": row["residual_terms"],
             "max_checked_degree": row["max_checked_degree"], "params": row["params"]}]


def _residual_text(res: Residual) -> str:
    lines = [f"{res.check}: {res.status} (residual terms {len(res.value)}, "
             f"degree <= {res.max_checked_degree})"]
    lines += [f"  note: {n}" for n in res.notes]
    return "\n".join(lines)


def _status_code(res: Residual) -> int:
    return EXIT_OK if res.passed else EXIT_FAIL


# -- commands -------------------------------------------------------------

def cmd_genfun(args, out) -> int:
    poly = genfun(args.family, args.outer, args.inner, args.vars, args.max_deg)
    payload = {"family": args.family, "outer": list(args.outer), "inner": list(args.inner),
               "vars": args.vars, "polynomial": str(poly), **poly.to_json()}
    rows = [{"beta": t["beta"], "monomial": " ".join(f"{k}^{v}" for k, v in t["exps"].items()),
             "coef": t["coef"]} for t in payload["terms"]]
    emit(payload, args.format, out, rows, str(poly))
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    family = ENUM_FAMILIES[args.family]
    shape = shifted_diagram(args.outer, args.inner)
    if not shape.contained:
        raise UsageError(f"--inner {format_partition(args.inner)} does not fit in "
                         f"--outer {format_partition(args.outer)}")
    tabs = list(enumerate_tableaux(shape, family, args.max_value))
    if args.count_only:
        emit({"family": family, "count": len(tabs)}, args.format, out, text=str(len(tabs)))
        return EXIT_OK
    payload = {"family": family, "count": len(tabs), "tableaux": [t.to_json() for t in tabs]}
    text = "\n\n".join(t.pretty() if isinstance(t, BarTableau) else json.dumps(t.to_json()["cells"])
                       for t in tabs)
    rows = [{"index": n, "cells": t.to_json()["cells"]} for n, t in enumerate(tabs)]
    emit(payload, args.format, out, rows, text)
    return EXIT_OK


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def cmd_bk(args, out) -> int:
    try:
        tab = tableau_from_json(_read_json(args.input), "BT")
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"--in: cannot read a bar tableau ({exc})") from None
    trace: list = [] if args.trace else None
    cases: list = []
    if args.op == "swap":
        result = bk.swap_all(tab, trace)
    elif args.op == "unswap":
        result = bk.unswap_all(tab, trace)
    elif args.op == "reverse-weight":
        result = bk.reverse_weight(tab, cases)
    else:
        result = bk.tau(tab, args.k, trace)
    payload = {"op": args.op, "result": result.to_json()}
    if cases:
        payload["cases"] = cases
    if trace is not None:
        payload["trace"] = [t.to_json() for t in trace]
    text = result.pretty()
    if trace:
        text = "\n\n".join(t.pretty() for t in trace) + "\n\n=>\n" + text
    emit(payload, args.format, out, [{"op": args.op, "result": payload["result"]}], text)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.target == "cauchy":
        kind = CAUCHY_KINDS[args.kind]
        if kind in ("QP", "PQ") and (args.mu or args.nu):
            raise UsageError("--mu/--nu are only allowed with --kind skewp or skewq")
        res = verify_cauchy(kind, args.nx, args.ny, args.max_deg, args.mu, args.nu)
        emit(res.to_json(), args.format, out, _residual_rows(res), _residual_text(res))
        return _status_code(res)
    from .suite import run_suite
    results = run_suite(args.max_size, args.vars, args.only)
    total = combine("suite", results, {"max_size": args.max_size, "vars": args.vars})
    payload = {"status": total.status, "checks": [r.to_json() for r in results]}
    text = "\n".join(f"{r.status:<13} {r.check}" for r in results) + f"\n{'-' * 24}\n{total.status}"
    rows = [row for r in results for row in _residual_rows(r)]
    emit(payload, args.format, out, rows, text)
    return _status_code(total)


def cmd_pieri(args, out) -> int:
    ns = [args.n] if args.n is not None else range(0, sum(args.nu) + 1)
    rows = []
    for n in ns:
        row = {"kind": args.kind, "lambda": list(args.lam), "nu": list(args.nu), "n": n,
               "value": pieri_coeff(args.kind, args.lam, args.nu, n)}
        if args.oracle:
            row["oracle"] = pieri_coeff_oracle(args.kind, args.lam, args.nu, n)
        rows.append(row)
    agree = all(r["value"] == r.get("oracle", r["value"]) for r in rows)
    payload = {"kind": args.kind, "lambda": list(args.lam), "nu": list(args.nu),
               "total": sum(r["value"] for r in rows), "values": rows}
    if args.oracle:
        payload["status"] = "pass" if agree else "fail"
    text = "\n".join(f"n={r['n']}: {r['value']}" + (f" (oracle {r['oracle']})" if args.oracle else "")
                     for r in rows)
    emit(payload, args.format, out, rows, text)
    return EXIT_OK if agree else EXIT_FAIL


def _parse_params(items: Sequence[str]) -> dict[str, str]:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--params expects key=value, got {item!r}")
        params[key.strip()] = value.strip()
    return params


def _param_partition(params: dict, key: str):
    if key not in params:
        raise UsageError(f"--params needs {key}=...")
    try:
        return parse_partition(params[key])
    except ValueError as exc:
        raise UsageError(f"--params {key}: {exc}") from None


def cmd_coeffs(args, out) -> int:
    params = _parse_params(args.params)
    if args.kind in ("y", "z"):
        Lam, Psi = _param_partition(params, "Lambda"), _param_partition(params, "Psi")
        table = expansion_table(args.kind, Lam, Psi)
        rows = [{"n": n, "value": str(v)} for n, v in sorted(table.items())]
        payload = {"kind": args.kind, "Lambda": list(Lam), "Psi": list(Psi), "entries": rows}
        text = "\n".join(f"n={r['n']}: {r['value']}" for r in rows)
    else:
        lam, mu = _param_partition(params, "lambda"), _param_partition(params, "mu")
        cap = int(params["cap"]) if "cap" in params else None
        if args.kind in ("a", "b") and cap is None:
            raise UsageError("--params needs cap=... for kinds a and b")
        table = structure_constants(COEFF_KINDS[args.kind], lam, mu, cap)
        payload = table.to_json()
        rows = [{"nu": e["nu"], "value": e["value"]} for e in payload["entries"]]
        text = "\n".join(f"{format_partition(r['nu'])}: {r['value']}" for r in rows)
        if table.partial:
            text += f"\n(partial: |nu| <= {cap})"
    emit(payload, args.format, out, rows, text)
    return EXIT_OK


def cmd_ops(args, out) -> int:
    res = operator_check(args.kind, args.size_cap, args.deg_cap)
    emit(res.to_json(), args.format, out, _residual_rows(res), _residual_text(res))
    return _status_code(res)


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shifted-kpq",
                                     description="Shifted tableaux, K-theoretic Schur P/Q generating "
                                                 "functions and identity checks.")
    parser.add_argument("--seed", type=int, default=None, help="reserved; no command is randomized")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default="json"):
        p.add_argument("--format", choices=("json", "csv", "pretty"), default=default)

    p = sub.add_parser("genfun", help="generating polynomial of a family on a skew shape")
    p.add_argument("--family", choices=sorted(FAMILY_RULES), required=True)
    p.add_argument("--outer", type=partition_arg, required=True)
    p.add_argument("--inner", type=partition_arg, default=())
    p.add_argument("--vars", type=nonnegative, default=1)
    p.add_argument("--max-deg", type=nonnegative, default=None)
    common(p)
    p.set_defaults(run=cmd_genfun)

    p = sub.add_parser("enumerate", help="list the tableaux of a family")
    p.add_argument("--family", choices=sorted(ENUM_FAMILIES), required=True)
    p.add_argument("--outer", type=partition_arg, required=True)
    p.add_argument("--inner", type=partition_arg, default=())
    p.add_argument("--max-value", type=nonnegative, required=True)
    p.add_argument("--count-only", action="store_true")
    common(p)
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("bk", help="Bender-Knuth operations on a bar tableau read from JSON")
    p.add_argument("op", choices=("swap", "unswap", "reverse-weight", "tau"))
    p.add_argument("--in", dest="input", required=True, help="tableau JSON file, or - for stdin")
    p.add_argument("--k", type=positive, default=1)
    p.add_argument("--trace", action="store_true")
    common(p)
    p.set_defaults(run=cmd_bk)

    p = sub.add_parser("verify", help="identity checks")
    vsub = p.add_subparsers(dest="target", required=True)
    q = vsub.add_parser("cauchy")
    q.add_argument("--kind", choices=sorted(CAUCHY_KINDS), required=True)
    q.add_argument("--nx", type=nonnegative, default=2)
    q.add_argument("--ny", type=nonnegative, default=2)
    q.add_argument("--max-deg", type=nonnegative, default=6)
    q.add_argument("--mu", type=partition_arg, default=())
    q.add_argument("--nu", type=partition_arg, default=())
    common(q)
    q.set_defaults(run=cmd_verify)
    q = vsub.add_parser("suite")
    q.add_argument("--max-size", type=positive, default=8)
    q.add_argument("--vars", type=positive, default=4)
    q.add_argument("--only", action="append", default=None, help="run only the named check")
    common(q, "pretty")
    q.set_defaults(run=cmd_verify)

    p = sub.add_parser("pieri", help="Pieri coefficients counted by ribbon tableaux")
    p.add_argument("--kind", choices=("bhat", "chat"), required=True)
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    p.add_argument("--nu", type=partition_arg, required=True)
    p.add_argument("--n", type=nonnegative, default=None)
    p.add_argument("--oracle", action="store_true", help="also compute by basis expansion")
    common(p)
    p.set_defaults(run=cmd_pieri)

    p = sub.add_parser("coeffs", help="expansion coefficients and structure constants")
    p.add_argument("--kind", choices=("y", "z", *COEFF_KINDS), required=True)
    p.add_argument("--params", nargs="+", default=[],
                   help="Lambda=.. Psi=.. for y/z; lambda=.. mu=.. [cap=..] otherwise")
    common(p)
    p.set_defaults(run=cmd_coeffs)

    p = sub.add_parser("ops", help="operator identities")
    p.add_argument("--kind", choices=("inverse", "commute"), required=True)
    p.add_argument("--size-cap", type=positive, default=5)
    p.add_argument("--deg-cap", type=positive, default=3)
    common(p)
    p.set_defaults(run=cmd_ops)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    runner: Callable = args.run
    try:
        return runner(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
