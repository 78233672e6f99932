"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace

from . import certify
from .codes import build_code, delta_profile, export_generator, search_min_distance
from .errors import InvalidInput, ResourceLimit
from .invariants import invariant_report, reg_delta, standard_indicator, v_point
from .oracle import v_point_oracle
from .variety import NestedSequence, cardinality, parse_point, validate_sequence


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from exc


def _sequence(args) -> NestedSequence:
    return validate_sequence(args.p, args.d, args.q, args.modulus)


def _emit(obj, fmt: str, text: str, csv_rows: list[list] | None = None) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    elif fmt == "csv" and csv_rows is not None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        print(buf.getvalue(), end="")
    else:
        print(text)


def cmd_invariants(args) -> int:
    seq = _sequence(args)
    report = invariant_report(seq)
    if args.oracle:
        report = replace(report, oracle_agreement=certify.oracle_agreement(seq))
    d = report.to_dict()
    lines = [
        f"sequence          {seq}",
        f"q                 {report.q}",
        f"|X|               {report.cardinality}",
        f"reg H_X           {report.reg_hilbert}",
        f"reg delta_X       {report.reg_delta}",
        f"m_1..m_n          {list(report.m_values)}",
        "v_e0..v_en        " + str(list(report.v_units)),
        f"Cayley-Bacharach  {str(report.cayley_bacharach).lower()}",
    ]
    if report.oracle_agreement is not None:
        for k, v in report.oracle_agreement.items():
            lines.append(f"oracle {k:<11}{v['agree']}/{v['total']} agree")
    header = ["sequence"] + [f"v_e{j}" for j in range(seq.nvars)] + ["cardinality", "reg_hilbert", "reg_delta"]
    row = [" ".join(map(str, seq.sizes))] + list(report.v_units) + [
        report.cardinality, report.reg_hilbert, report.reg_delta]
    _emit(d, args.format, "\n".join(lines), [header, row])
    if report.oracle_agreement is not None and not certify.all_agree(report.oracle_agreement):
        return 1
    return 0


def cmd_indicator(args) -> int:
    seq = _sequence(args)
    P = parse_point(seq, args.point)
    verify = args.verify and cardinality(seq) <= 10**5
    res = standard_indicator(seq, P, verify=verify)
    F = seq.field
    out = {
        "point": P.format(F),
        "pivot": P.pivot,
        "v_point": res.v,
        "degree": res.degree,
        "raw": res.raw.format(),
    }
    lines = [f"point     {P.format(F)}", f"pivot     {P.pivot}", f"v_P       {res.v}",
             f"degree    {res.raw.degree}", f"raw       {res.raw.format()}"]
    if args.standard:
        out["standard"] = res.standard.format()
        lines.append(f"standard  {res.standard.format()}")
    if res.verified is not None:
        out["verified"] = res.verified
        lines.append(f"verified  {str(res.verified).lower()}")
    _emit(out, args.format, "\n".join(lines))
    return 0 if res.verified in (None, True) else 1


def cmd_min_distance(args) -> int:
    seq = _sequence(args)
    try:
        code = build_code(seq, args.degree)
        result = search_min_distance(code, threads=args.threads, cap=args.cap)
    except ResourceLimit as exc:
        rd = reg_delta(seq)
        verdict = (f"delta_X({args.degree}) = 1 since d >= reg(delta_X) = {rd}"
                   if args.degree >= rd else
                   f"delta_X({args.degree}) > 1 since d < reg(delta_X) = {rd}")
        print(f"error: {exc}", file=sys.stderr)
        print(verdict, file=sys.stderr)
        return 3
    out = {"sequence": list(seq.sizes), "degree": args.degree, "dimension": code.dimension,
           "min_distance": result.min_distance, "classes": result.classes,
           "seconds": round(result.seconds, 3)}
    text = (f"delta_X({args.degree}) = {result.min_distance}\n"
            f"dimension {code.dimension}, {result.classes} message classes searched "
            f"in {result.seconds:.3f} s")
    _emit(out, args.format, text)
    return 0


def cmd_profile(args) -> int:
    seq = _sequence(args)
    prof = delta_profile(seq, args.max_degree, threads=args.threads)
    _emit([{"degree": d, "delta": v} for d, v in prof], args.format,
          "\n".join(f"{d}\t{v}" for d, v in prof),
          [["degree", "delta"]] + [[d, v] for d, v in prof])
    return 0


def cmd_generator(args) -> int:
    seq = _sequence(args)
    sys.stdout.write(export_generator(build_code(seq, args.degree)))
    return 0


def cmd_verify_tables(args) -> int:
    tables = [1, 2, 3] if args.table == "all" else [int(args.table)]
    bad = []
    records = []
    for t in tables:
        cells = certify.verify_table(t, use_oracle=not args.no_oracle, threads=args.threads)
        records.extend(cells)
        passed = sum(c.ok for c in cells)
        if args.format == "text":
            print(f"Table {t}")
            rows: dict[tuple[str, str], list] = {}
            for c in cells:
                rows.setdefault((c.row, c.method), []).append(c)
            for (row, method), cs in rows.items():
                body = "  ".join(f"{c.column}={c.got}" + ("" if c.ok else f"(expected {c.expected})")
                                 for c in cs)
                tag = f"[{method}]"
                print(f"  {row:<22} {tag:<13} {body}")
            print(f"  {passed}/{len(cells)} cells pass")
        bad.extend(c for c in cells if not c.ok)
    if args.format != "text":
        obj = [{"table": c.table, "row": c.row, "column": c.column, "expected": c.expected,
                "got": c.got, "method": c.method, "ok": c.ok} for c in records]
        _emit(obj, args.format, "", [["table", "row", "column", "expected", "got", "method", "ok"]]
              + [[c.table, c.row, c.column, c.expected, c.got, c.method, c.ok] for c in records])
    for c in bad:
        print(f"MISMATCH table {c.table} {c.row} {c.column}: expected {c.expected}, got {c.got}",
              file=sys.stderr)
    return 1 if bad else 0


def cmd_oracle(args) -> int:
    seq = _sequence(args)
    if args.point:
        P = parse_point(seq, args.point)
        v_o, v_f = v_point_oracle(seq, P), v_point(seq, P)
        _emit({"point": P.format(seq.field), "oracle": v_o, "formula": v_f},
              args.format, f"v_P oracle {v_o}, formula {v_f}: {'agree' if v_o == v_f else 'DISAGREE'}")
        return 0 if v_o == v_f else 1
    checks = certify.CHECKS if args.check == "all" else (args.check,)
    if args.all_points and args.check == "all":
        checks = ("v_point",)
    agreement = certify.oracle_agreement(seq, checks, args.max_degree)
    lines = [f"{k}: {v['agree']}/{v['total']} agree" for k, v in agreement.items()]
    _emit(agreement, args.format, "\n".join(lines))
    return 0 if certify.all_agree(agreement) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=None, help="characteristic (default: from d_0)")
    common.add_argument("--d", type=_ints, required=True, help="defining sequence d0,d1,...,dn")
    common.add_argument("--q", type=int, default=None, help="ambient field size (default d_n)")
    common.add_argument("--modulus", type=_ints, default=None,
                        help="modulus coefficients, constant term first")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="nestedcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="closed-form invariant report")
    p.add_argument("--oracle", action="store_true", help="attach oracle agreement counts")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("indicator", parents=[common], help="indicator function of a point")
    p.add_argument("--point", required=True, help="point in standard form, e.g. (0:1:a)")
    p.add_argument("--standard", action="store_true", help="also print the standard indicator")
    p.add_argument("--verify", action="store_true", help="check pointwise on X")
    p.set_defaults(func=cmd_indicator)

    p = sub.add_parser("min-distance", parents=[common], help="exhaustive delta_X(d)")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--cap", type=int, default=10**8, help="message-class search cap")
    p.set_defaults(func=cmd_min_distance)

    p = sub.add_parser("profile", parents=[common], help="delta_X(0..max-degree)")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("generator-matrix", parents=[common], help="export the generator matrix")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_generator)

    p = sub.add_parser("verify-tables", help="recompute the reference tables")
    p.add_argument("--table", choices=("1", "2", "3", "all"), default="all")
    p.add_argument("--no-oracle", action="store_true", help="formulas only for tables 1 and 3")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks")
    p.add_argument("--check", choices=("all",) + certify.CHECKS, default="all")
    p.add_argument("--all-points", action="store_true", help="per-point v_P agreement")
    p.add_argument("--point", default=None, help="check a single point")
    p.add_argument("--max-degree", type=int, default=None, help="top degree for the hilbert check")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
