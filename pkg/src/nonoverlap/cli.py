"""Command-line driver: ``nonoverlap {gen,count,verify,witness}``.

Exit codes: 0 success, 1 property violation or count disagreement,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from nonoverlap import counting
from nonoverlap.bitstrings import DomainError, format_strings, gen_V_family, parse_strings
from nonoverlap.dyck import gen_D_family
from nonoverlap.matrices import (
    BinaryMatrix,
    OverlapMode,
    build_D_matrix_family,
    build_V_matrix_family,
    format_matrices,
    format_matrices_json,
    parse_matrices,
)
from nonoverlap.verify import (
    FamilyParams,
    matrix_expansion_witnesses,
    reconcile_counts,
    string_expansion_witnesses,
    verification_report,
    verify_matrix_family,
    verify_string_set,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params(args, need_m: bool) -> FamilyParams:
    if args.family is None:
        raise UsageError("--family is required")
    if args.n is None:
        raise UsageError("--n is required")
    if need_m and args.m is None:
        raise UsageError("--m is required")
    if args.family == "v" and args.k is None:
        raise UsageError("family v needs --k")
    return FamilyParams(args.family, m=args.m, n=args.n, k=args.k)


def _build_strings(p: FamilyParams) -> list[str]:
    return gen_V_family(p.n, p.k) if p.family == "V" else gen_D_family(p.n)


def _build_matrices(p: FamilyParams) -> list[BinaryMatrix]:
    return build_V_matrix_family(p.m, p.n, p.k) if p.family == "V" else build_D_matrix_family(p.m, p.n)


def cmd_gen(args, out) -> int:
    p = _params(args, need_m=args.kind == "matrices")
    if args.kind == "strings":
        strings = _build_strings(p)
        if args.format == "json":
            out.write("".join(json.dumps({"bits": s}) + "\n" for s in strings))
        else:
            out.write(format_strings(strings))
    else:
        matrices = _build_matrices(p)
        if args.format == "json":
            out.write(format_matrices_json(matrices))
        else:
            out.write(format_matrices(matrices))
    return EXIT_OK


def cmd_count(args, out) -> int:
    p = _params(args, need_m=True)
    report = reconcile_counts(p) if args.compare else None
    if args.format == "json":
        if report is None:
            report = {"family": p.family, "params": p.to_json(), "totals": _closed_forms(p)}
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        for name, value in _closed_forms(p).items():
            out.write(f"{name}: {value}\n")
        if report is not None:
            _write_cells(report, out)
    if report is None:
        return EXIT_OK
    if p.family == "D" and report["agree"] and report["totals"]["published"] != report["totals"]["enumerated"]:
        print(
            f"warning: published formula gives {report['totals']['published']}, enumeration gives "
            f"{report['totals']['enumerated']}; the corrected formula is authoritative",
            file=sys.stderr,
        )
    return EXIT_OK if report["agree"] else EXIT_VIOLATION


def _closed_forms(p: FamilyParams) -> dict:
    if p.family == "V":
        bounds = counting.card_V_bounds(p.m, p.n, p.k)
        return {
            "closed_form": counting.card_V_matrices(p.m, p.n, p.k),
            "lower_bound": str(bounds.lower),
            "upper_bound": str(bounds.upper),
        }
    return {
        "corrected": counting.card_D_matrices(p.m, p.n, counting.CORRECTED),
        "published": counting.card_D_matrices(p.m, p.n, counting.PUBLISHED),
    }


def _write_cells(report: dict, out) -> None:
    d_family = report["family"] == "D"
    header = "rows cols enumerated " + ("corrected published" if d_family else "closed_form") + " status"
    out.write(header + "\n")
    for cell in report["cells"]:
        if d_family:
            values = f"{cell['corrected']} {cell['published']}"
            status = "agree" if cell["agree"] else "DISAGREE"
            if not cell["published_agrees"]:
                status += " (published differs)"
        else:
            values = str(cell["closed_form"])
            status = "agree" if cell["agree"] else "DISAGREE"
        out.write(f"{cell['rows']} {cell['cols']} {cell['enumerated']} {values} {status}\n")
    out.write(f"enumerated: {report['totals']['enumerated']}\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def parse_family_text(text: str, kind: str = "auto"):
    """Parse a string set or matrix family from text or newline-delimited JSON.

    Returns ("strings", list[str]) or ("matrices", list[BinaryMatrix]).
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise UsageError("empty input")
    if lines[0].startswith("{"):
        try:
            objs = [json.loads(line) for line in lines]
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed JSON: {exc}") from exc
        if all(isinstance(o, dict) and "rows" in o for o in objs) and kind != "strings":
            return "matrices", [BinaryMatrix(tuple(o["rows"])) for o in objs]
        if all(isinstance(o, dict) and "bits" in o for o in objs) and kind != "matrices":
            return "strings", [o["bits"] for o in objs]
        raise UsageError("JSON input must be all {\"rows\": ...} or all {\"bits\": ...} objects")
    if kind == "auto":
        blocks = [b for b in text.strip().split("\n\n") if b.strip()]
        kind = "matrices" if len(blocks) > 1 else "strings"
    if kind == "matrices":
        return "matrices", parse_matrices(text)
    return "strings", parse_strings(text)


def cmd_verify(args, out) -> int:
    mode = OverlapMode.parse(args.mode)
    if args.input is not None:
        kind, items = parse_family_text(_read_input(args.input), args.kind)
        family, params = "input", {"source": args.input}
    else:
        kind = args.kind if args.kind != "auto" else ("matrices" if args.m is not None else "strings")
        p = _params(args, need_m=kind == "matrices")
        items = _build_matrices(p) if kind == "matrices" else _build_strings(p)
        family, params = p.family, p.to_json()
    if kind == "matrices":
        violations = verify_matrix_family(items, mode)
        params = {**params, "mode": mode.value}
    else:
        violations = verify_string_set(items)
    if not violations:
        out.write("OK\n")
        return EXIT_OK
    out.write(json.dumps(verification_report(family, params, violations), sort_keys=True) + "\n")
    return EXIT_VIOLATION


def cmd_witness(args, out) -> int:
    if args.family != "v":
        raise UsageError("expansion witnesses are defined for family v only")
    if args.k is None or args.n is None:
        raise UsageError("--k and --n are required")
    if args.kind == "matrix":
        if args.m is None:
            raise UsageError("--m is required for matrix witnesses")
        outcomes = matrix_expansion_witnesses(args.m, args.n, args.k)
    else:
        outcomes = string_expansion_witnesses(args.n, args.k)
    for o in outcomes:
        cand = "/".join(o.candidate.rows) if isinstance(o.candidate, BinaryMatrix) else o.candidate
        out.write(f"{'PASS' if o.set_ok else 'FAIL'} {cand}\n")
    passed = sum(o.set_ok for o in outcomes)
    out.write(f"{passed}/{len(outcomes)} witnesses keep the family non-overlapping\n")
    return EXIT_OK if passed == len(outcomes) else EXIT_VIOLATION


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["v", "d"], type=str.lower)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonoverlap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a string or matrix family")
    gen.add_argument("kind", choices=["strings", "matrices"])
    _add_family_args(gen)
    gen.add_argument("--format", choices=["text", "json"], default="text")
    gen.set_defaults(func=cmd_gen)

    count = sub.add_parser("count", help="closed-form family sizes")
    _add_family_args(count)
    count.add_argument("--compare", action="store_true", help="also enumerate and compare per cell")
    count.add_argument("--format", choices=["text", "json"], default="text")
    count.set_defaults(func=cmd_count)

    verify = sub.add_parser("verify", help="check a family is non-overlapping")
    verify.add_argument("--input", help="file in text or JSON form, '-' for stdin")
    verify.add_argument("--kind", choices=["auto", "strings", "matrices"], default="auto")
    _add_family_args(verify)
    verify.add_argument("--mode", choices=["strict", "factor-tolerant"], default="strict")
    verify.set_defaults(func=cmd_verify)

    witness = sub.add_parser("witness", help="check non-expandability witnesses")
    _add_family_args(witness)
    witness.add_argument("--kind", choices=["string", "matrix"], default="string")
    witness.set_defaults(func=cmd_witness)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, DomainError) as exc:
        print(f"nonoverlap {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
