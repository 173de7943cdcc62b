"""Command-line frontend: decide, scan, base, family, audit, verify.

Output formats are text (default), json and csv.  JSON output is
schema-versioned and serializes every mathematical integer as a decimal
string so arbitrary precision survives any consumer.  Exit codes: 0 the
run completed, 2 a precondition or parse error was rejected, 3 an audit or
verification found a discrepancy.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .base_solutions import enumerate_base_solutions
from .families import FamilySolution, RoleTriple, minus_family, plus_family
from .qpoly import RationalPoly
from .scan_audit import (
    AuditReport,
    audit_condition_i,
    audit_corollary3,
    audit_corollary4,
    scan_residues,
)
from .theorem import (
    DecisionOutcome,
    PolyTriple,
    ResidueClass,
    analyze_degrees,
    decide,
    identity_residual,
    search_condition_iii,
    solve_condition_ii,
    verify_identity,
)

SCHEMA_VERSION = 1
DEFAULT_T_MAX = 10_000
DEFAULT_BOUND = 200

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_DISCREPANCY = 3


# ---------------------------------------------------------------- payloads

def _poly_json(p: RationalPoly) -> list[str]:
    return p.to_coeff_strings()


def _params_json(ps) -> dict:
    return {"k": str(ps.k), "l": str(ps.l), "s": str(ps.s), "r": str(ps.r)}


def _outcome_json(outcome: DecisionOutcome, t_max: int | None = None) -> dict:
    rc = outcome.rc
    payload = {
        "m": str(rc.m),
        "n0": str(rc.n0),
        "n1": str(rc.n1),
        "status": outcome.status,
        "kl_pairs": [{"k": str(k), "l": str(l)} for k, l in outcome.kl_pairs],
        "solutions": [
            {
                "params": _params_json(ps),
                "x": _poly_json(pt.x),
                "y": _poly_json(pt.y),
                "z": _poly_json(pt.z),
            }
            for ps, pt in outcome.solutions
        ],
        "evidence": [
            {
                "k": str(ev.k),
                "l": str(ev.l),
                "s0": str(ev.s0),
                "r0": str(ev.r0),
                "family": ev.family,
                "reason": ev.reason,
            }
            for ev in outcome.evidence
        ],
    }
    if t_max is not None and not outcome.is_solvable():
        searches = []
        for ev in outcome.evidence:
            fam = solve_condition_ii(rc, ev.k, ev.l)
            hit = search_condition_iii(fam, t_max)
            searches.append(
                {
                    "k": str(ev.k),
                    "l": str(ev.l),
                    "t_max": str(t_max),
                    "found": _params_json(hit) if hit else None,
                }
            )
        payload["family_search"] = searches
    return payload


def _outcome_text(outcome: DecisionOutcome) -> list[str]:
    rc = outcome.rc
    lines = [f"{rc.m}/({rc.n0} + {rc.n1}λ) = 1/x + 1/y + 1/z : {outcome.status}"]
    if outcome.kl_pairs:
        pairs = ", ".join(f"(k={k}, l={l})" for k, l in outcome.kl_pairs)
        lines.append(f"condition i admits: {pairs}")
    else:
        lines.append("condition i admits no (k, l); unsolvable for every residue")
    for i, (ps, pt) in enumerate(outcome.solutions, 1):
        lines.append(f"solution {i}: (k, l, s, r) = ({ps.k}, {ps.l}, {ps.s}, {ps.r})")
        lines.append(f"  x = {pt.x.format_text()}")
        lines.append(f"  y = {pt.y.format_text()}")
        lines.append(f"  z = {pt.z.format_text()}")
    for ev in outcome.evidence:
        lines.append(f"(k={ev.k}, l={ev.l}): family {ev.family}; {ev.reason}")
    return lines


def _poly_csv_row(tag: dict, name: str, p: RationalPoly) -> dict:
    row = dict(tag)
    row["poly"] = name
    row["degree"] = "" if p.degree is None else str(p.degree)
    for i, c in enumerate(p.coeffs):
        row[f"c{i}"] = str(c)
    return row


def _emit_csv(rows: list[dict], stream) -> None:
    fields: list[str] = []
    for row in rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    writer = csv.DictWriter(stream, fieldnames=fields)
    writer.writeheader()
    writer.writerows(rows)


def _emit(args, payload: dict, text_lines: list[str], csv_rows: list[dict]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        _emit_csv(csv_rows, buf)
        sys.stdout.write(buf.getvalue())
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------- commands

def cmd_decide(args) -> int:
    rc = ResidueClass(args.m, args.n0, args.n1)
    outcome = decide(rc)
    payload = {"schema_version": SCHEMA_VERSION, "command": "decide"}
    payload.update(_outcome_json(outcome, t_max=args.t_max))
    csv_rows = []
    if outcome.solutions:
        for ps, pt in outcome.solutions:
            tag = {"status": outcome.status, "k": str(ps.k), "l": str(ps.l),
                   "s": str(ps.s), "r": str(ps.r)}
            for name in ("x", "y", "z"):
                csv_rows.append(_poly_csv_row(tag, name, getattr(pt, name)))
    else:
        csv_rows.append({"status": outcome.status})
    _emit(args, payload, _outcome_text(outcome), csv_rows)
    return EXIT_OK


def cmd_base(args) -> int:
    triples = enumerate_base_solutions(args.m, args.n0)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "base",
        "m": str(args.m),
        "n0": str(args.n0),
        "triples": [[str(t.a), str(t.b), str(t.c)] for t in triples],
    }
    text = [f"{args.m}/{args.n0} = 1/a + 1/b + 1/c : {len(triples)} solution(s)"]
    text += [f"  {{{t.a}, {t.b}, {t.c}}}" for t in triples]
    csv_rows = [{"a": str(t.a), "b": str(t.b), "c": str(t.c)} for t in triples]
    _emit(args, payload, text, csv_rows)
    return EXIT_OK


def cmd_scan(args) -> int:
    residues = None
    if args.residues:
        residues = [int(tok) for tok in args.residues.split(",")]
    report = scan_residues(args.m, args.n1, residues=residues, jobs=args.jobs)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "scan",
        "m": str(report.m),
        "n1": str(report.n1),
        "rows": [_outcome_json(row.outcome) for row in report.rows],
        "admissible": [str(n0) for n0 in report.admissible],
        "summary": {k: str(v) for k, v in report.summary.items()},
    }
    text = [f"scan m = {report.m}, modulus n1 = {report.n1}"]
    for row in report.rows:
        n_sol = len(row.outcome.solutions)
        suffix = f" ({n_sol} solution(s))" if n_sol else ""
        text.append(f"  n0 = {row.n0}: {row.outcome.status}{suffix}")
    text.append(f"admissible residues: {list(report.admissible)}")
    text.append(f"summary: {report.summary}")
    csv_rows = [
        {"n0": str(row.n0), "status": row.outcome.status,
         "solutions": str(len(row.outcome.solutions))}
        for row in report.rows
    ]
    _emit(args, payload, text, csv_rows)
    return EXIT_OK


def cmd_family(args) -> int:
    rc = ResidueClass(args.m, args.n0, args.n1)
    base = [int(tok) for tok in args.base.split(",")]
    roles = [tok.strip() for tok in args.roles.split(",")]
    if len(base) != 3 or sorted(roles) != ["x0", "y0", "z0"]:
        raise ValueError("--base needs three integers and --roles a permutation of x0,y0,z0")
    assignment = dict(zip(roles, base))
    rt = RoleTriple(x0=assignment["x0"], y0=assignment["y0"], z0=assignment["z0"])
    fam: FamilySolution = (plus_family if args.branch == "plus" else minus_family)(rc, rt)
    pt = fam.triple
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "family",
        "m": str(rc.m),
        "n0": str(rc.n0),
        "n1": str(rc.n1),
        "branch": fam.branch,
        "roles": {"x0": str(rt.x0), "y0": str(rt.y0), "z0": str(rt.z0)},
        "x": _poly_json(pt.x),
        "y": _poly_json(pt.y),
        "z": _poly_json(pt.z),
        "integral": fam.integral,
        "degenerate": fam.degenerate,
    }
    text = [
        f"{fam.branch} family at (x0, y0, z0) = ({rt.x0}, {rt.y0}, {rt.z0})",
        f"  x = {pt.x.format_text()}",
        f"  y = {pt.y.format_text()}",
        f"  z = {pt.z.format_text()}",
        f"  integer coefficients: {'yes' if fam.integral else 'no'}",
    ]
    tag = {"branch": fam.branch, "integral": str(fam.integral).lower()}
    csv_rows = [_poly_csv_row(tag, name, getattr(pt, name)) for name in ("x", "y", "z")]
    _emit(args, payload, text, csv_rows)
    return EXIT_OK


def cmd_audit(args) -> int:
    runner = {
        "i": audit_condition_i,
        "3": audit_corollary3,
        "4": audit_corollary4,
    }[args.corollary]
    report: AuditReport = runner(args.m, args.bound)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "audit",
        "audit": report.audit,
        "m": str(report.m),
        "bound": str(report.bound),
        "has_discrepancy": report.has_discrepancy,
        "instances": [
            {
                "p": str(inst.prime),
                "verdict": inst.verdict,
                "detail": inst.detail,
                "kl_pairs": [{"k": str(k), "l": str(l)} for k, l in inst.kl_pairs],
                "witnesses": [_outcome_json(w) for w in inst.witnesses],
            }
            for inst in report.instances
        ],
    }
    text = [f"audit {report.audit}, m = {report.m}, primes <= {report.bound}"]
    for inst in report.instances:
        text.append(f"  p = {inst.prime}: {inst.verdict} ({inst.detail})")
    text.append("discrepancies found" if report.has_discrepancy else "all consistent")
    csv_rows = [
        {"p": str(inst.prime), "verdict": inst.verdict, "detail": inst.detail}
        for inst in report.instances
    ]
    _emit(args, payload, text, csv_rows)
    return EXIT_DISCREPANCY if report.has_discrepancy else EXIT_OK


def _load_triple(path: str) -> PolyTriple:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON at line {exc.lineno}: {exc.msg}") from exc
    polys = {}
    for name in ("x", "y", "z"):
        if name not in raw:
            raise ValueError(f"{path}: missing field {name!r}")
        coeffs = raw[name]
        if not isinstance(coeffs, list) or not all(isinstance(c, str) for c in coeffs):
            raise ValueError(f"{path}: field {name!r} must be a list of coefficient strings")
        try:
            polys[name] = RationalPoly.from_coeff_strings(coeffs)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"{path}: field {name!r}: {exc}") from exc
        if polys[name].is_zero():
            raise ValueError(f"{path}: field {name!r} is the zero polynomial")
    return PolyTriple(x=polys["x"], y=polys["y"], z=polys["z"])


def cmd_verify(args) -> int:
    rc = ResidueClass(args.m, args.n0, args.n1)
    pt = _load_triple(args.file)
    residual = identity_residual(rc, pt)
    integral = {name: getattr(pt, name).is_positive_integral() for name in ("x", "y", "z")}
    ok = verify_identity(rc, pt)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "m": str(rc.m),
        "n0": str(rc.n0),
        "n1": str(rc.n1),
        "verified": ok,
        "identity_holds": residual.is_zero(),
        "integral": integral,
        "degrees": {name: str(getattr(pt, name).degree) for name in ("x", "y", "z")},
    }
    if ok:
        report = analyze_degrees(rc, pt)
        payload["degree_pattern"] = [str(d) for d in report.degrees]
        payload["aux_degree"] = str(report.aux_degree)
        text = [
            "verified",
            f"degree pattern: {list(report.degrees)}",
        ]
    else:
        text = []
        if not residual.is_zero():
            payload["residual"] = _poly_json(residual)
            text.append("identity fails")
            text.append(f"residual m*x*y*z - n*(xy + xz + yz) = {residual.format_text()}")
        bad = [name for name, good in integral.items() if not good]
        if bad:
            text.append(f"not positive-integral: {', '.join(bad)}")
        if not text:
            text.append("verification failed")
    tag = {"verified": str(ok).lower()}
    csv_rows = [_poly_csv_row(tag, name, getattr(pt, name)) for name in ("x", "y", "z")]
    _emit(args, payload, text, csv_rows)
    return EXIT_OK if ok else EXIT_DISCREPANCY


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifrac",
        description="Integer polynomial solutions of m/(n0 + n1*t) = 1/x + 1/y + 1/z",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("decide", help="decide one residue class and construct all solutions")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--t-max", type=int, default=DEFAULT_T_MAX,
                   help="bound for the corroborating family search on unsolvable outcomes")
    add_format(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("base", help="enumerate positive triples with 1/a + 1/b + 1/c = m/n0")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_base)

    p = sub.add_parser("scan", help="run decide over every residue coprime to the modulus")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--residues", help="comma-separated subset of residues to scan")
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("family", help="build the plus or minus rational family from a base triple")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--base", required=True, help="three members, e.g. 2,7,14")
    p.add_argument("--roles", default="x0,y0,z0",
                   help="role of each --base entry, a permutation of x0,y0,z0")
    p.add_argument("--branch", choices=("plus", "minus"), required=True)
    add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("audit", help="audit the exclusion rules empirically")
    p.add_argument("--corollary", choices=("i", "3", "4"), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    add_format(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("verify", help="verify an externally supplied polynomial triple")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--file", required=True, help="JSON file with x, y, z coefficient strings")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
