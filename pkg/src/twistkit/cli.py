"""Command line front door.

Verbs: nf, eq, roots, theta-verify, theta-roots, hyperelliptic,
separation, report.  Exit codes: 0 when every check passes
(inconclusive evidence does not block), 1 when a check fails, 2 on
usage errors.  JSON output is deterministic: fixed key order, no
timestamps, so identical invocations emit identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import sl2, theta, words
from .braid import equals, equals_mod_center, left_normal_form

SCHEMA_VERSION = 1


def _dumps(payload) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)


def _write(text: str, out_path: str | None):
    if out_path is None:
        print(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _render_report(report: theta.Report) -> str:
    params = " ".join(f"{key}={value}" for key, value in report.params.items())
    lines = [
        f"[{report.experiment}] {params} engine={report.engine} "
        f"status={report.status}"
    ]
    lines.extend(
        f"  {check.name}: {check.status}  ({check.witness})"
        for check in report.checks
    )
    return "\n".join(lines)


def _document(reports: list[theta.Report]) -> dict:
    exit_status = 1 if any(r.status == "fail" for r in reports) else 0
    return {
        "schema_version": SCHEMA_VERSION,
        "reports": [r.as_dict() for r in reports],
        "exit_status": exit_status,
    }


def _finish_reports(args, reports: list[theta.Report]) -> int:
    doc = _document(reports)
    if args.format == "json":
        text = _dumps(doc)
    else:
        text = "\n\n".join(_render_report(r) for r in reports)
    _write(text, getattr(args, "out", None))
    return doc["exit_status"]


# ------------------------------------------------------------------- verbs

def _cmd_nf(args) -> int:
    word = words.parse_word(args.word, args.strands)
    form = left_normal_form(word)
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "nf",
            "strands": args.strands,
            "input": args.word,
            "power": form.power,
            "factors": [list(f) for f in form.factors],
            "canonical": str(form),
        }
        print(_dumps(payload))
    else:
        print(form)
    return 0


def _cmd_eq(args) -> int:
    left = words.parse_word(args.left, args.strands)
    right = words.parse_word(args.right, args.strands)
    same = (
        equals_mod_center(left, right) if args.mod_center else equals(left, right)
    )
    suffix = " mod center" if args.mod_center else ""
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "eq",
            "strands": args.strands,
            "left": args.left,
            "right": args.right,
            "mod_center": args.mod_center,
            "equal": same,
        }
        print(_dumps(payload))
    else:
        print(("equal" if same else "not equal") + suffix)
    return 0 if same else 1


def _cmd_roots(args) -> int:
    if args.matrix is not None:
        m = words.parse_matrix(args.matrix)
        try:
            cert = sl2.reduce_elliptic(m)
        except ValueError as err:
            print(f"not reducible: {err}", file=sys.stderr)
            return 1
        if args.format == "json":
            payload = {
                "schema_version": SCHEMA_VERSION,
                "command": "roots",
                "matrix": str(m),
                "canonical": str(cert.canonical),
                "conjugator": str(cert.conjugator),
            }
            print(_dumps(payload))
        else:
            print(f"{m} reduces to {cert.canonical} via {cert.conjugator}")
        return 0

    if args.power is None or args.bound is None:
        print(
            "error: census mode needs --power and --bound (or use --matrix)",
            file=sys.stderr,
        )
        return 2
    census = theta.root_census(args.power, args.bound)
    ok = not census.residue
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "roots",
            "power": census.power,
            "bound": census.bound,
            "classes": [
                {
                    "canonical": str(canonical),
                    "count": len(certs),
                    "members": [
                        {"matrix": str(c.source), "conjugator": str(c.conjugator)}
                        for c in certs
                    ],
                }
                for canonical, certs in census.buckets.items()
            ],
            "residue": [str(m) for m in census.residue],
            "status": "pass" if ok else "fail",
        }
        print(_dumps(payload))
    else:
        lines = [f"power {census.power}, bound {census.bound}: "
                 f"{census.total()} matrices"]
        lines.extend(
            f"  {canonical}: {len(certs)}"
            for canonical, certs in census.buckets.items()
        )
        lines.append(
            "residue: empty" if ok else f"residue: {len(census.residue)} unclassified"
        )
        print("\n".join(lines))
    return 0 if ok else 1


def _cmd_theta_verify(args) -> int:
    return _finish_reports(args, [theta.check_relations(args.engine, args.n, args.k)])


def _cmd_theta_roots(args) -> int:
    return _finish_reports(args, [theta.square_root_family(args.m_max)])


def _cmd_hyperelliptic(args) -> int:
    return _finish_reports(args, [theta.hyperelliptic_experiment(args.n)])


def _cmd_separation(args) -> int:
    return _finish_reports(args, [theta.separation_evidence(args.k)])


def _cmd_report(args) -> int:
    reports = []
    for n in range(1, 5):
        for k in range(1, 4):
            reports.append(theta.check_relations("symplectic", n, k))
    for k in range(1, 4):
        reports.append(theta.check_relations("braid", 3, k))
    for n in range(1, 7):
        reports.append(theta.hyperelliptic_experiment(n))
    reports.append(theta.square_root_family(args.m_max))
    reports.append(theta.root_experiment_report(args.bound))
    for k in range(1, 4):
        reports.append(theta.separation_evidence(k))
    return _finish_reports(args, reports)


# ------------------------------------------------------------------ parser

def _add_format(parser):
    parser.add_argument("--format", choices=["text", "json"], default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistkit",
        description="Exact computations in braid quotients, symplectic "
        "twist representations, and SL2(Z) root classification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    nf = sub.add_parser("nf", help="left normal form of a braid word")
    nf.add_argument("--n", "--strands", dest="strands", type=int, required=True)
    nf.add_argument("word")
    _add_format(nf)
    nf.set_defaults(func=_cmd_nf)

    eq = sub.add_parser("eq", help="decide equality of two braid words")
    eq.add_argument("--n", "--strands", dest="strands", type=int, required=True)
    eq.add_argument("--mod-center", action="store_true")
    eq.add_argument("left")
    eq.add_argument("right")
    _add_format(eq)
    eq.set_defaults(func=_cmd_eq)

    roots = sub.add_parser(
        "roots", help="census of roots of -Id, or reduce one matrix")
    roots.add_argument("--power", type=int, choices=[2, 3])
    roots.add_argument("--bound", type=int)
    roots.add_argument("--matrix")
    _add_format(roots)
    roots.set_defaults(func=_cmd_roots)

    verify = sub.add_parser(
        "theta-verify", help="check the presentation relators at (n, k)")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--k", type=int, required=True)
    verify.add_argument("--engine", choices=["symplectic", "braid"],
                        default="symplectic")
    _add_format(verify)
    verify.set_defaults(func=_cmd_theta_verify)

    troots = sub.add_parser(
        "theta-roots", help="square-root family of the half twist")
    troots.add_argument("--m-max", dest="m_max", type=int, default=10)
    _add_format(troots)
    troots.set_defaults(func=_cmd_theta_roots)

    hyper = sub.add_parser(
        "hyperelliptic", help="involution identities at genus n")
    hyper.add_argument("--n", type=int, required=True)
    _add_format(hyper)
    hyper.set_defaults(func=_cmd_hyperelliptic)

    sep = sub.add_parser(
        "separation", help="evidence separating the open (2, k) groups")
    sep.add_argument("--k", type=int, required=True)
    _add_format(sep)
    sep.set_defaults(func=_cmd_separation)

    report = sub.add_parser("report", help="run the full experiment battery")
    report.add_argument("--bound", type=int, default=12)
    report.add_argument("--m-max", dest="m_max", type=int, default=5)
    report.add_argument("--out")
    _add_format(report)
    report.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
