"""Command-line entry point.

    qternary verify  --id ID --order N [--n-max M]
    qternary compute --table {b,bbar,a-grid} [--k K] --max-n N --format {csv,json}
    qternary density --subject {b,bbar,three-squares,loeschian,form:a,b,c,r,s,t} --checkpoints X1,X2,...
    qternary split   --id {2.7,2.8} --order N

Exit status: 0 success / all PASS, 1 any FAIL, 2 usage error.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from pathlib import Path

from .checks import CHECKS, run_check
from .density import (
    DEFAULT_CHECKPOINTS,
    form_density,
    loeschian_density,
    nonzero_density,
    three_squares_density,
)
from .genfun import ROUTES, b_table, bbar_table, genfun_k
from .ternary import TernaryForm, split_components

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _checkpoint_list(text: str) -> tuple:
    try:
        vals = tuple(int(float(v)) if "e" in v.lower() else int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad checkpoint list {text!r}") from None
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qternary",
        description="Exact q-series identity checks, coefficient tables and density scans.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def outputs(sp, formats, default):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", type=Path, help="write csv/json to this file instead of stdout")

    v = sub.add_parser("verify", help="run one identity check",
                       description="check ids: " + ", ".join(CHECKS))
    v.add_argument("--id", required=True, choices=list(CHECKS), metavar="ID",
                   help="one of: " + ", ".join(CHECKS))
    v.add_argument("--order", type=_nonneg, required=True)
    v.add_argument("--n-max", type=_nonneg, default=None,
                   help="pair-def: largest n (default 8); 3.1-oracle: largest k (default 6)")
    outputs(v, ("table", "csv", "json"), "table")

    c = sub.add_parser("compute", help="coefficient tables")
    c.add_argument("--table", required=True, choices=("b", "bbar", "a-grid"))
    c.add_argument("--k", type=_nonneg, help="profile k for a-grid")
    c.add_argument("--max-n", type=_nonneg, required=True)
    c.add_argument("--route", choices=ROUTES, default="auto")
    outputs(c, ("csv", "json"), "csv")

    d = sub.add_parser("density", help="nonzero / representability density scans")
    d.add_argument("--subject", required=True,
                   help="b, bbar, three-squares, loeschian or form:a,b,c,r,s,t")
    d.add_argument("--checkpoints", type=_checkpoint_list, default=DEFAULT_CHECKPOINTS)
    d.add_argument("--route", choices=ROUTES, default="auto")
    outputs(d, ("table", "csv", "json"), "table")

    s = sub.add_parser("split", help="diagonal / off-diagonal split of a lattice series")
    s.add_argument("--id", required=True, choices=("2.7", "2.8"))
    s.add_argument("--order", type=_nonneg, required=True)
    outputs(s, ("table", "csv", "json"), "table")
    return p


def _render(kind: str, header: list[str], rows: list[list], fmt: str, meta: dict) -> str:
    rows = [["" if v is None else str(v) for v in r] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        doc = {"kind": kind, **meta,
               "rows": [{h: (v if v != "" else None) for h, v in zip(header, r)} for r in rows]}
        return json.dumps(doc, indent=2) + "\n"
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = [f"# {k}: {v}" for k, v in meta.items()]
    lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _emit(text: str, args, stdout) -> None:
    if args.out is not None:
        args.out.write_text(text)
    else:
        stdout.write(text)


def _fmt(args) -> str:
    if args.out is not None and args.format == "table":
        return "json" if args.out.suffix == ".json" else "csv"
    return args.format


def cmd_verify(args, stdout) -> int:
    reports = run_check(args.id, args.order, args.n_max)
    rows = [[r.check_id, r.order, r.status, r.first_mismatch] for r in reports]
    header = ["check_id", "order", "status", "first_mismatch"]
    meta = {}
    bad = [r for r in reports if not r.passed]
    if bad:
        meta["mismatch"] = f"{bad[0].check_id} at q^{bad[0].first_mismatch}: " \
                           f"lhs={bad[0].lhs_coeff} rhs={bad[0].rhs_coeff}"
    _emit(_render("verification", header, rows, _fmt(args), meta), args, stdout)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_compute(args, stdout) -> int:
    n = args.max_n
    if args.table == "a-grid":
        if args.k is None:
            raise UsageError("--table a-grid needs --k")
        g = genfun_k(args.k, n)
        rows = []
        for e in range(n + 1):
            v = g.get(e)
            poly = v.c if hasattr(v, "c") else ((v,) if v else ())
            rows += [[e, m, c] for m, c in enumerate(poly) if c]
        _emit(_render("a-grid", ["n", "m", "coefficient"], rows, args.format, {"k": str(args.k)}),
              args, stdout)
        return EXIT_OK
    table = (b_table if args.table == "b" else bbar_table)(n, route=args.route)
    rows = [[i, v] for i, v in enumerate(table.values)]
    _emit(_render("table", ["n", "coefficient"], rows, args.format, {"table": table.name}),
          args, stdout)
    return EXIT_OK


def cmd_density(args, stdout) -> int:
    cps = args.checkpoints
    if any(x < 1 for x in cps) or list(cps) != sorted(set(cps)):
        raise UsageError("checkpoints must be positive and strictly increasing")
    subject = args.subject
    if subject in ("b", "bbar"):
        table = (b_table if subject == "b" else bbar_table)(cps[-1], route=args.route)
        rep = nonzero_density(table, cps)
    elif subject == "three-squares":
        rep = three_squares_density(cps)
    elif subject == "loeschian":
        rep = loeschian_density(cps)
    elif subject.startswith("form:"):
        try:
            form = TernaryForm.parse(subject[len("form:"):])
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not form.is_positive_definite():
            raise UsageError(f"form {subject} is not positive definite")
        rep = form_density(form, cps)
    else:
        raise UsageError(f"unknown subject {subject!r}")
    meta = {"subject": rep.subject, "range": "1 <= n <= X"}
    _emit(_render("density", ["X", "count", "ratio"], rep.rows(), _fmt(args), meta), args, stdout)
    return EXIT_OK


def cmd_split(args, stdout) -> int:
    parts = split_components(args.id, args.order)
    total = parts.total()
    rows = [[n, parts.diagonal.get(n), parts.off_diagonal.get(n), total.get(n)]
            for n in range(args.order + 1)]
    header = ["n", "diagonal", "off_diagonal", "total"]
    _emit(_render("split", header, rows, _fmt(args), {"form": parts.form_id}), args, stdout)
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "compute": cmd_compute, "density": cmd_density,
            "split": cmd_split}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, stdout)
    except (UsageError, IndexError) as exc:
        stderr.write(f"qternary: error: {exc}\n")
        parser.print_usage(stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
