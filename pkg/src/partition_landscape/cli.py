"""Command-line front end: tables, histograms, extremal sets, witnesses, checks."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from importlib import resources

from . import landscape, strata, transfer
from .degree import degree
from .extremal import max_degree, rho
from .partitions import enumerate_partitions

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PAPER_RANGE = 60


def golden_table_csv() -> str:
    """Degree data for 1 <= n <= 60 as published, in the `table` CSV layout."""
    return resources.files("partition_landscape").joinpath("data/table1.csv").read_text()


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(str(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _json(obj) -> str:
    return json.dumps(obj) + "\n"


def render_table(rows, fmt: str) -> str:
    if fmt == "json":
        return _json([asdict(r) for r in rows])
    return _csv(landscape.LandscapeRow.FIELDS, (r.as_tuple() for r in rows))


def render_hist(hist, fmt: str) -> str:
    dense = hist.dense()
    if fmt == "json":
        return _json({"n": hist.n, "bins": [{"degree": d, "count": c} for d, c in dense]})
    return _csv(("degree", "count"), dense)


def extremal_report(n: int) -> dict:
    orbits = landscape.extremal_orbits(n)
    return {
        "n": n,
        "delta": max_degree(n).delta,
        "m_delta": sum(o.orbit_size for o in orbits),
        "m_delta_sc": sum(1 for o in orbits if o.orbit_size == 1),
        "orbits": [
            {"representative": list(o.representative.parts), "kind": o.kind, "orbit_size": o.orbit_size}
            for o in orbits
        ],
    }


def witness_report(n: int) -> dict:
    lam = strata.extremal_witness(n)
    return {"n": n, "witness": list(lam.parts), "degree": degree(lam), "context": asdict(max_degree(n))}


def run_checks(n_max: int, jobs: int = 1) -> dict:
    """Formula/oracle, maximal-support, stratum and golden-table checks up to n_max."""
    checks, failures = [], []

    report = transfer.verify_degree_formula(n_max)
    checks.append({"name": "degree-formula-vs-oracle", "ok": report.ok, "partitions": report.checked})
    failures += [
        {"check": "degree-formula-vs-oracle", "n": n, "partition": list(p), "formula": f, "brute": b}
        for n, p, f, b in report.mismatches
    ]

    bad = []
    for n in range(1, n_max + 1):
        for lam in landscape.max_degree_set_full(n):
            if lam.support_size != rho(n):
                bad.append({"check": "max-support-principle", "n": n, "partition": list(lam.parts)})
    checks.append({"name": "max-support-principle", "ok": not bad})
    failures += bad

    bad = []
    for n in range(1, n_max + 1):
        via_stratum = set(strata.enumerate_max_support_stratum(n))
        via_filter = {lam for lam in enumerate_partitions(n) if lam.support_size == rho(n)}
        if via_stratum != via_filter:
            bad.append({"check": "stratum-vs-filter", "n": n})
    checks.append({"name": "stratum-vs-filter", "ok": not bad})
    failures += bad

    upto = min(n_max, PAPER_RANGE)
    golden = golden_table_csv().splitlines()[1 : upto + 1]
    bad = []
    try:
        rows = landscape.landscape_rows(1, upto, jobs)
        got = render_table(rows, "csv").splitlines()[1:]
    except landscape.ConsistencyError as exc:
        got = []
        bad.append({"check": "table-1-golden", "error": str(exc)})
    for want, have in zip(golden, got):
        if want != have:
            bad.append({"check": "table-1-golden", "expected": want, "got": have})
    checks.append({"name": "table-1-golden", "ok": not bad, "rows": upto})
    failures += bad

    return {"n_max": n_max, "ok": not failures, "checks": checks, "failures": failures}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH", help="write here instead of stdout")
    common.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1, metavar="K")

    parser = argparse.ArgumentParser(prog="partition-landscape", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="one degree-data row per n")
    p.add_argument("--from", dest="n_from", type=_positive, default=1)
    p.add_argument("--to", dest="n_to", type=_positive, default=PAPER_RANGE)

    for name, text in (
        ("hist", "degree histogram of one G_n"),
        ("spectrum", "sorted distinct degrees of one G_n"),
        ("extremal", "conjugation orbits of the maximal-degree set (JSON)"),
        ("witness", "one explicit maximal-degree partition (JSON)"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("n", type=_positive)

    p = sub.add_parser("verify", parents=[common], help="cross-check theory against brute force")
    p.add_argument("--max-n", dest="max_n", type=_positive, default=25)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    status = EXIT_OK
    if args.command == "table":
        if args.n_from > args.n_to:
            parser.print_usage(sys.stderr)
            print(f"error: --from {args.n_from} exceeds --to {args.n_to}", file=sys.stderr)
            return EXIT_USAGE
        if args.n_to > PAPER_RANGE:
            print(f"warning: full enumeration up to n={args.n_to} grows like p(n)", file=sys.stderr)
        text = render_table(landscape.landscape_rows(args.n_from, args.n_to, args.jobs), args.format)
    elif args.command == "hist":
        text = render_hist(landscape.degree_histogram(args.n), args.format)
    elif args.command == "spectrum":
        values = landscape.spectrum(args.n)
        text = _json(values) if args.format == "json" else _csv(("degree",), ((d,) for d in values))
    elif args.command == "extremal":
        text = _json(extremal_report(args.n))
    elif args.command == "witness":
        text = _json(witness_report(args.n))
    else:
        report = run_checks(args.max_n, args.jobs)
        text = _json(report)
        passed = sum(c["ok"] for c in report["checks"])
        print(f"verify n<={args.max_n}: {passed}/{len(report['checks'])} checks passed", file=sys.stderr)
        status = EXIT_OK if report["ok"] else EXIT_FAIL

    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return status


if __name__ == "__main__":
    sys.exit(main())
