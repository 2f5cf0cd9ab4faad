"""Command-line entry point.

Exit codes: 0 when every row matches, 2 when a mismatch was found, 3 when
some rows stayed undecided within the search budget.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import harness
from .thresholds import ThresholdReport, threshold_report
from .trees import Tree


def int_range(text: str) -> list[int]:
    """Parse ``3``, ``3-6`` or ``3,5,7`` (and mixtures like ``3-4,7``)."""
    out: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        if "-" in piece:
            lo, hi = piece.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(piece))
    return out


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-nodes", type=int, default=None, help="search nodes per decision before giving up")
    p.add_argument("--budget-secs", type=float, default=None, help="wall seconds per decision (breaks reproducibility)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="directory for the report and artifacts (stdout if omitted)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--timings", action="store_true", help="include wall times (reports are then not byte-stable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treegood", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify-ramsey", help="exact small Ramsey numbers against the closed forms")
    p.add_argument("--n", type=int_range, required=True)
    p.add_argument("--m", type=int_range, required=True)
    p.add_argument("--t", type=int_range, default=[0])
    p.add_argument("--regime", choices=("A", "B", "AB"), default="A")
    p.add_argument("--trees", choices=("all", "path"), default="all")
    _common(p)

    p = sub.add_parser("verify-construction", help="generate constructions and check their claims")
    p.add_argument("--n", type=int_range, required=True)
    p.add_argument("--m", type=int_range, required=True)
    p.add_argument("--t", type=int_range, default=[0])
    p.add_argument("--N", type=int_range, required=True)
    p.add_argument("--kind", default="I,II,burr,blowup", help="comma list from I, II, burr, blowup")
    _common(p)

    for verb in ("test-theorem13", "test-theorem34"):
        p = sub.add_parser(verb, help="sample graphs at the degree threshold and test arrowing")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--N", type=int, required=True)
        p.add_argument("--samples", type=int, default=100)
        p.add_argument("--trees", choices=("all", "one"), default="all")
        p.add_argument("--colorings", type=int, default=2, help="random colourings per graph for certificate extraction")
        p.add_argument("--exhaustive", action="store_true", help="all graphs up to isomorphism instead of samples")
        _common(p)

    p = sub.add_parser("probe-conjecture", help="test graphs at a conjectured degree threshold")
    p.add_argument("--which", choices=("1.2", "1.4"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--strategy", choices=("sample", "exhaustive-tiny"), default="sample")
    _common(p)

    p = sub.add_parser("check-certificate", help="re-validate serialized certificates, witnesses or constructions")
    p.add_argument("files", nargs="+")

    p = sub.add_parser("gen-construction", help="emit a construction as JSON")
    p.add_argument("--kind", choices=("I", "II", "burr", "blowup", "star-tree"), required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--tree", default=None, help="tree as a JSON parent array, e.g. '[-1,0,1]'")
    p.add_argument("--out", default=None)

    p = sub.add_parser("thresholds", help="all closed-form values for each (n, m, t, N) as CSV")
    p.add_argument("--n", type=int_range, required=True)
    p.add_argument("--m", type=int_range, required=True)
    p.add_argument("--t", type=int_range, default=[0])
    p.add_argument("--N", type=int_range, default=None, help="defaults to the bottom of each window")
    return parser


def _emit(report: harness.Report, args) -> int:
    if args.out:
        path = report.save(args.out, args.format, args.timings)
        print(f"{report.verb}: {report.counts} -> {path}", file=sys.stderr)
    elif args.format == "json":
        sys.stdout.write(report.to_json(args.timings))
    else:
        sys.stdout.write(report.to_csv(args.timings))
    return report.exit_code


def _budget(args) -> dict:
    return {"budget_nodes": args.budget_nodes, "budget_secs": args.budget_secs, "workers": args.workers}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.verb == "verify-ramsey":
        regimes = list(args.regime) if args.regime == "AB" else [args.regime]
        tuples = [(n, m, t, r) for n in args.n for m in args.m for t in args.t for r in regimes]
        return _emit(harness.cmd_verify_ramsey(tuples, trees=args.trees, **_budget(args)), args)

    if args.verb == "verify-construction":
        kinds = tuple(k.strip() for k in args.kind.split(","))
        tuples = [(n, m, t, N) for n in args.n for m in args.m for t in args.t for N in args.N]
        return _emit(harness.cmd_verify_construction(tuples, kinds, workers=args.workers), args)

    if args.verb in ("test-theorem13", "test-theorem34"):
        fn = harness.cmd_test_theorem13 if args.verb == "test-theorem13" else harness.cmd_test_theorem34
        report = fn(args.n, args.m, args.t, args.N, samples=args.samples, trees=args.trees, seed=args.seed,
                    colorings=args.colorings, exhaustive=args.exhaustive, **_budget(args))
        return _emit(report, args)

    if args.verb == "probe-conjecture":
        report = harness.cmd_probe_conjecture(args.which, args.n, args.m, args.t, args.N, samples=args.samples,
                                              strategy=args.strategy, seed=args.seed, **_budget(args))
        return _emit(report, args)

    if args.verb == "check-certificate":
        worst = 0
        for name in args.files:
            doc = json.loads(Path(name).read_text())
            ok, message = harness.check_document(doc)
            print(f"{'OK  ' if ok else 'FAIL'} {name}: {message}")
            if not ok:
                worst = 2
        return worst

    if args.verb == "gen-construction":
        tree = Tree.from_parents(json.loads(args.tree)) if args.tree else None
        doc = harness.generate_construction(args.kind, args.n, args.m, args.t, args.N, tree)
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return 0

    if args.verb == "thresholds":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=ThresholdReport.FIELDS, lineterminator="\n")
        buf.write("# schema=treegood.thresholds/1\n")
        writer.writeheader()
        for n in args.n:
            for m in args.m:
                for t in args.t:
                    Ns = args.N or [(t + 1) * (n - 1) * (m - 1) + 1]
                    for N in Ns:
                        writer.writerow(threshold_report(n, m, t, N).row())
        sys.stdout.write(buf.getvalue())
        return 0
    return 1


if __name__ == "__main__":
    sys.exit(main())
