"""Command line: evaluate embedding CSVs and write a report."""

from __future__ import annotations

import argparse
import glob
import sys
from pathlib import Path

from .evaluate import EvalProtocol, evaluate
from .report import report_table


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="homclass")
    subs = parser.add_subparsers(dest="command", required=True)
    p = subs.add_parser("evaluate",
                        help="nested cross-validation over replicate CSVs")
    p.add_argument("--embeddings", required=True,
                   help='glob of replicate CSVs, e.g. "run_*.csv"')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--name", default="embeddings")
    p.add_argument("--out", default=None, help="write the report here too")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    paths = sorted(glob.glob(args.embeddings))
    if not paths:
        print(f"error: no files match {args.embeddings!r}", file=sys.stderr)
        return 2
    try:
        report = evaluate(paths, EvalProtocol(outer_folds=args.folds,
                                              seed=args.seed))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = report_table([(args.name, report)])
    print(text, end="")
    if args.out:
        Path(args.out).write_text(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
