"""Command-line entry point ``bug``.

``bug run FILE`` executes a session file; ``bug verify ID|all`` runs the
worked-example fixtures. Exit codes: 0 success, 1 failed check or internal
inconsistency, 2 input error.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import fixtures, report
from .errors import InvariantViolation
from .session import DEFAULT_SEED, Options, Session, SessionError, render


def _run(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"{args.file}: error: {e.strerror}", file=sys.stderr)
        return 2
    s = Session(Options(seed=args.seed, trials=args.trials, bound=args.bound))
    try:
        entries = s.run_text(text)
    except SessionError as e:
        print(f"{args.file}:{e.line}: error: {e.msg}", file=sys.stderr)
        return 2
    except InvariantViolation as e:
        print(f"{args.file}: internal inconsistency: {e}", file=sys.stderr)
        return 1
    figs = []
    if args.figures:
        from .plotting import session_figures
        stem = os.path.splitext(os.path.basename(args.file))[0]
        figs = session_figures(entries, args.figures, stem)
    render_fn = report.as_json if args.json else report.as_text
    sys.stdout.write(render_fn(entries, args.seed, figs))
    return 0 if report.status(entries) == "ok" else 1


def _verify(args) -> int:
    ids = list(fixtures.FIXTURES) if args.id == "all" else [args.id]
    if args.id != "all" and args.id not in fixtures.FIXTURES:
        print(f"error: unknown fixture {args.id!r}; known: {', '.join(fixtures.FIXTURES)}",
              file=sys.stderr)
        return 2
    bad = 0
    for fid in ids:
        try:
            rows = fixtures.verify(fid)
        except InvariantViolation as e:
            print(f"{fid}: FAIL internal inconsistency: {e}")
            bad += 1
            continue
        first = next((r for r in rows if not r.ok), None)
        if first is None:
            print(f"{fid}: PASS ({len(rows)} checks)")
        else:
            bad += 1
            print(f"{fid}: FAIL {first.label}: expected {render(first.expected)}, "
                  f"got {render(first.actual)}")
        if args.verbose:
            for r in rows:
                print(f"  [{'ok' if r.ok else 'FAIL'}] {r.label} = {render(r.actual)}")
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bug", description="Graded Artinian Gorenstein algebras "
                                "and their cohomological blow-ups.")
    sub = p.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", help="execute a session file")
    r.add_argument("file")
    r.add_argument("--seed", type=int, default=DEFAULT_SEED)
    r.add_argument("--json", action="store_true", help="machine-readable output")
    r.add_argument("--trials", type=int, default=5, help="random Lefschetz trials")
    r.add_argument("--bound", type=int, default=100, help="coefficient bound for random forms")
    r.add_argument("--figures", metavar="DIR", help="write PNG figures into DIR")
    r.set_defaults(fn=_run)
    v = sub.add_parser("verify", help="run worked-example fixtures")
    v.add_argument("id", help="fixture id such as 6.6, or 'all'")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(fn=_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
