"""Text and JSON renderings of a session run.

Both renderings are built from the same per-entry field dicts, so they carry
identical data. Neither contains timestamps or paths, so output is byte-stable
for a fixed session and seed.
"""
from __future__ import annotations

import json

from .session import Entry, render, to_tree


def summary(entries: list[Entry]) -> dict:
    checks = [e for e in entries if e.check is not None]
    failed = [e.line for e in checks if not e.check["passed"]]
    return {"total": len(checks), "passed": len(checks) - len(failed), "failed": failed}


def status(entries: list[Entry]) -> str:
    return "fail" if summary(entries)["failed"] else "ok"


def entry_tree(e: Entry) -> dict:
    out = {"line": e.line, "command": e.command, "source": e.source,
           "result": {k: to_tree(v) for k, v in e.fields.items()}}
    if e.bind is not None:
        out["bind"] = e.bind
    if e.check is not None:
        out["check"] = dict(e.check)
    return out


def as_json(entries: list[Entry], seed: int, figures: list | None = None) -> str:
    tree = {"seed": seed, "results": [entry_tree(e) for e in entries],
            "checks": summary(entries), "status": status(entries)}
    if figures:
        tree["figures"] = figures
    return json.dumps(tree, indent=2, sort_keys=False) + "\n"


def as_text(entries: list[Entry], seed: int, figures: list | None = None) -> str:
    lines = [f"seed: {seed}"]
    for e in entries:
        lines.append(f"--- [{e.line}] {e.source}")
        if e.bind is not None:
            lines.append(f"  bind: {e.bind}")
        width = max((len(k) for k in e.fields), default=0)
        for k, v in e.fields.items():
            lines.append(f"  {k.ljust(width)} = {render(v)}")
        if e.check is not None:
            c = e.check
            verdict = "PASS" if c["passed"] else "FAIL"
            lines.append(f"  check {c['key']} == {c['expected']}: {verdict}")
    s = summary(entries)
    lines.append("---")
    lines.append(f"checks: {s['passed']}/{s['total']} passed")
    if s["failed"]:
        lines.append("failed lines: " + ", ".join(str(n) for n in s["failed"]))
    for f in figures or []:
        lines.append(f"figure: {f}")
    lines.append(f"status: {status(entries)}")
    return "\n".join(lines) + "\n"
