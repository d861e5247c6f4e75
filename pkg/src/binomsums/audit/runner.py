"""Executes registry entries over their grids and renders reports."""

from __future__ import annotations

import csv
import fnmatch
import io
import json
import time
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .config import AuditConfig, ConfigError
from .registry import IdentityEntry, Verdict, build_registry

__all__ = [
    "EntryResult",
    "AuditReport",
    "evaluate_entry",
    "run_audit",
    "render_json",
    "render_markdown",
    "render_csv",
]


def _fmt(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    if isinstance(value, Fraction):
        return str(value)
    return repr(value)


def _fmt_point(pt: dict) -> dict:
    return {k: str(v) for k, v in pt.items()}


def _values_equal(lhs: Any, rhs: Any) -> bool:
    if isinstance(lhs, (list, tuple)) and isinstance(rhs, (list, tuple)):
        return len(lhs) == len(rhs) and all(
            _values_equal(a, b) for a, b in zip(lhs, rhs)
        )
    return lhs == rhs


@dataclass
class EntryResult:
    id: str
    paper_ref: str
    expected: Verdict
    verdict: Verdict
    points: int
    skipped: list[dict] = field(default_factory=list)
    counterexample: Optional[dict] = None

    @property
    def matches_expected(self) -> bool:
        return self.verdict is self.expected


@dataclass
class AuditReport:
    run_id: str
    timestamp: str
    elapsed_seconds: float
    results: list[EntryResult]

    @property
    def all_expected(self) -> bool:
        return all(r.matches_expected for r in self.results)

    @property
    def totals(self) -> dict:
        return {
            "entries": len(self.results),
            "points": sum(r.points for r in self.results),
            "skipped": sum(len(r.skipped) for r in self.results),
            "mismatches": sum(
                1 for r in self.results if not r.matches_expected
            ),
        }


def evaluate_entry(entry: IdentityEntry, config: AuditConfig) -> EntryResult:
    spec = config.for_entry(entry.id)
    points = list(entry.grid(spec))
    skipped: list[dict] = []
    active: list[dict] = []
    for pt in points:
        reason = entry.singular(pt)
        if reason is not None:
            skipped.append({"point": _fmt_point(pt), "reason": reason})
        else:
            active.append(pt)
    if not active:
        raise ConfigError(
            f"{entry.id}: grid is empty after skipping singular points"
        )

    printed_fail: Optional[tuple[dict, Any, Any]] = None
    for pt in active:
        lhs, rhs = entry.printed(pt)
        if not _values_equal(lhs, rhs):
            printed_fail = (pt, lhs, rhs)
            break

    if printed_fail is None:
        verdict = Verdict.HOLDS_PRINTED
        counterexample = None
    else:
        pt, lhs, rhs = printed_fail
        counterexample = {
            "point": _fmt_point(pt),
            "printedLhs": _fmt(lhs),
            "printedRhs": _fmt(rhs),
        }
        corrected_ok = entry.corrected is not None
        if entry.corrected is not None:
            for cpt in active:
                clhs, crhs = entry.corrected(cpt)
                if not _values_equal(clhs, crhs):
                    corrected_ok = False
                    counterexample["correctedLhs"] = _fmt(clhs)
                    counterexample["correctedRhs"] = _fmt(crhs)
                    counterexample["correctedPoint"] = _fmt_point(cpt)
                    break
        verdict = (
            Verdict.HOLDS_CORRECTED_ONLY if corrected_ok else Verdict.FAILS_BOTH
        )

    return EntryResult(
        id=entry.id,
        paper_ref=entry.paper_ref,
        expected=entry.expected,
        verdict=verdict,
        points=len(active),
        skipped=skipped,
        counterexample=counterexample,
    )


def run_audit(
    config: AuditConfig | None = None,
    pattern: str = "*",
    threads: int = 1,
) -> AuditReport:
    config = config or AuditConfig()
    registry = build_registry()
    known = {e.id for e in registry}
    unknown = set(config.overrides) - known
    if unknown:
        raise ConfigError(
            f"config overrides reference unknown ids: {sorted(unknown)}"
        )
    entries = [e for e in registry if fnmatch.fnmatch(e.id, pattern)]
    start = time.monotonic()
    if threads <= 1:
        results = [evaluate_entry(e, config) for e in entries]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(lambda e: evaluate_entry(e, config), entries)
            )
    elapsed = time.monotonic() - start
    return AuditReport(
        run_id=uuid.uuid4().hex,
        timestamp=time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        elapsed_seconds=elapsed,
        results=results,
    )


def render_json(report: AuditReport) -> str:
    doc = {
        "runId": report.run_id,
        "timestamp": report.timestamp,
        "elapsedSeconds": round(report.elapsed_seconds, 3),
        "gridTotals": report.totals,
        "entries": [
            {
                "id": r.id,
                "paperRef": r.paper_ref,
                "verdict": r.verdict.value,
                "expected": r.expected.value,
                "points": r.points,
                "skipped": r.skipped,
                **(
                    {"counterexample": r.counterexample}
                    if r.counterexample
                    else {}
                ),
            }
            for r in report.results
        ],
    }
    return json.dumps(doc, indent=2)


def render_markdown(report: AuditReport) -> str:
    lines = [
        f"# Identity audit {report.run_id}",
        "",
        f"- timestamp: {report.timestamp}",
        f"- elapsed: {report.elapsed_seconds:.2f}s",
        f"- totals: {report.totals}",
        "",
        "| id | verdict | expected | ok | points | skipped |",
        "|----|---------|----------|----|--------|---------|",
    ]
    for r in report.results:
        ok = "yes" if r.matches_expected else "NO"
        lines.append(
            f"| {r.id} | {r.verdict.value} | {r.expected.value} "
            f"| {ok} | {r.points} | {len(r.skipped)} |"
        )
    fails = [r for r in report.results if r.counterexample]
    if fails:
        lines += ["", "## Printed-form counterexamples", ""]
        for r in fails:
            lines.append(f"- **{r.id}** at {r.counterexample['point']}: "
                         f"lhs = {r.counterexample['printedLhs']}, "
                         f"rhs = {r.counterexample['printedRhs']}")
    return "\n".join(lines) + "\n"


def render_csv(report: AuditReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        ["id", "verdict", "expected", "matches_expected", "points", "skipped"]
    )
    for r in report.results:
        writer.writerow(
            [
                r.id,
                r.verdict.value,
                r.expected.value,
                str(r.matches_expected).lower(),
                r.points,
                len(r.skipped),
            ]
        )
    return buf.getvalue()
