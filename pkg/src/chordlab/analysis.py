"""Shape checks for triangle rows: unimodality, log-concavity, Kurtz's hypotheses."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import triangles
from .errors import ValidationError

__all__ = [
    "Unimodality",
    "LogConcavity",
    "ShapeReport",
    "is_unimodal",
    "is_log_concave",
    "kurtz_hypothesis_check",
    "trim_zeros",
    "shape_report",
    "sweep",
    "reports_to_json",
    "reports_to_table",
]


class Unimodality(NamedTuple):
    unimodal: bool
    peak: tuple[int, int] | None  # first and last index of the maximum, when unimodal


class LogConcavity(NamedTuple):
    log_concave: bool
    violation: int | None  # first interior index i with seq[i]^2 < seq[i-1] * seq[i+1]


def _nonempty(seq):
    seq = list(seq)
    if not seq:
        raise ValidationError("sequence must be nonempty")
    return seq


def is_unimodal(seq: Sequence[int]) -> Unimodality:
    seq = _nonempty(seq)
    i, n = 0, len(seq)
    while i + 1 < n and seq[i + 1] >= seq[i]:
        i += 1
    j = i
    while j + 1 < n and seq[j + 1] <= seq[j]:
        j += 1
    if j != n - 1:
        return Unimodality(False, None)
    top = max(seq)
    peaks = [k for k, v in enumerate(seq) if v == top]
    return Unimodality(True, (peaks[0], peaks[-1]))


def is_log_concave(seq: Sequence[int]) -> LogConcavity:
    seq = _nonempty(seq)
    for i in range(1, len(seq) - 1):
        if seq[i] * seq[i] < seq[i - 1] * seq[i + 1]:
            return LogConcavity(False, i)
    return LogConcavity(True, None)


def kurtz_hypothesis_check(a1, a2, a3, b1, b2, b3) -> bool:
    """Coefficient conditions under which the two-term recurrence
    ``R(n,k) = (a1 n + a2 k + a3) R(n-1,k) + (b1 n + b2 k + b3) R(n-1,k-1)``
    yields log-concave rows."""
    a1, a2, a3, b1, b2, b3 = (Fraction(x) for x in (a1, a2, a3, b1, b2, b3))
    return (a1 >= 0 and a1 + a2 >= 0 and a1 + a2 + a3 > 0
            and b1 >= 0 and b1 + b2 >= 0 and b1 + b2 + b3 > 0)


def trim_zeros(seq: Sequence[int]) -> list[int]:
    seq = list(seq)
    lo, hi = 0, len(seq)
    while lo < hi and seq[lo] == 0:
        lo += 1
    while hi > lo and seq[hi - 1] == 0:
        hi -= 1
    return seq[lo:hi]


@dataclass(frozen=True)
class ShapeReport:
    kind: str
    n: int
    row: tuple[int, ...]
    unimodal: bool
    peak: tuple[int, int] | None
    log_concave: bool
    violation: int | None

    def __post_init__(self):
        if self.log_concave and not self.unimodal and all(v > 0 for v in self.row):
            raise AssertionError(f"inconsistent shape report for {self.kind} row {self.n}")


def shape_report(kind: str, n: int, seq: Sequence[int], origin: int = 0) -> ShapeReport:
    """Checks run on the row with leading and trailing zeros removed.

    ``peak`` and ``violation`` are reported as column labels of the original
    row, whose first entry is column ``origin``.
    """
    seq = list(seq)
    trimmed = trim_zeros(seq)
    if not trimmed:
        raise ValidationError(f"{kind} row {n} is all zeros")
    shift = origin + next(i for i, v in enumerate(seq) if v != 0)
    uni = is_unimodal(trimmed)
    lc = is_log_concave(trimmed)
    peak = (uni.peak[0] + shift, uni.peak[1] + shift) if uni.peak else None
    violation = lc.violation + shift if lc.violation is not None else None
    return ShapeReport(kind, n, tuple(trimmed), uni.unimodal, peak, lc.log_concave, violation)


def sweep(kind: str, n_max: int, cap: int | None = None) -> list[ShapeReport]:
    kind = triangles.canonical_kind(kind)
    origin = triangles.column_origin(kind)
    return [shape_report(kind, n, r, origin) for n, r in triangles.rows(kind, n_max, cap)]


def reports_to_json(reports: Sequence[ShapeReport]) -> str:
    out = []
    for r in reports:
        d = asdict(r)
        d["row"] = list(r.row)
        d["peak"] = list(r.peak) if r.peak else None
        out.append(d)
    return json.dumps(out, separators=(",", ":")) + "\n"


def reports_to_table(reports: Sequence[ShapeReport]) -> str:
    mark = {True: "✓", False: "✗"}
    lines = ["kind  n  unimodal  log-concave  peak      first-violation"]
    for r in reports:
        peak = f"{r.peak[0]}..{r.peak[1]}" if r.peak else "-"
        viol = "-" if r.violation is None else str(r.violation)
        lines.append(f"{r.kind:<4} {r.n:>3}  {mark[r.unimodal]:^8}  {mark[r.log_concave]:^11}  {peak:<8}  {viol}")
    return "\n".join(lines) + "\n"
