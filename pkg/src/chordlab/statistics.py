"""Statistics on single diagrams and their exact distributions.

``histogram`` runs the compiled kernel over splits of the stream (optionally
on a thread pool); ``histogram_by_iteration`` walks Python diagram objects
and applies the per-diagram functions below.  The two routes share no code
and are cross-checked in the test suite.
"""
from __future__ import annotations

import json
import re
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import _kernels
from .diagram import ChordDiagram, crossing, nesting
from .enumeration import DiagramStream, Filter, branch_histogram
from .errors import ValidationError

__all__ = [
    "Statistic",
    "StatisticHistogram",
    "short_chords",
    "lr_pairs",
    "crossing_count",
    "nesting_count",
    "min_length",
    "histogram",
    "histogram_by_iteration",
]


@dataclass(frozen=True)
class Statistic:
    """``sc`` with a chord length ``k`` (chords of length exactly ``k``), or ``lr``."""

    kind: str
    k: int = 1

    def __post_init__(self):
        if self.kind not in ("sc", "lr"):
            raise ValidationError(f"unknown statistic {self.kind!r}")
        if self.kind == "sc" and self.k < 1:
            raise ValidationError(f"short chord length must be >= 1, got {self.k}")

    @classmethod
    def sc(cls, k: int = 1) -> "Statistic":
        return cls("sc", k)

    @classmethod
    def lr(cls) -> "Statistic":
        return cls("lr")

    @classmethod
    def parse(cls, text: str) -> "Statistic":
        text = text.strip().lower()
        if text == "lr":
            return cls.lr()
        m = re.fullmatch(r"sc(\d*)", text)
        if m:
            return cls.sc(int(m.group(1)) if m.group(1) else 1)
        raise ValidationError(f"unknown statistic {text!r}")

    def __str__(self) -> str:
        return "lr" if self.kind == "lr" else f"sc{self.k}"

    def __call__(self, d: ChordDiagram) -> int:
        return lr_pairs(d) if self.kind == "lr" else short_chords(d, self.k)

    @property
    def kernel_code(self) -> int:
        return _kernels.STAT_LR if self.kind == "lr" else _kernels.STAT_SC


def short_chords(d: ChordDiagram, k: int = 1) -> int:
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    return sum(1 for i, q in enumerate(d.partner, start=1) if q - i == k)


def lr_pairs(d: ChordDiagram) -> int:
    # single pass over point roles
    total = 0
    prev_start = False
    for i, q in enumerate(d.partner, start=1):
        is_start = q > i
        if prev_start and not is_start:
            total += 1
        prev_start = is_start
    return total


def crossing_count(d: ChordDiagram) -> int:
    return sum(crossing(a, b) for a, b in combinations(d.chords(), 2))


def nesting_count(d: ChordDiagram) -> int:
    return sum(nesting(a, b) for a, b in combinations(d.chords(), 2))


def min_length(d: ChordDiagram) -> int:
    if d.n == 0:
        raise ValidationError("minimum chord length of the empty diagram is undefined")
    return min(c.length for c in d.chords())


@dataclass
class StatisticHistogram:
    """Exact distribution of a statistic; zero counts are not stored."""

    n: int
    filter: Filter
    statistic: Statistic
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.counts = {int(k): int(v) for k, v in sorted(self.counts.items()) if v}

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def dense(self, length: int | None = None) -> list[int]:
        """Counts for values ``0..length-1`` with explicit zeros."""
        if length is None:
            length = max(self.counts, default=-1) + 1
        return [self.counts.get(v, 0) for v in range(length)]

    def merge(self, other: "StatisticHistogram") -> "StatisticHistogram":
        if (self.n, self.filter, self.statistic) != (other.n, other.filter, other.statistic):
            raise ValidationError("cannot merge histograms of different streams or statistics")
        merged = Counter(self.counts)
        merged.update(other.counts)
        return StatisticHistogram(self.n, self.filter, self.statistic, dict(merged))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "filter": str(self.filter),
            "statistic": str(self.statistic),
            "counts": {str(k): v for k, v in self.counts.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "StatisticHistogram":
        data = json.loads(text)
        return cls(
            data["n"],
            Filter.parse(data["filter"]),
            Statistic.parse(data["statistic"]),
            {int(k): int(v) for k, v in data["counts"].items()},
        )


def _kernel_part(stream: DiagramStream, statistic: Statistic) -> StatisticHistogram:
    if stream.n == 0:
        counts = {statistic(ChordDiagram._trusted(())): 1} if stream.branches else {}
    else:
        arr = branch_histogram(stream.n, stream.filter, stream.branches, statistic.kernel_code, statistic.k)
        counts = {v: int(c) for v, c in enumerate(arr) if c}
    return StatisticHistogram(stream.n, stream.filter, statistic, counts)


def histogram(n: int, filter: Filter | None = None, statistic: Statistic | None = None,
              threads: int = 1) -> StatisticHistogram:
    """Exact distribution of ``statistic`` over all diagrams of size ``n`` passing ``filter``.

    With ``threads > 1`` the stream is split by the partner of point 1 and
    the parts are tallied concurrently; merging is by addition, so the result
    does not depend on the thread count.
    """
    filter = filter or Filter.all()
    statistic = statistic or Statistic.sc(1)
    stream = DiagramStream(n, filter)
    if threads <= 1 or n < 2:
        return _kernel_part(stream, statistic)
    parts = stream.split(len(stream.branches))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        partials = list(pool.map(lambda s: _kernel_part(s, statistic), parts))
    out = StatisticHistogram(n, filter, statistic)
    for part in partials:
        out = out.merge(part)
    return out


def histogram_by_iteration(n: int, filter: Filter | None = None,
                           statistic: Statistic | None = None) -> StatisticHistogram:
    """Same distribution as :func:`histogram`, by walking every diagram object."""
    filter = filter or Filter.all()
    statistic = statistic or Statistic.sc(1)
    counts = Counter(statistic(d) for d in DiagramStream(n, filter))
    return StatisticHistogram(n, filter, statistic, dict(counts))
