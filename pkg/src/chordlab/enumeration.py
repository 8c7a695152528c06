"""Deterministic, splittable enumeration of linear chord diagrams.

Order: the smallest unmatched point is paired with each larger unmatched
point in increasing order, depth first.  For ``n=2`` this gives
``(1,2)(3,4)``, ``(1,3)(2,4)``, ``(1,4)(2,3)``.

Filters prune partial matchings as soon as the newest chord violates them,
so noncrossing and nonnesting streams only visit Catalan-many leaves.
Practical bound for full streams of Python objects is ``n <= 10``; counting
goes through the compiled kernels in :mod:`chordlab._kernels`.
"""
from __future__ import annotations

import re
from math import comb
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels
from .diagram import ChordDiagram
from .errors import ValidationError

__all__ = ["Filter", "DiagramStream", "enumerate_diagrams", "split", "count", "double_factorial", "catalan"]


@dataclass(frozen=True)
class Filter:
    """One of ``all``, ``minlen=K``, ``noncrossing``, ``nonnesting``."""

    kind: str = "all"
    k: int = 1

    def __post_init__(self):
        if self.kind not in ("all", "minlen", "noncrossing", "nonnesting"):
            raise ValidationError(f"unknown filter {self.kind!r}")
        if self.kind == "minlen" and self.k < 1:
            raise ValidationError(f"minimum length must be >= 1, got {self.k}")

    @classmethod
    def all(cls) -> "Filter":
        return cls("all")

    @classmethod
    def min_length(cls, k: int) -> "Filter":
        return cls("minlen", k)

    @classmethod
    def noncrossing(cls) -> "Filter":
        return cls("noncrossing")

    @classmethod
    def nonnesting(cls) -> "Filter":
        return cls("nonnesting")

    @classmethod
    def parse(cls, text: str) -> "Filter":
        text = text.strip().lower()
        m = re.fullmatch(r"min(?:len|_length)?[=:]?(\d+)", text)
        if m:
            return cls.min_length(int(m.group(1)))
        if text in ("all", "noncrossing", "nonnesting"):
            return cls(text)
        raise ValidationError(f"unknown filter {text!r}")

    def __str__(self) -> str:
        return f"minlen={self.k}" if self.kind == "minlen" else self.kind

    @property
    def kernel_code(self) -> int:
        return {
            "all": _kernels.FILTER_ALL,
            "minlen": _kernels.FILTER_MINLEN,
            "noncrossing": _kernels.FILTER_NONCROSSING,
            "nonnesting": _kernels.FILTER_NONNESTING,
        }[self.kind]

    def admits(self, partner: list[int], i: int, j: int) -> bool:
        """Can ``(i, j)`` be added when ``i`` is the smallest unmatched point?"""
        if self.kind == "minlen":
            return j - i >= self.k
        if self.kind == "noncrossing":
            return all(not (0 < partner[p - 1] < i) for p in range(i + 1, j))
        if self.kind == "nonnesting":
            return all(not (0 < partner[p - 1] < i) for p in range(j + 1, len(partner) + 1))
        return True


def _walk(n: int, filt: Filter, first_partners) -> Iterator[ChordDiagram]:
    size = 2 * n
    if n == 0:
        yield ChordDiagram._trusted(())
        return
    partner = [0] * size

    def rec(i: int, placed: int):
        if placed == n:
            yield ChordDiagram._trusted(tuple(partner))
            return
        candidates = first_partners if placed == 0 else range(i + 1, size + 1)
        for j in candidates:
            if partner[j - 1] or not filt.admits(partner, i, j):
                continue
            partner[i - 1] = j
            partner[j - 1] = i
            nxt = i + 1
            while nxt <= size and partner[nxt - 1]:
                nxt += 1
            yield from rec(nxt, placed + 1)
            partner[i - 1] = 0
            partner[j - 1] = 0

    yield from rec(1, 0)


class DiagramStream:
    """Single-pass stream of the diagrams of size ``n`` passing ``filter``.

    ``branches`` lists the admissible partners of point 1; the default is
    ``2..2n``.  Streams produced by :func:`split` carry disjoint branch sets.
    For ``n = 0`` the single empty diagram is represented by the branch ``0``.
    """

    def __init__(self, n: int, filter: Filter | None = None, branches: tuple[int, ...] | None = None):
        if n < 0:
            raise ValidationError(f"n must be >= 0, got {n}")
        self.n = n
        self.filter = filter or Filter.all()
        if branches is None:
            branches = tuple(range(2, 2 * n + 1)) if n else (0,)
        self.branches = tuple(branches)
        self._iter: Iterator[ChordDiagram] | None = None

    @property
    def consumed(self) -> bool:
        return self._iter is not None

    def __iter__(self) -> Iterator[ChordDiagram]:
        if self._iter is None:
            if self.n == 0:
                self._iter = iter([ChordDiagram._trusted(())] if self.branches else [])
            else:
                self._iter = _walk(self.n, self.filter, self.branches)
        return self._iter

    def __next__(self) -> ChordDiagram:
        return next(iter(self))

    def split(self, parts: int) -> list["DiagramStream"]:
        return split(self, parts)

    def count(self) -> int:
        """Leaves of this (unconsumed) stream, counted by the compiled kernel."""
        if self.n == 0:
            return len(self.branches)
        return int(branch_histogram(self.n, self.filter, self.branches, _kernels.STAT_NONE, 1).sum())

    def __repr__(self) -> str:
        return f"DiagramStream(n={self.n}, filter={self.filter}, branches={self.branches})"


def enumerate_diagrams(n: int, filter: Filter | None = None) -> DiagramStream:
    return DiagramStream(n, filter)


def split(stream: DiagramStream, parts: int) -> list[DiagramStream]:
    """Partition ``stream`` by the partner of point 1 into ``parts`` contiguous groups.

    Concatenating the sub-streams in order reproduces the parent's order.
    When ``parts`` exceeds the number of branches the trailing streams are empty.
    """
    if parts < 1:
        raise ValidationError(f"parts must be >= 1, got {parts}")
    if stream.consumed:
        raise ValidationError("cannot split a stream that has already been consumed")
    branches = list(stream.branches)
    q, r = divmod(len(branches), parts)
    groups, pos = [], 0
    for p in range(parts):
        size = q + (1 if p < r else 0)
        groups.append(tuple(branches[pos:pos + size]))
        pos += size
    return [DiagramStream(stream.n, stream.filter, g) for g in groups]


def branch_histogram(n, filt: Filter, branches, stat, sk):
    """Kernel histogram summed over the given partners of point 1 (contiguous runs batched)."""
    out = np.zeros(2 * n + 1, np.int64)
    runs = []
    for b in sorted(branches):
        if runs and runs[-1][1] == b - 1:
            runs[-1][1] = b
        else:
            runs.append([b, b])
    for lo, hi in runs:
        out += _kernels.histogram(n, filt.kernel_code, filt.k, stat, sk, lo, hi)
    return out


def count(n: int, filter: Filter | None = None) -> int:
    """Number of diagrams of size ``n`` passing ``filter``, computed without materializing them."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    filt = filter or Filter.all()
    if n == 0:
        return 1
    return int(_kernels.histogram(n, filt.kernel_code, filt.k, _kernels.STAT_NONE, 1).sum())


def double_factorial(n: int) -> int:
    """``(2n - 1)!! = 1 * 3 * ... * (2n - 1)``; equals 1 for ``n = 0``."""
    out = 1
    for m in range(1, 2 * n, 2):
        out *= m
    return out


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
