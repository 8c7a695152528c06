"""Bijective constructions on chord diagrams.

* ``unwrap``/``rewrap``: marked short chords <-> diagrams.  Unwrapping the
  short chord ``(i, i+1)`` replaces it with ``(1, i+1)`` and moves every
  point ``p <= i-1`` to ``p+1``; a mark at ``(1, 2)`` is a fixed point.
* ``phi``: the injections witnessing unimodality of the short-chord
  distribution, built from the two maps above.  Some write-ups describe the
  new chord as ``(1, i)``; that does not give a consistent relabeling, so
  ``phi`` uses ``(1, i+1)`` exactly like ``unwrap``.  Injectivity is checked
  exhaustively in the test suite rather than taken on trust.
* ``dyck_to_matching``/``matching_to_dyck``: Dyck paths <-> nonnesting
  diagrams, carrying peaks to LR pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .diagram import Chord, ChordDiagram, from_chords
from .errors import ValidationError
from .statistics import short_chords

__all__ = [
    "MarkedDiagram",
    "DyckPath",
    "unwrap",
    "rewrap",
    "phi",
    "dyck_to_matching",
    "matching_to_dyck",
    "dyck_paths",
    "marked_diagrams",
]


@dataclass(frozen=True, order=True)
class MarkedDiagram:
    diagram: ChordDiagram
    mark: Chord

    def __post_init__(self):
        mark = self.mark
        if not isinstance(mark, Chord):
            object.__setattr__(self, "mark", mark := Chord.normalized(*mark))
        if mark.length != 1:
            raise ValidationError(f"mark {mark} is not a chord of length one")
        if mark.end > 2 * self.diagram.n or self.diagram.partner_of(mark.start) != mark.end:
            raise ValidationError(f"mark {mark} is not a chord of {self.diagram}")

    def __str__(self) -> str:
        return f"{self.diagram} mark={self.mark}"


@dataclass(frozen=True, order=True)
class DyckPath:
    """Up/down steps as a string over ``U`` and ``D``."""

    steps: str

    def __post_init__(self):
        height = 0
        for pos, step in enumerate(self.steps, start=1):
            if step == "U":
                height += 1
            elif step == "D":
                height -= 1
            else:
                raise ValidationError(f"invalid step {step!r} at position {pos}")
            if height < 0:
                raise ValidationError(f"path {self.steps!r} goes below the axis at step {pos}")
        if height:
            raise ValidationError(f"path {self.steps!r} is unbalanced")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    @property
    def peaks(self) -> int:
        return self.steps.count("UD")

    def __str__(self) -> str:
        return self.steps


def unwrap(md: MarkedDiagram) -> ChordDiagram:
    d, (i, _) = md.diagram, md.mark
    if i == 1:
        return d
    pairs = [
        (c.start + (c.start <= i - 1), c.end + (c.end <= i - 1))
        for c in d.chords() if c.start != i
    ]
    pairs.append((1, i + 1))
    return from_chords(pairs, d.n)


def rewrap(d: ChordDiagram) -> MarkedDiagram:
    if d.n == 0:
        raise ValidationError("the empty diagram has no first chord")
    top = d.partner_of(1)
    if top == 2:
        return MarkedDiagram(d, Chord(1, 2))
    i = top - 1
    pairs = [
        (c.start - (2 <= c.start <= i), c.end - (2 <= c.end <= i))
        for c in d.chords() if c.start != 1
    ]
    pairs.append((i, i + 1))
    return MarkedDiagram(from_chords(pairs, d.n), Chord(i, i + 1))


def phi(d: ChordDiagram, j: int | None = None) -> ChordDiagram:
    """Injection from diagrams with ``j`` short chords to ``j-1`` (j >= 2) or to 1 (j = 0)."""
    sc = short_chords(d, 1)
    if j is None:
        j = sc
    if j != sc:
        raise ValidationError(f"diagram has {sc} short chords, not {j}")
    if j == 1:
        raise ValidationError("phi is not defined on diagrams with exactly one short chord")
    if j == 0:
        if d.n == 0:
            raise ValidationError("phi is not defined on the empty diagram")
        return rewrap(d).diagram
    last = max(c for c in d.chords() if c.length == 1)
    return unwrap(MarkedDiagram(d, last))


def dyck_to_matching(p: DyckPath) -> ChordDiagram:
    """Connect the i-th up step with the i-th down step."""
    ups = [pos for pos, s in enumerate(p.steps, start=1) if s == "U"]
    downs = [pos for pos, s in enumerate(p.steps, start=1) if s == "D"]
    return from_chords(zip(ups, downs), p.n)


def matching_to_dyck(d: ChordDiagram) -> DyckPath:
    chords = d.chords()
    # in a nonnesting diagram chords ordered by start are also ordered by end
    for a, b in zip(chords, chords[1:]):
        if a.end > b.end:
            raise ValidationError(f"chords {a} and {b} nest")
    return DyckPath("".join("U" if d.is_start(p) else "D" for p in range(1, 2 * d.n + 1)))


def dyck_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength ``n`` in lexicographic order (U < D)."""
    def rec(prefix, up, down):
        if down == n:
            yield DyckPath("".join(prefix))
            return
        if up < n:
            prefix.append("U")
            yield from rec(prefix, up + 1, down)
            prefix.pop()
        if down < up:
            prefix.append("D")
            yield from rec(prefix, up, down + 1)
            prefix.pop()

    yield from rec([], 0, 0)


def marked_diagrams(diagrams) -> Iterator[MarkedDiagram]:
    """Every (diagram, short chord) pair drawn from ``diagrams``."""
    for d in diagrams:
        for c in d.chords():
            if c.length == 1:
                yield MarkedDiagram(d, c)
