"""Linear chord diagrams: perfect matchings on the points 1..2n.

A diagram is stored as its partner sequence: ``partner[p - 1]`` is the point
matched with ``p``.  All public interfaces speak 1-based points.

Text form is ``(a,b)(c,d)...`` with chords sorted by startpoint; the empty
diagram serializes to the empty string.  JSON form is a list of two-element
lists in the same order.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ValidationError

__all__ = [
    "Chord",
    "ChordDiagram",
    "from_chords",
    "chords",
    "crossing",
    "nesting",
    "parse_diagram",
    "parse_chord",
]


class _ChordBase(NamedTuple):
    start: int
    end: int


class Chord(_ChordBase):
    """A chord ``(start, end)`` with ``start < end``."""

    __slots__ = ()

    def __new__(cls, start: int, end: int):
        if start >= end:
            raise ValidationError(f"chord ({start},{end}) must have start < end")
        return super().__new__(cls, start, end)

    @classmethod
    def normalized(cls, a: int, b: int) -> "Chord":
        return cls(min(a, b), max(a, b))

    @property
    def length(self) -> int:
        return self.end - self.start

    def __str__(self) -> str:
        return f"({self.start},{self.end})"


@dataclass(frozen=True, order=True)
class ChordDiagram:
    """Immutable perfect matching; equality, hashing and order use ``partner``."""

    partner: tuple[int, ...]

    def __post_init__(self):
        p = self.partner
        if not isinstance(p, tuple):
            object.__setattr__(self, "partner", p := tuple(p))
        size = len(p)
        if size % 2:
            raise ValidationError(f"odd number of points ({size})")
        for i, q in enumerate(p, start=1):
            if not 1 <= q <= size:
                raise ValidationError(f"point {i} has out-of-range partner {q}")
            if q == i:
                raise ValidationError(f"point {i} is matched with itself")
            if p[q - 1] != i:
                raise ValidationError(f"point {q} is not matched back to {i}")

    @classmethod
    def _trusted(cls, partner: tuple[int, ...]) -> "ChordDiagram":
        # Skips validation; callers guarantee an involution without fixed points.
        obj = object.__new__(cls)
        object.__setattr__(obj, "partner", partner)
        return obj

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def chords(self) -> list[Chord]:
        return [Chord(i, q) for i, q in enumerate(self.partner, start=1) if q > i]

    def partner_of(self, point: int) -> int:
        return self.partner[point - 1]

    def is_start(self, point: int) -> bool:
        return self.partner[point - 1] > point

    def to_text(self) -> str:
        return "".join(str(c) for c in self.chords())

    def to_json(self) -> str:
        return json.dumps([[c.start, c.end] for c in self.chords()], separators=(",", ":"))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"ChordDiagram({self.to_text() or '<empty>'})"


def from_chords(pairs: Iterable[Sequence[int]], n: int | None = None) -> ChordDiagram:
    """Build a diagram from ``n`` pairs covering the points 1..2n exactly once."""
    pairs = [tuple(p) for p in pairs]
    if n is None:
        n = len(pairs)
    if len(pairs) != n:
        raise ValidationError(f"expected {n} chords, got {len(pairs)}")
    size = 2 * n
    partner = [0] * size
    for pair in pairs:
        if len(pair) != 2:
            raise ValidationError(f"chord {pair!r} does not have two points")
        a, b = pair
        for point in (a, b):
            if not isinstance(point, int) or not 1 <= point <= size:
                raise ValidationError(f"point {point} out of range 1..{size}")
        if a == b or partner[a - 1] or partner[b - 1]:
            dup = a if (a == b or partner[a - 1]) else b
            raise ValidationError(f"point {dup} duplicated")
        partner[a - 1] = b
        partner[b - 1] = a
    return ChordDiagram._trusted(tuple(partner))


def chords(d: ChordDiagram) -> list[Chord]:
    return d.chords()


def _ordered(c1: Chord, c2: Chord) -> tuple[Chord, Chord]:
    if len({c1.start, c1.end, c2.start, c2.end}) != 4:
        raise ValidationError(f"chords {c1} and {c2} share a point")
    return (c1, c2) if c1.start < c2.start else (c2, c1)


def crossing(c1: Chord, c2: Chord) -> bool:
    (a1, b1), (a2, b2) = _ordered(c1, c2)
    return a1 < a2 < b1 < b2


def nesting(c1: Chord, c2: Chord) -> bool:
    (a1, b1), (a2, b2) = _ordered(c1, c2)
    return a1 < a2 < b2 < b1


_CHORD_RE = re.compile(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*")


def parse_chord(text: str) -> Chord:
    m = _CHORD_RE.fullmatch(text)
    if not m:
        raise ValidationError(f"cannot parse chord {text!r}")
    return Chord.normalized(int(m.group(1)), int(m.group(2)))


def parse_diagram(text: str) -> ChordDiagram:
    """Parse the text form (or a JSON list of pairs) into a diagram."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            pairs = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"bad JSON diagram: {exc}") from None
        return from_chords(pairs)
    pairs = []
    pos = 0
    while pos < len(stripped):
        m = _CHORD_RE.match(stripped, pos)
        if not m:
            raise ValidationError(f"cannot parse diagram {text!r} at offset {pos}")
        pairs.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    return from_chords(pairs)
