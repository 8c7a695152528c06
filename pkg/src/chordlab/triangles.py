"""Number triangles built from recurrences and closed forms.

Kinds and column origins:

=========  ==========================================  ============
kind       entry                                       columns
=========  ==========================================  ============
L          diagrams with ``s`` chords of length one    s = 0..n
T          diagrams with ``k`` LR pairs                k = 1..n
E          second-order Eulerian numbers               k = 0..n-1
narayana   Narayana numbers                            k = 1..n
sullivan   diagrams with every chord of length >= k    k = 1..n
=========  ==========================================  ============

Everything except ``sullivan`` is computed from its own recurrence or closed
form, independent of enumeration.  ``sullivan`` has no recurrence and is
counted by the enumeration kernel, so its rows are capped (``DEFAULT_CAP``,
overridable through ``CHORDLAB_CAP``).

Note: the commonly reproduced table of L prints ``72135`` for ``L(8, 0)``;
the recurrence and the row sum ``(2*8 - 1)!! = 2027025`` both give
``721315``, which is what this module returns.
"""
from __future__ import annotations

import csv
import io
import json
import os
import threading
from math import comb, factorial

from .enumeration import Filter, count
from .errors import ResourceCapError, ValidationError

__all__ = ["KINDS", "L", "E", "T", "narayana", "sullivan", "row", "rows", "export", "enumeration_cap",
           "DEFAULT_CAP", "EXPORT_FORMATS", "RECURRENCE_LIMIT", "column_origin", "canonical_kind"]

KINDS = ("L", "T", "E", "narayana", "sullivan")
DEFAULT_CAP = 8
EXPORT_FORMATS = ("csv", "json", "bfile", "text")
RECURRENCE_LIMIT = 200

_ORIGIN = {"L": 0, "T": 1, "E": 0, "narayana": 1, "sullivan": 1}
_FIRST_ROW = {"L": 0, "T": 1, "E": 1, "narayana": 1, "sullivan": 1}


def enumeration_cap() -> int:
    value = os.environ.get("CHORDLAB_CAP")
    return int(value) if value else DEFAULT_CAP


def column_origin(kind: str) -> int:
    return _ORIGIN[canonical_kind(kind)]


def canonical_kind(kind: str) -> str:
    for k in KINDS:
        if kind.lower() == k.lower():
            return k
    raise ValidationError(f"unknown triangle kind {kind!r}; expected one of {', '.join(KINDS)}")


class _RowMemo:
    """Bottom-up row cache; readers only ever see fully built rows."""

    def __init__(self, first, step):
        self._rows = [first]
        self._step = step
        self._lock = threading.Lock()

    def get(self, index: int) -> list[int]:
        rows = self._rows
        if index < len(rows):
            return rows[index]
        with self._lock:
            while len(self._rows) <= index:
                nxt = self._step(len(self._rows), self._rows[-1])
                self._rows = self._rows + [nxt]
            return self._rows[index]


def _l_step(n, prev):
    # prev is row n-1 (length n); returns row n (length n+1)
    def at(s):
        return prev[s] if 0 <= s < len(prev) else 0
    return [at(s - 1) + (2 * n - 2 - s) * at(s) + (s + 1) * at(s + 1) for s in range(n + 1)]


def _e_step(index, prev):
    n = index + 1
    def at(k):
        return prev[k] if 0 <= k < len(prev) else 0
    return [(k + 1) * at(k) + (2 * n - k - 1) * at(k - 1) for k in range(n)]


def _t_step(index, prev):
    n = index + 1
    def at(k):
        return prev[k - 1] if 1 <= k <= len(prev) else 0
    row = [factorial(n)]
    row += [(n - k + 1) * at(k - 1) + (n - 1 + k) * at(k) for k in range(2, n + 1)]
    return row


_L_ROWS = _RowMemo([1], _l_step)        # index n
_E_ROWS = _RowMemo([1], _e_step)        # index n-1
_T_ROWS = _RowMemo([1], _t_step)        # index n-1
_SULLIVAN: dict[tuple[int, int], int] = {}
_SULLIVAN_LOCK = threading.Lock()


def _check_limit(n):
    if n > RECURRENCE_LIMIT:
        raise ResourceCapError(n, RECURRENCE_LIMIT)


def L(n: int, s: int) -> int:
    """Diagrams with ``n`` chords of which exactly ``s`` have length one."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    if s < 0 or s > n:
        return 0
    _check_limit(n)
    return _L_ROWS.get(n)[s]


def E(n: int, k: int) -> int:
    if n < 1 or not 0 <= k <= n - 1:
        raise ValidationError(f"E({n},{k}) is outside 1 <= n, 0 <= k <= n-1")
    _check_limit(n)
    return _E_ROWS.get(n - 1)[k]


def T(n: int, k: int) -> int:
    if n < 1 or not 1 <= k <= n:
        raise ValidationError(f"T({n},{k}) is outside 1 <= k <= n")
    _check_limit(n)
    return _T_ROWS.get(n - 1)[k - 1]


def narayana(n: int, k: int) -> int:
    if n < 1 or not 1 <= k <= n:
        raise ValidationError(f"N({n},{k}) is outside 1 <= k <= n")
    q, r = divmod(comb(n - 1, k - 1) * comb(n, k - 1), k)
    if r:
        raise AssertionError(f"Narayana division not exact at ({n},{k})")
    return q


def sullivan(n: int, k: int, cap: int | None = None) -> int:
    """Diagrams with ``n`` chords all of length at least ``k`` (enumeration-backed)."""
    if n < 1 or not 1 <= k <= n:
        raise ValidationError(f"Sullivan({n},{k}) is outside 1 <= k <= n")
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise ResourceCapError(n, cap)
    key = (n, k)
    if key not in _SULLIVAN:
        value = count(n, Filter.min_length(k))
        with _SULLIVAN_LOCK:
            _SULLIVAN[key] = value
    return _SULLIVAN[key]


def row(kind: str, n: int, cap: int | None = None) -> list[int]:
    """Row ``n`` of a triangle, trimmed to its shape."""
    kind = canonical_kind(kind)
    if n < _FIRST_ROW[kind]:
        raise ValidationError(f"triangle {kind} has no row {n}")
    if kind == "L":
        _check_limit(n)
        return list(_L_ROWS.get(n))
    if kind == "E":
        _check_limit(n)
        return list(_E_ROWS.get(n - 1))
    if kind == "T":
        _check_limit(n)
        return list(_T_ROWS.get(n - 1))
    if kind == "narayana":
        return [narayana(n, k) for k in range(1, n + 1)]
    return [sullivan(n, k, cap) for k in range(1, n + 1)]


def rows(kind: str, n_max: int, cap: int | None = None) -> list[tuple[int, list[int]]]:
    kind = canonical_kind(kind)
    return [(n, row(kind, n, cap)) for n in range(_FIRST_ROW[kind], n_max + 1)]


def export(kind: str, n_max: int, format: str = "csv", cap: int | None = None) -> str:
    """Render rows ``first..n_max`` as ``csv``, ``json``, ``bfile`` or ``text``.

    * csv: header ``n,<col>,...``; one line per row, out-of-shape cells empty.
    * json: array of arrays, one per row starting at the triangle's first row.
    * bfile: ``index value`` lines in row-major reading order.  The index
      starts at 0 for L (its first row is n=0) and at 1 for the other kinds.
    * text: ``n: v v v`` per row.
    """
    if format not in EXPORT_FORMATS:
        raise ValidationError(f"unsupported export format {format!r}")
    kind = canonical_kind(kind)
    data = rows(kind, n_max, cap)
    origin = _ORIGIN[kind]
    if format == "json":
        return json.dumps([r for _, r in data], separators=(",", ":")) + "\n"
    if format == "csv":
        width = max((len(r) for _, r in data), default=0)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n"] + [str(origin + c) for c in range(width)])
        for n, r in data:
            writer.writerow([n] + r + [""] * (width - len(r)))
        return buf.getvalue()
    if format == "bfile":
        offset = 0 if kind == "L" else 1
        lines = []
        for _, r in data:
            for v in r:
                lines.append(f"{offset} {v}")
                offset += 1
        return "".join(line + "\n" for line in lines)
    if format == "text":
        return "".join(f"{n}: {' '.join(map(str, r))}\n" for n, r in data)
    raise ValidationError(f"unsupported export format {format!r}")
