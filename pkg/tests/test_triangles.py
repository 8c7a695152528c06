import json
from math import comb, factorial

import pytest

from chordlab import triangles
from chordlab.enumeration import double_factorial
from chordlab.errors import ResourceCapError, ValidationError
from chordlab.triangles import E, L, T, narayana, sullivan

from golden import E_ROWS, L_ROWS, NARAYANA_ROWS, SULLIVAN_ROWS, T_ROWS


@pytest.mark.parametrize("kind, table", [
    ("L", L_ROWS), ("T", T_ROWS), ("E", E_ROWS), ("narayana", NARAYANA_ROWS), ("sullivan", SULLIVAN_ROWS),
])
def test_reference_rows(kind, table):
    for n, want in table.items():
        assert triangles.row(kind, n) == want, (kind, n)


def test_l_8_0_correction():
    # widely reproduced tables drop a digit here
    assert L(8, 0) == 721315 != 72135
    assert L(8, 0) == 14 * L(7, 0) + L(7, 1)
    assert sum(triangles.row("L", 8)) == double_factorial(8) == 2027025


def test_l_three_term_recurrence_by_hand():
    # L(4,1) = L(3,0) + (8-2-1) L(3,1) + 2 L(3,2) = 5 + 30 + 6
    assert L(4, 1) == 41


@pytest.mark.parametrize("n", range(0, 31))
def test_row_sums(n):
    assert sum(triangles.row("L", n)) == double_factorial(n)
    if n:
        assert sum(triangles.row("T", n)) == sum(triangles.row("E", n)) == double_factorial(n)
        assert sum(triangles.row("narayana", n)) == comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", range(1, 26))
def test_reversal_and_boundaries(n):
    assert triangles.row("T", n) == triangles.row("E", n)[::-1]
    assert T(n, 1) == factorial(n) and T(n, n) == 1 and E(n, 0) == 1
    assert L(n, n) == 1 and L(n, n - 1) == comb(n, 2)


def test_out_of_shape():
    assert L(3, 4) == 0 and L(3, -1) == 0
    for f, args in [(E, (3, 3)), (E, (0, 0)), (T, (3, 0)), (T, (3, 4)), (narayana, (2, 3)), (sullivan, (2, 0))]:
        with pytest.raises(ValidationError):
            f(*args)
    with pytest.raises(ValidationError):
        L(-1, 0)
    with pytest.raises(ValidationError):
        triangles.row("T", 0)
    with pytest.raises(ValidationError):
        triangles.row("Q", 3)


def test_limits():
    with pytest.raises(ResourceCapError):
        L(triangles.RECURRENCE_LIMIT + 1, 0)
    with pytest.raises(ResourceCapError):
        sullivan(6, 1, cap=5)
    assert sullivan(5, 2, cap=5) == 329


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("CHORDLAB_CAP", "3")
    assert triangles.enumeration_cap() == 3
    with pytest.raises(ResourceCapError):
        triangles.row("sullivan", 4)


def test_kind_is_case_insensitive():
    assert triangles.row("l", 3) == triangles.row("L", 3)
    assert triangles.canonical_kind("NARAYANA") == "narayana"


def test_export_csv():
    assert triangles.export("T", 3, "csv") == "n,1,2,3\n1,1,,\n2,2,1,\n3,6,8,1\n"
    assert triangles.export("L", 2, "csv") == "n,0,1,2\n0,1,,\n1,0,1,\n2,1,1,1\n"


def test_export_json_text_bfile():
    assert json.loads(triangles.export("E", 4, "json")) == [E_ROWS[n] for n in range(1, 5)]
    assert triangles.export("narayana", 3, "text") == "1: 1\n2: 1 1\n3: 1 3 1\n"
    assert triangles.export("L", 2, "bfile") == "0 1\n1 0\n2 1\n3 1\n4 1\n5 1\n"
    assert triangles.export("T", 2, "bfile") == "1 1\n2 2\n3 1\n"


def test_export_rejects_format():
    with pytest.raises(ValidationError):
        triangles.export("L", 3, "xml")
