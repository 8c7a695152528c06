import pytest
from hypothesis import given, settings, strategies as st

from chordlab import DiagramStream, Filter, ValidationError, catalan, count, crossing, double_factorial, nesting
from chordlab.enumeration import enumerate_diagrams, split


def _passes(d, filt):
    cs = d.chords()
    pairs = [(a, b) for i, a in enumerate(cs) for b in cs[i + 1:]]
    if filt.kind == "minlen":
        return all(c.length >= filt.k for c in cs)
    if filt.kind == "noncrossing":
        return not any(crossing(a, b) for a, b in pairs)
    if filt.kind == "nonnesting":
        return not any(nesting(a, b) for a, b in pairs)
    return True


FILTERS = [Filter.all(), Filter.min_length(2), Filter.min_length(3), Filter.noncrossing(), Filter.nonnesting()]


@pytest.mark.parametrize("n, expected", [(2, 3), (3, 15)])
def test_enumerate_all_counts(n, expected):
    assert len(list(enumerate_diagrams(n))) == expected


def test_enumerate_n5_min_length_3():
    assert len(list(enumerate_diagrams(5, Filter.min_length(3)))) == 99


def test_enumerate_noncrossing_n3():
    got = [d.to_text() for d in enumerate_diagrams(3, Filter.noncrossing())]
    assert sorted(got) == sorted(["(1,6)(2,5)(3,4)", "(1,6)(2,3)(4,5)", "(1,4)(2,3)(5,6)",
                                  "(1,2)(3,6)(4,5)", "(1,2)(3,4)(5,6)"])


def test_documented_order():
    assert [d.to_text() for d in enumerate_diagrams(2)] == ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]
    # lexicographic on the partner sequence
    ds = list(enumerate_diagrams(4))
    assert ds == sorted(ds)


def test_empty_diagram():
    assert [d.n for d in enumerate_diagrams(0)] == [0]
    assert count(0) == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_matches_brute_force(n, brute):
    for filt in FILTERS:
        expected = sorted(d for d in brute(n) if _passes(d, filt))
        assert list(enumerate_diagrams(n, filt)) == expected


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("filt", FILTERS, ids=str)
def test_yields_pass_filter_exactly_once(n, filt):
    ds = list(enumerate_diagrams(n, filt))
    assert len(set(ds)) == len(ds)
    assert all(_passes(d, filt) for d in ds)
    assert len(ds) == count(n, filt)


@pytest.mark.parametrize("n", range(0, 9))
def test_full_count_is_double_factorial(n):
    assert count(n) == double_factorial(n)


@pytest.mark.parametrize("n", range(0, 8))
def test_catalan_counts(n):
    assert count(n, Filter.noncrossing()) == catalan(n)
    assert count(n, Filter.nonnesting()) == catalan(n)


def test_full_iteration_n7():
    assert sum(1 for _ in enumerate_diagrams(7)) == 135135


@pytest.mark.parametrize("n, filt, expected", [
    (4, Filter.all(), 105),
    (5, Filter.min_length(2), 329),
    (0, Filter.all(), 1),
])
def test_count_examples(n, filt, expected):
    assert count(n, filt) == expected


def test_split_n3_five_parts():
    parts = split(enumerate_diagrams(3), 5)
    listed = [list(p) for p in parts]
    assert [len(x) for x in listed] == [3] * 5
    assert [{d.partner_of(1) for d in x} for x in listed] == [{2}, {3}, {4}, {5}, {6}]


def test_split_small():
    assert [len(list(p)) for p in split(enumerate_diagrams(1), 1)] == [1]
    assert [len(list(p)) for p in split(enumerate_diagrams(2), 3)] == [1, 1, 1]


def test_split_rejects_bad_parts_and_consumed_stream():
    with pytest.raises(ValidationError):
        split(enumerate_diagrams(3), 0)
    s = enumerate_diagrams(3)
    next(s)
    with pytest.raises(ValidationError):
        s.split(2)


def test_stream_is_single_pass():
    s = enumerate_diagrams(2)
    assert len(list(s)) == 3
    assert list(s) == []


@settings(max_examples=40, deadline=None)
@given(n=st.integers(0, 6), parts=st.integers(1, 14), fi=st.integers(0, len(FILTERS) - 1))
def test_split_is_ordered_partition(n, parts, fi):
    filt = FILTERS[fi]
    whole = list(DiagramStream(n, filt))
    pieces = split(DiagramStream(n, filt), parts)
    assert len(pieces) == parts
    assert [d for p in pieces for d in p] == whole
    counts = [p.count() for p in split(DiagramStream(n, filt), parts)]
    assert sum(counts) == count(n, filt) == len(whole)


def test_filter_parse_round_trip():
    for f in FILTERS:
        assert Filter.parse(str(f)) == f
    with pytest.raises(ValidationError):
        Filter.parse("crossing")
    with pytest.raises(ValidationError):
        Filter.min_length(0)
