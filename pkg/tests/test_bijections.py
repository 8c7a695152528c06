from collections import Counter

import pytest

from chordlab import DiagramStream, Filter, from_chords, parse_diagram
from chordlab.bijections import (DyckPath, MarkedDiagram, dyck_paths, dyck_to_matching, marked_diagrams,
                                 matching_to_dyck, phi, rewrap, unwrap)
from chordlab.diagram import Chord, parse_chord
from chordlab.enumeration import catalan
from chordlab.errors import ValidationError
from chordlab.statistics import lr_pairs, short_chords
from chordlab.verify import UNWRAP_N3


@pytest.mark.parametrize("src, mark, dst", UNWRAP_N3)
def test_unwrap_reference_table(src, mark, dst):
    md = MarkedDiagram(parse_diagram(src), parse_chord(mark))
    assert unwrap(md).to_text() == dst
    assert rewrap(parse_diagram(dst)) == md


def test_reference_table_is_complete():
    assert sorted(dst for *_, dst in UNWRAP_N3) == sorted(d.to_text() for d in DiagramStream(3))
    assert len({(s, m) for s, m, _ in UNWRAP_N3}) == 15


@pytest.mark.parametrize("n", range(1, 7))
def test_unwrap_bijection(n):
    images = Counter(unwrap(md) for md in marked_diagrams(DiagramStream(n)))
    assert set(images) == set(DiagramStream(n))
    assert set(images.values()) == {1}


@pytest.mark.parametrize("n", range(1, 6))
def test_round_trips(n):
    for d in DiagramStream(n):
        assert unwrap(rewrap(d)) == d
    for md in marked_diagrams(DiagramStream(n)):
        assert rewrap(unwrap(md)) == md


def test_unwrap_at_first_position_is_identity():
    d = parse_diagram("(1,2)(3,5)(4,6)")
    assert unwrap(MarkedDiagram(d, Chord(1, 2))) == d


def test_marked_diagram_validation():
    d = parse_diagram("(1,3)(2,4)")
    with pytest.raises(ValidationError):
        MarkedDiagram(d, Chord(1, 3))
    with pytest.raises(ValidationError):
        MarkedDiagram(parse_diagram("(1,4)(2,3)"), Chord(3, 4))
    md = MarkedDiagram(parse_diagram("(1,4)(2,3)"), (3, 2))
    assert md.mark == Chord(2, 3)
    assert str(md) == "(1,4)(2,3) mark=(2,3)"
    with pytest.raises(ValidationError):
        rewrap(from_chords([], 0))


@pytest.mark.parametrize("n", range(1, 7))
def test_phi_injective_into_expected_class(n):
    classes = {}
    for d in DiagramStream(n):
        classes.setdefault(short_chords(d), []).append(d)
    for j, members in classes.items():
        if j == 1:
            continue
        images = [phi(d) for d in members]
        assert len(set(images)) == len(images)
        assert {short_chords(im) for im in images} == {1 if j == 0 else j - 1}


def test_phi_examples_and_errors():
    assert phi(parse_diagram("(1,2)(3,4)")).to_text() == "(1,4)(2,3)"
    assert phi(parse_diagram("(1,3)(2,4)")).to_text() == "(1,4)(2,3)"
    with pytest.raises(ValidationError):
        phi(parse_diagram("(1,2)"))
    with pytest.raises(ValidationError):
        phi(parse_diagram("(1,2)(3,4)"), j=0)
    with pytest.raises(ValidationError):
        phi(from_chords([], 0))


def test_dyck_examples():
    p = DyckPath("UUDUDD")
    assert p.n == 3 and p.peaks == 2
    d = dyck_to_matching(p)
    assert d.to_text() == "(1,3)(2,5)(4,6)"
    assert lr_pairs(d) == 2
    assert matching_to_dyck(d) == p
    assert dyck_to_matching(DyckPath("")).n == 0


@pytest.mark.parametrize("steps", ["UDU", "DU", "UDDU", "UXD"])
def test_bad_dyck_paths(steps):
    with pytest.raises(ValidationError):
        DyckPath(steps)


def test_matching_to_dyck_rejects_nesting():
    with pytest.raises(ValidationError, match=r"\(1,4\) and \(2,3\) nest"):
        matching_to_dyck(parse_diagram("(1,4)(2,3)"))


@pytest.mark.parametrize("n", range(0, 8))
def test_dyck_bijection(n):
    paths = list(dyck_paths(n))
    assert len(paths) == len(set(paths)) == catalan(n)
    assert paths == sorted(paths, key=lambda p: p.steps.replace("D", "V"))
    images = {dyck_to_matching(p) for p in paths}
    assert images == set(DiagramStream(n, Filter.nonnesting()))
    for p in paths:
        d = dyck_to_matching(p)
        assert matching_to_dyck(d) == p and p.peaks == lr_pairs(d)
