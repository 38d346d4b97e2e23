import pytest
from hypothesis import given

from invtab.diagram import (
    InversionsDiagram, diagram_of, is_dominant_shape, is_downward_closed, is_valid,
    permutation_of, removable_boxes, render, staircase,
)
from invtab.exceptions import InvalidDiagramError
from invtab.perm import all_permutations, identity, inversions, lehmer_code, longest, parse_permutation

from conftest import perms

INV_451623 = {(1, 3), (1, 5), (1, 6), (2, 3), (2, 5), (2, 6), (4, 5), (4, 6)}


def test_diagram_roundtrip_examples():
    d = diagram_of(parse_permutation("451623"))
    assert set(d.shaded) == INV_451623
    assert permutation_of(InversionsDiagram(6, tuple(INV_451623))) == (4, 5, 1, 6, 2, 3)


def test_trivial_diagrams():
    assert len(diagram_of(identity(4))) == 0
    assert set(diagram_of(longest(4)).shaded) == set(staircase(4))
    assert permutation_of(InversionsDiagram(2, ((1, 2),))) == (2, 1)


def test_validity():
    assert not is_valid({(1, 2), (2, 3)}, 3)
    assert not is_valid({(1, 3)}, 3)
    assert is_valid(set(), 4) and is_valid(staircase(4), 4)
    with pytest.raises(InvalidDiagramError):
        permutation_of(InversionsDiagram(3, ((1, 2), (2, 3))))
    with pytest.raises(InvalidDiagramError):
        InversionsDiagram(3, ((2, 2),))


def test_valid_sets_are_exactly_inversion_sets():
    # every subset of the S_4 staircase
    boxes = staircase(4)
    valid = set()
    for mask in range(1 << len(boxes)):
        s = frozenset(b for k, b in enumerate(boxes) if mask >> k & 1)
        if is_valid(s, 4):
            valid.add(s)
    assert valid == {inversions(w) for w in all_permutations(4)}


@given(perms())
def test_rows_and_columns(w):
    d = diagram_of(w)
    assert permutation_of(d) == w
    assert [len(d.row(i)) for i in range(1, w.n + 1)] == list(lehmer_code(w))
    assert d.to_json() == InversionsDiagram.from_json(d.to_json()).to_json()


@given(perms())
def test_removable_boxes_are_weak_down_steps(w):
    for box in removable_boxes(w):
        smaller = set(inversions(w)) - {box}
        assert is_valid(smaller, w.n)
    assert len(removable_boxes(w)) == sum(1 for a in range(1, w.n) if w.position(a + 1) < w.position(a))


def test_dominant_shapes():
    d = diagram_of(parse_permutation("867435912"))
    assert is_downward_closed(d) and is_dominant_shape(d)
    assert is_downward_closed(diagram_of(identity(3)))
    d = diagram_of((1, 3, 2))
    assert set(d.shaded) == {(2, 3)}
    assert not is_downward_closed(d) and not is_dominant_shape(d)


def test_render():
    text = render(diagram_of((2, 1, 3)))
    assert text.splitlines()[-2].endswith("# .")
