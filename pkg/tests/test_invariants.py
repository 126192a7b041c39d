from conftest import path, star
from thinspect.invariants import (
    invariant_violations,
    neighbors_other_class,
    no_double_crossing,
    reverse_symmetry,
    same_class_neighbors,
)
from thinspect.thinness import Representation
from thinspect.tree import Tree


def test_same_class_neighbors_flags_two_on_one_side(claw):
    rep = Representation.build([0, 1, 2, 3], [0, 0, 0, 1])
    assert same_class_neighbors(claw, rep) == [(0, "after", (1, 2))]


def test_neighbors_other_class_flags_inner_non_leaf():
    # vertex 0 in one class, neighbours 1, 2, 3 in the other; 2 has a leaf
    t = Tree.from_edges(5, [(0, 1), (0, 2), (0, 3), (2, 4)])
    rep = Representation.build([0, 1, 2, 3, 4], [0, 1, 1, 1, 0])
    assert neighbors_other_class(t, rep) == [(0, 2)]
    three = Representation.build([0, 1, 2, 3, 4], [0, 1, 1, 1, 2])
    assert neighbors_other_class(t, three) == []


def test_no_double_crossing_flags_pattern():
    t = path(4)
    # v1=0 < v3=2 and v4=3 < v2=1 with classes 0,1,0,1
    rep = Representation.build([0, 2, 3, 1], [0, 1, 0, 1])
    assert (0, 1, 2, 3) in no_double_crossing(t, rep)


def test_reverse_symmetry_holds_on_valid():
    rep = Representation.build([1, 3, 0, 4, 2], [0, 0, 0, 1, 1])
    assert reverse_symmetry(star(4), rep) == []


def test_clean_representation_has_no_violations():
    rep = Representation.build([1, 3, 0, 4, 2], [0, 0, 0, 1, 1])
    assert invariant_violations(star(4), rep) == {}
