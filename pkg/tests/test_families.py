import random

import pytest

from conftest import path
from thinspect.families import (
    MINIMAL,
    TA_CENTERS,
    TA_JOIN,
    FamilySpec,
    build_family,
    random_caterpillar,
    random_long_haired_caterpillar,
    ta_copies,
    ta_tree,
)
from thinspect.tree import is_caterpillar, is_path_graph, unique_path


def test_t0_is_five_legged_spider():
    t = build_family(FamilySpec("T0"))
    assert t.n == 11 and t.degree(0) == 5
    assert all(t.degree(y) == 2 for y in t.adj[0])
    assert t == build_family(FamilySpec("Spider", (5, 2)))


@pytest.mark.parametrize(
    "name, params, n",
    [("T0", (), 11), ("T1", (), 13), ("T2", (2, 2, 2), 13), ("T3", (2, 2), 13),
     ("T4", (2,), 13), ("T5", (1, 1), 11), ("T2", (2, 3, 5), 17), ("T3", (3, 4), 16),
     ("T4", (5,), 16), ("T5", (2, 3), 14)],
)
def test_family_sizes(name, params, n):
    t = build_family(FamilySpec(name, params))
    assert t.n == n and len(t.edges) == n - 1


@pytest.mark.parametrize("i,j,k", [(2, 2, 2), (2, 3, 4), (5, 2, 7)])
def test_t2_vertex_count(i, j, k):
    assert build_family(FamilySpec("T2", (i, j, k))).n == 7 + i + j + k


def test_t2_structure():
    t = build_family(FamilySpec("T2", (2, 2, 2)))
    branch = [v for v in range(t.n) if t.degree(v) == 3 and v != 0]
    assert t.degree(0) == 3 and len(branch) == 3
    assert all(len(unique_path(t, 0, b)) - 1 == 2 for b in branch)
    assert sum(1 for v in range(t.n) if t.degree(v) == 1) == 6


def test_parameters_distance_from_center():
    t = build_family(FamilySpec("T3", (3, 4)))
    deg4 = [v for v in range(1, t.n) if t.degree(v) == 4]
    deg3 = sorted(len(unique_path(t, 0, v)) - 1 for v in range(1, t.n) if t.degree(v) == 3)
    assert len(deg4) == 1 and t.has_edge(0, deg4[0])
    assert deg3 == [3, 4]


@pytest.mark.parametrize(
    "spec",
    [FamilySpec("T2", (1, 2, 2)), FamilySpec("T3", (2,)), FamilySpec("T4", (1,)),
     FamilySpec("T5", (0, 1)), FamilySpec("T0", (1,)), FamilySpec("Nope"), FamilySpec("Path", (0,))],
)
def test_invalid_parameters(spec):
    with pytest.raises(ValueError):
        build_family(spec)


def test_minimal_table():
    for name, params in MINIMAL.items():
        build_family(FamilySpec(name, params))
        if params:
            smaller = (params[0] - 1,) + params[1:]
            with pytest.raises(ValueError):
                build_family(FamilySpec(name, smaller))


def test_simple_families():
    assert build_family(FamilySpec("Path", (6,))) == path(6)
    star = build_family(FamilySpec("Star", (7,)))
    assert star.n == 8 and star.degree(0) == 7
    cat = build_family(FamilySpec("Caterpillar", (2, 0, 3)))
    assert cat.n == 8 and is_caterpillar(cat)
    hairy = build_family(FamilySpec("LongHairedCaterpillar", ((2,), (1, 3))))
    assert hairy.n == 8
    assert build_family(FamilySpec("Prufer", (3, 3, 3))).degree(3) == 4


def test_ta_shape():
    t = ta_tree()
    assert t.n == 34 and t.degree(TA_JOIN) == 3
    copies = ta_copies()
    assert len(copies) == 3 and all(len(c) == 11 for c in copies)
    for c in TA_CENTERS:
        assert t.degree(c) == 5
    # the joining vertex meets each copy at a leg end
    for y in t.adj[TA_JOIN]:
        assert t.degree(y) == 2
        assert any(t.has_edge(y, z) and z != TA_JOIN and t.degree(z) == 2 for z in t.adj[y])
    assert build_family(FamilySpec("TA")) == t


def test_random_caterpillars_are_caterpillars():
    rng = random.Random(0)
    for _ in range(200):
        t = random_caterpillar(rng)
        assert t.n <= 40 and is_caterpillar(t)


def test_random_long_haired_caterpillars():
    rng = random.Random(0)
    for _ in range(200):
        t = random_long_haired_caterpillar(rng)
        assert t.n <= 40
        assert max((t.degree(v) for v in range(t.n)), default=0) <= 3
        # deleting all hairs leaves a path: the spine
        spine = [v for v in range(t.n) if t.degree(v) == 3]
        assert not spine or is_path_graph(t.induced(_hull(t, spine))[0])


def _hull(t, vertices):
    out = set()
    for a in vertices:
        for b in vertices:
            out.update(unique_path(t, a, b))
    return out


def test_family_spec_str():
    assert str(FamilySpec("T2", (2, 3, 4))) == "T2(2,3,4)"
    assert str(FamilySpec("T0")) == "T0"
