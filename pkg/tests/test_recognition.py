import random
from itertools import combinations

import pytest

from conftest import path, star, unlabeled_trees
from thinspect.families import (
    FORBIDDEN,
    MINIMAL,
    FamilySpec,
    build_family,
    random_caterpillar,
    random_long_haired_caterpillar,
    ta_tree,
)
from thinspect.oracle import pthin_decide, pthin_exact
from thinspect.recognition import (
    build_representation,
    classify,
    degree_condition_report,
    extend_to_leaves,
    extract_witness,
    find_c0,
    path_satisfies_c0,
)
from thinspect.thinness import check_representation
from thinspect.tree import Tree, is_path_graph, random_tree, unique_path
from thinspect.witness import match_template


def test_degree_conditions():
    assert not degree_condition_report(path(6)).cond1
    r = degree_condition_report(build_family(FamilySpec("T0")))
    assert r.cond1 and not r.cond2 and r.offending == 0
    r = degree_condition_report(star(7))
    assert r.cond1 and r.cond2 and r.offending is None


def test_c0_star_through_center():
    assert path_satisfies_c0(star(5), [1, 0, 2]) is None


def test_c0_t2_fails_for_third_branch_vertex():
    t = build_family(FamilySpec("T2", (2, 2, 2)))
    branch = {2, 6, 10}
    for a, b in combinations(t.leaves(), 2):
        p = unique_path(t, a, b)
        f = path_satisfies_c0(t, p)
        assert f.clause == "3b.i"
        if 0 in p:
            assert {f.vertex} == branch - set(p)


def test_c0_t5_fails_3b_ii():
    t = build_family(FamilySpec("T5", (1, 1)))
    f = path_satisfies_c0(t, [6, 5, 0, 8, 9])
    assert (f.clause, f.vertex, f.witness) == ("3b.ii", 1, 0)


def test_c0_rejects_non_path(claw):
    with pytest.raises(ValueError):
        path_satisfies_c0(claw, [1, 2])


def test_find_c0_examples():
    rng = random.Random(2)
    for _ in range(50):
        assert find_c0(random_caterpillar(rng)) is not None
        assert find_c0(random_long_haired_caterpillar(rng)) is not None
    assert find_c0(build_family(FamilySpec("T1"))) is None


def test_star_k14_representation():
    t = star(4)
    c0, rep = build_representation(t, [1, 0, 2])
    assert c0 == [1, 0, 2]
    assert list(rep.ordering) == [1, 3, 0, 4, 2]
    assert rep.class_members() == [[1, 0, 2], [3, 4]]
    assert check_representation(t, rep, strong=True) is None


def test_caterpillar_leaves_sit_next_to_their_spine_vertex():
    t = build_family(FamilySpec("Caterpillar", (1, 3, 0, 5, 2)))
    c0, rep = build_representation(t, [0, 1, 2, 3, 4])
    pos = rep.positions()
    spine = [v for v in c0 if t.degree(v) > 1]
    for v in spine:
        for leaf in (y for y in t.adj[v] if y not in c0):
            between = sorted(range(min(pos[v], pos[leaf]) + 1, max(pos[v], pos[leaf])))
            assert all(rep.ordering[p] not in c0 for p in between)
    assert check_representation(t, rep, strong=True) is None


def test_path_collapses_to_one_class():
    c0, rep = build_representation(path(5), [0, 1, 2, 3, 4])
    assert rep.k == 1


def test_build_representation_rejects_bad_c0():
    t = build_family(FamilySpec("T5", (1, 1)))
    with pytest.raises(ValueError):
        build_representation(t, [6, 5, 0, 8, 9])


def test_classify_examples(claw):
    assert classify(path(9)).value == "pthin=1"
    assert classify(claw).verdict == "pthin2"
    c = classify(ta_tree())
    assert c.verdict == "ge3" and c.witness.family.family == "T0"
    assert classify(Tree.from_edges(1, [])).verdict == "pthin1"
    assert classify(path(2)).verdict == "pthin1"


def test_witness_identity_on_templates():
    for name in ("T0", "T1"):
        t = build_family(FamilySpec(name))
        w = extract_witness(t)
        assert w.family.family == name and w.mapping == tuple(range(t.n))


@pytest.mark.parametrize("name", FORBIDDEN)
def test_each_family_yields_its_own_witness(name):
    spec = FamilySpec(name, MINIMAL[name])
    t = build_family(spec)
    w = classify(t).witness
    assert w.family == spec and w.is_valid(t)
    assert sorted(w.mapping) == list(range(t.n))


def test_t0_with_pendant_leaf():
    t0 = build_family(FamilySpec("T0"))
    t = Tree.from_edges(12, list(t0.edges) + [(2, 11)])
    w = extract_witness(t)
    assert w.family.family == "T0" and w.vertices == list(range(11))
    assert match_template(t, w.vertices, FamilySpec("T0")) is not None
    assert pthin_exact(t, cap=12)[0] == 3


def _check_pthin2(t, c):
    rep = c.representation
    assert check_representation(t, rep, strong=True) is None
    assert rep.k == 2
    assert set(rep.class_members()[0]) == set(c.c0)
    assert all(rep.classes[v] == 0 for v in c.c0)
    for comp in t.remove_vertices(c.c0):
        assert is_path_graph(t.induced(comp)[0])


@pytest.mark.parametrize("n", range(1, 13))
def test_agreement_and_certificates_unlabeled(n):
    for t in unlabeled_trees(n):
        c = classify(t)
        if c.verdict == "pthin1":
            assert is_path_graph(t)
        elif c.verdict == "pthin2":
            _check_pthin2(t, c)
            if n <= 10:
                assert pthin_decide(t, 1) is None
        else:
            assert c.witness.is_valid(t)
            sub, _ = t.induced(c.witness.vertices)
            assert pthin_decide(sub, 2) is None


def test_agreement_random_trees_9_to_14():
    for seed in range(60):
        n = 9 + seed % 6
        t = random_tree(n, seed)
        c = classify(t)
        bucket = 3 if pthin_decide(t, 2) is None else (1 if pthin_decide(t, 1) else 2)
        assert {"pthin1": 1, "pthin2": 2, "ge3": 3}[c.verdict] == bucket


def _some_path_satisfies(t):
    return any(path_satisfies_c0(t, unique_path(t, a, b)) is None
               for a in range(t.n) for b in range(a, t.n))


@pytest.mark.parametrize("n", range(2, 9))
def test_leaf_extension_completeness(n):
    for t in unlabeled_trees(n):
        assert _some_path_satisfies(t) == (find_c0(t) is not None)


def test_extend_to_leaves_keeps_condition():
    rng = random.Random(4)
    for _ in range(200):
        t = random_tree(rng.randint(2, 20), rng.randrange(10**6))
        a, b = rng.randrange(t.n), rng.randrange(t.n)
        p = unique_path(t, a, b)
        full = extend_to_leaves(t, p)
        assert set(p) <= set(full)
        assert t.degree(full[0]) <= 1 and t.degree(full[-1]) <= 1
        if path_satisfies_c0(t, p) is None:
            assert path_satisfies_c0(t, full) is None


def test_degree_five_next_to_leaf_end():
    # a degree-5 path vertex whose path neighbour is a leaf still gets a
    # valid certificate: the path is re-extended along its longest branches
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (2, 7), (3, 8), (8, 9)]
    t = Tree.from_edges(10, edges)
    c = classify(t)
    assert c.verdict == "pthin2"
    _check_pthin2(t, c)
