import pytest

from conftest import path, star, unlabeled_trees
from thinspect.families import FamilySpec, build_family
from thinspect.invariants import invariant_violations
from thinspect.oracle import DEFAULT_CAPS, ENV_CAP, oracle_cap, pthin_decide, pthin_exact
from thinspect.thinness import CapExceeded, check_representation
from thinspect.tree import Tree


def test_path_is_one_thin():
    rep = pthin_decide(path(7), 1)
    assert rep is not None and rep.k == 1
    assert check_representation(path(7), rep) is None


def test_claw_needs_two(claw):
    assert pthin_decide(claw, 1) is None
    assert pthin_exact(claw)[0] == 2


def test_t0_is_three(t0):
    assert pthin_decide(t0, 2) is None
    k, rep = pthin_exact(t0)
    assert k == 3 and check_representation(t0, rep, strong=True) is None


def test_p10():
    assert pthin_exact(path(10))[0] == 1


def test_tiny_trees():
    assert pthin_exact(Tree.from_edges(1, []))[0] == 1
    assert pthin_exact(path(2))[0] == 1


def test_caps(monkeypatch):
    assert oracle_cap(2) == DEFAULT_CAPS[2] == 14
    assert oracle_cap(3) == 11 and oracle_cap(5) == 11
    with pytest.raises(CapExceeded):
        pthin_decide(path(15), 2)
    monkeypatch.setenv(ENV_CAP, "20")
    assert oracle_cap(2) == 20
    assert pthin_decide(path(15), 2) is not None
    assert oracle_cap(2, override=4) == 4


def test_decide_validates_k(claw):
    with pytest.raises(ValueError):
        pthin_decide(claw, 0)


def test_deterministic(t0):
    assert pthin_decide(star(5), 2) == pthin_decide(star(5), 2)
    assert pthin_exact(t0) == pthin_exact(t0)


@pytest.mark.parametrize("n", range(2, 10))
def test_oracle_outputs_sound_with_invariants(n):
    for t in unlabeled_trees(n):
        k, rep = pthin_exact(t)
        assert rep.k == k
        assert check_representation(t, rep, strong=True) is None
        assert invariant_violations(t, rep) == {}


def test_t5_minimal_is_three():
    t = build_family(FamilySpec("T5", (1, 1)))
    assert pthin_decide(t, 2) is None
    assert pthin_decide(t, 3) is not None
