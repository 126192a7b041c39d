import networkx as nx
import pytest

from thinspect.families import FamilySpec, build_family
from thinspect.tree import Tree

ACCEPTANCE_LINES = []


def unlabeled_trees(n):
    """One labeled representative per isomorphism class."""
    if n == 1:
        yield Tree.from_edges(1, [])
        return
    for g in nx.nonisomorphic_trees(n):
        yield Tree.from_edges(n, list(g.edges()))


def star(leaves):
    return Tree.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path(n):
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def claw():
    return star(3)


@pytest.fixture
def t0():
    return build_family(FamilySpec("T0"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
