"""Vertex orderings, class partitions and their (strong) consistency.

An ordering and a partition are *consistent* when for every triple of
positions ``r < s < t``

    r, s in the same class and t ~ r   imply   t ~ s            (forward)

and *strongly consistent* when, in addition,

    s, t in the same class and t ~ r   imply   r ~ s            (backward)

Both clauses only constrain pairs of same-class vertices, which is what
makes the conflict graph work: two vertices may share a class iff no third
vertex witnesses a failure of either clause for that pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .tree import Tree


@dataclass(frozen=True)
class Representation:
    """An ordering (``ordering[i]`` is the i-th vertex) and class ids per vertex."""

    ordering: tuple
    classes: tuple
    k: int

    @classmethod
    def build(cls, ordering: Sequence[int], classes: Sequence[int]) -> "Representation":
        """Normalize class ids to ``0..k-1`` by first appearance along the ordering."""
        relabel = {}
        for v in ordering:
            relabel.setdefault(classes[v], len(relabel))
        return cls(tuple(ordering), tuple(relabel[c] for c in classes), len(relabel))

    def validate(self, n: int) -> None:
        if len(self.ordering) != n or len(self.classes) != n:
            raise ValueError(f"representation has {len(self.ordering)} / {len(self.classes)} entries for n={n}")
        if sorted(self.ordering) != list(range(n)):
            raise ValueError("ordering is not a permutation of the vertices")
        if any(not 0 <= c < self.k for c in self.classes):
            raise ValueError(f"class ids must lie in 0..{self.k - 1}")
        if len(set(self.classes)) != self.k:
            raise ValueError("every class must be non-empty")

    def positions(self) -> list:
        pos = [0] * len(self.ordering)
        for i, v in enumerate(self.ordering):
            pos[v] = i
        return pos

    def class_members(self) -> list:
        members = [[] for _ in range(self.k)]
        for v in self.ordering:
            members[self.classes[v]].append(v)
        return members

    def reversed(self) -> "Representation":
        return Representation(tuple(reversed(self.ordering)), self.classes, self.k)


@dataclass(frozen=True)
class Violation:
    """A triple of vertices at positions ``pos_r < pos_s < pos_t`` breaking a clause."""

    r: int
    s: int
    t: int
    pos_r: int
    pos_s: int
    pos_t: int
    direction: str  # "forward" or "backward"

    @property
    def clause(self) -> str:
        if self.direction == "forward":
            return f"{self.r},{self.s} share a class and {self.t}~{self.r}, but {self.t} is not adjacent to {self.s}"
        return f"{self.s},{self.t} share a class and {self.t}~{self.r}, but {self.r} is not adjacent to {self.s}"

    def holds_on(self, t: Tree, rep: Representation) -> bool:
        """Re-check that this triple really violates its clause."""
        if not self.pos_r < self.pos_s < self.pos_t:
            return False
        if not t.has_edge(self.t, self.r):
            return False
        if self.direction == "forward":
            return rep.classes[self.r] == rep.classes[self.s] and not t.has_edge(self.t, self.s)
        return rep.classes[self.s] == rep.classes[self.t] and not t.has_edge(self.r, self.s)

    def __str__(self):
        return f"violation ({self.direction}) at positions {self.pos_r}<{self.pos_s}<{self.pos_t}: {self.clause}"


def _check_permutation(n, ordering):
    if len(ordering) != n or sorted(ordering) != list(range(n)):
        raise ValueError("ordering is not a permutation of the vertices")


def check_representation(t: Tree, rep: Representation, strong: bool = True) -> Violation | None:
    """``None`` if the representation is (strongly) consistent, else the first violation.

    Violations are ordered lexicographically by their positions ``(r, s, t)``.
    Only triples with ``t ~ r`` can fail, so the scan walks, for each pair of
    positions, the neighbours of ``r`` placed after ``s``: O(n^2) on trees.
    """
    rep.validate(t.n)
    pos = rep.positions()
    cls = rep.classes
    later = [sorted((pos[w] for w in t.adj[v])) for v in range(t.n)]
    order = rep.ordering
    for pr in range(t.n):
        r = order[pr]
        nbr_pos = [p for p in later[r] if p > pr]
        if not nbr_pos:
            continue
        for ps in range(pr + 1, nbr_pos[-1]):
            s = order[ps]
            same_rs = cls[r] == cls[s]
            rs_adjacent = t.has_edge(r, s)
            if not strong and not same_rs:
                continue
            for pt in nbr_pos:
                if pt <= ps:
                    continue
                w = order[pt]
                if same_rs and not t.has_edge(w, s):
                    return Violation(r, s, w, pr, ps, pt, "forward")
                if strong and cls[w] == cls[s] and not rs_adjacent:
                    return Violation(r, s, w, pr, ps, pt, "backward")
    return None


def check_representation_bruteforce(t: Tree, rep: Representation, strong: bool = True) -> Violation | None:
    """Literal triple loop over the definition; the reference for the fast scan."""
    rep.validate(t.n)
    order, cls = rep.ordering, rep.classes
    n = t.n
    for pr in range(n):
        for ps in range(pr + 1, n):
            for pt in range(ps + 1, n):
                r, s, w = order[pr], order[ps], order[pt]
                if not t.has_edge(w, r):
                    continue
                if cls[r] == cls[s] and not t.has_edge(w, s):
                    return Violation(r, s, w, pr, ps, pt, "forward")
                if strong and cls[s] == cls[w] and not t.has_edge(r, s):
                    return Violation(r, s, w, pr, ps, pt, "backward")
    return None


@dataclass(frozen=True)
class ConflictGraph:
    n: int
    conflicts: frozenset

    def neighbors(self) -> list:
        nb = [set() for _ in range(self.n)]
        for u, v in self.conflicts:
            nb[u].add(v)
            nb[v].add(u)
        return nb


def conflict_graph(t: Tree, ordering: Sequence[int], strong: bool = True) -> ConflictGraph:
    """Pairs that cannot share a class under ``ordering``.

    With ``u`` before ``v``: conflict if some ``w`` after ``v`` is adjacent to
    ``u`` but not ``v`` (forward), or, when ``strong``, if some ``w`` before
    ``u`` is adjacent to ``v`` but not ``u`` (backward).
    """
    _check_permutation(t.n, ordering)
    pos = [0] * t.n
    for i, v in enumerate(ordering):
        pos[v] = i
    conflicts = set()
    for u in range(t.n):
        for w in t.adj[u]:
            # w after v, w ~ u, w !~ v: every v strictly between u and w
            # other than w's neighbours
            if pos[w] > pos[u]:
                for p in range(pos[u] + 1, pos[w]):
                    v = ordering[p]
                    if not t.has_edge(w, v):
                        conflicts.add((min(u, v), max(u, v)))
            elif strong:
                # w before u', w ~ v', w !~ u' with v' = u: pairs (u', u)
                # where pos[w] < pos[u'] < pos[u]
                for p in range(pos[w] + 1, pos[u]):
                    x = ordering[p]
                    if not t.has_edge(w, x):
                        conflicts.add((min(u, x), max(u, x)))
    return ConflictGraph(t.n, frozenset(conflicts))


def greedy_coloring(cg: ConflictGraph, ordering: Sequence[int]) -> list:
    """First-fit colours, scanning ``ordering``; lowest free class id wins."""
    nb = cg.neighbors()
    color = [-1] * cg.n
    for v in ordering:
        used = {color[u] for u in nb[v] if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def greedy_classes_for_ordering(t: Tree, ordering: Sequence[int], strong: bool = True) -> Representation:
    """First-fit partition. Always consistent, but not always minimum."""
    cg = conflict_graph(t, ordering, strong)
    return Representation.build(ordering, greedy_coloring(cg, ordering))


def min_classes_for_ordering(t: Tree, ordering: Sequence[int], strong: bool = True) -> Representation:
    """Minimum (strongly) consistent partition for a fixed ordering.

    Non-conflicting pairs ``u`` before ``v`` form a partial order along the
    ordering (if u,v and v,w may share a class then so may u,w), so a class
    is a chain and the minimum number of classes is a minimum chain
    partition: ``n`` minus a maximum matching between "left" and "right"
    copies of the vertices. Kuhn's augmenting paths keep this O(n^3).

    When first-fit already reaches the minimum its partition is returned, so
    certificates match the greedy ones wherever greedy is optimal.
    """
    cg = conflict_graph(t, ordering, strong)
    greedy = Representation.build(ordering, greedy_coloring(cg, ordering))
    n = t.n
    order = list(ordering)
    conflicts = cg.conflicts
    succ = []
    for i, u in enumerate(order):
        succ.append([j for j in range(i + 1, n)
                     if (min(u, order[j]), max(u, order[j])) not in conflicts])
    match_right = [-1] * n  # position j -> position i matched as its predecessor
    match_left = [-1] * n
    for i in range(n):
        _augment(i, succ, match_left, match_right, [False] * n)
    color = [-1] * n
    c = 0
    for j in range(n):
        if match_right[j] == -1:
            # j starts a chain; follow successors
            p = j
            while p != -1:
                color[order[p]] = c
                p = match_left[p]
            c += 1
    if greedy.k <= c:
        return greedy
    return Representation.build(ordering, color)


def _augment(i, succ, match_left, match_right, seen):
    stack = [(i, iter(succ[i]))]
    path = []
    while stack:
        node, it = stack[-1]
        advanced = False
        for j in it:
            if seen[j]:
                continue
            seen[j] = True
            if match_right[j] == -1:
                # flip the alternating path node_0 -> ... -> node -> j
                path.append((node, j))
                for a, b in path:
                    match_left[a] = b
                    match_right[b] = a
                return True
            path.append((node, j))
            stack.append((match_right[j], iter(succ[match_right[j]])))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if path:
                path.pop()
    return False


DEFAULT_EXACT_CAP = 12


def min_classes_exact(t: Tree, ordering: Sequence[int], strong: bool = True,
                      cap: int = DEFAULT_EXACT_CAP) -> Representation:
    """Minimum-class partition for ``ordering`` by exhaustive colouring search."""
    if t.n > cap:
        raise CapExceeded(f"n={t.n} exceeds exact-partition cap {cap}")
    cg = conflict_graph(t, ordering, strong)
    nb = cg.neighbors()
    order = list(ordering)
    for k in range(1, t.n + 1):
        color = [-1] * t.n
        if _color(order, 0, k, nb, color, 0):
            return Representation.build(ordering, color)
    raise AssertionError("unreachable: n colours always suffice")


def _color(order, i, k, nb, color, used):
    if i == len(order):
        return True
    v = order[i]
    taken = {color[u] for u in nb[v]}
    # symmetry: a fresh class is only ever the next unused id
    for c in range(min(k, used + 1)):
        if c not in taken:
            color[v] = c
            if _color(order, i + 1, k, nb, color, max(used, c + 1)):
                return True
            color[v] = -1
    return False


class CapExceeded(RuntimeError):
    """An exact search was asked to run above its configured size cap."""
