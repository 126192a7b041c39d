"""Recognition of trees with proper thinness 1, 2 or at least 3.

A tree with a vertex of degree >= 3 has proper thinness 2 exactly when

1. no vertex has five or more neighbours of degree > 1, and
2. some simple path ``C0`` contains every vertex of degree >= 4 and each
   degree-3 vertex off ``C0`` is adjacent to a ``C0`` vertex of degree <= 3.

Positive answers carry a two-class representation whose first class is the
path; negative answers carry a forbidden induced subtree.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from itertools import combinations

from .families import FamilySpec
from .thinness import Representation, check_representation
from .tree import Tree, is_path_graph, is_simple_path, unique_path
from .witness import Witness, realize


@dataclass(frozen=True)
class ConditionReport:
    cond1: bool
    cond2: bool
    offending: int | None = None


def degree_condition_report(t: Tree) -> ConditionReport:
    cond1 = any(t.degree(v) >= 3 for v in range(t.n))
    for v in range(t.n):
        if t.degree(v) >= 5 and sum(1 for y in t.adj[v] if t.degree(y) > 1) >= 5:
            return ConditionReport(cond1, False, v)
    return ConditionReport(cond1, True)


@dataclass(frozen=True)
class PathFailure:
    clause: str  # "3a", "3b.i" or "3b.ii"
    vertex: int
    witness: int | None = None  # the path vertex of degree >= 4 for 3b.ii

    def __str__(self):
        if self.clause == "3a":
            return f"vertex {self.vertex} of degree >= 4 is off the path"
        if self.clause == "3b.i":
            return f"degree-3 vertex {self.vertex} is off the path and not adjacent to it"
        return f"degree-3 vertex {self.vertex} hangs off path vertex {self.witness} of degree >= 4"


def path_satisfies_c0(t: Tree, path) -> PathFailure | None:
    if not is_simple_path(t, path):
        raise ValueError("not a simple path of the tree")
    on = set(path)
    for v in range(t.n):
        if v not in on and t.degree(v) >= 4:
            return PathFailure("3a", v)
    for v in range(t.n):
        if v in on or t.degree(v) != 3:
            continue
        w = next((y for y in t.adj[v] if y in on), None)
        if w is None:
            return PathFailure("3b.i", v)
        if t.degree(w) > 3:
            return PathFailure("3b.ii", v, w)
    return None


def find_c0(t: Tree) -> list | None:
    """First leaf-to-leaf path (by endpoint ids) satisfying the path condition."""
    if t.n == 1:
        return [0]
    heavy = [v for v in range(t.n) if t.degree(v) >= 4]
    leaves = t.leaves()
    for a, b in combinations(leaves, 2):
        path = unique_path(t, a, b)
        if heavy and not set(heavy) <= set(path):
            continue
        if path_satisfies_c0(t, path) is None:
            return path
    return None


def _branch_depths(t: Tree, start: int, parent: int) -> tuple:
    """``(depth, -leaf)`` of the deepest leaf below ``start`` away from ``parent``."""
    best = (1, -start)
    queue = deque([(start, parent, 1)])
    while queue:
        v, p, d = queue.popleft()
        kids = [y for y in t.adj[v] if y != p]
        if not kids:
            best = max(best, (d, -v))
        for y in kids:
            queue.append((y, v, d + 1))
    return best


def _path_down(t: Tree, start: int, parent: int, leaf: int) -> list:
    return unique_path(t, start, leaf) if start != leaf else [start]


def extend_to_leaves(t: Tree, path) -> list:
    """Longest leaf-to-leaf extension of ``path``; ties go to smaller end ids."""
    path = list(path)
    if len(path) == 1:
        v = path[0]
        options = sorted((_branch_depths(t, y, v), y) for y in t.adj[v])
        if not options:
            return path
        if len(options) == 1:
            (d, neg), y = options[0]
            return [v] + _path_down(t, y, v, -neg)
        # two deepest branches; among equals prefer smaller leaves
        options.sort(key=lambda o: (-o[0][0], -o[0][1]))
        (da, na), ya = options[0]
        (db, nb), yb = options[1]
        left = _path_down(t, ya, v, -na)
        right = _path_down(t, yb, v, -nb)
        out = list(reversed(left)) + [v] + right
        return out if out[0] < out[-1] else list(reversed(out))
    out = list(path)
    for _ in range(2):
        end, prev = out[-1], out[-2]
        options = [(_branch_depths(t, y, end), y) for y in t.adj[end] if y != prev]
        if options:
            (d, neg), y = max(options, key=lambda o: (o[0][0], o[0][1]))
            out += _path_down(t, y, end, -neg)
        out.reverse()
    return out if out[0] < out[-1] else list(reversed(out))


def normalize_c0(t: Tree, c0) -> list:
    """Leaf-to-leaf path through the degree->=3 core of ``c0``, extended maximally.

    The core runs from the first to the last vertex of degree >= 3 along a
    leaf-to-leaf extension of ``c0``. Re-extending it by longest branches
    keeps the path condition and guarantees that a path vertex of degree
    >= 5 has both path neighbours of degree > 1 whenever it could.
    """
    full = extend_to_leaves(t, c0)
    big = [i for i, v in enumerate(full) if t.degree(v) >= 3]
    if not big:
        return full
    return extend_to_leaves(t, full[big[0]: big[-1] + 1])


def _simple_branch(t: Tree, start: int, parent: int) -> list:
    out = [start]
    prev, cur = parent, start
    while True:
        nxt = [y for y in t.adj[cur] if y != prev]
        if not nxt:
            return out
        if len(nxt) > 1:
            raise ValueError(f"branch at {start} is not a path (vertex {cur} branches)")
        prev, cur = cur, nxt[0]
        out.append(cur)


def build_representation(t: Tree, c0) -> tuple:
    """Two-class strongly consistent representation with the (extended) path as class 0.

    Returns ``(extended_path, representation)``. The ordering walks the path
    and inserts the off-path branches around each path vertex.
    """
    failure = path_satisfies_c0(t, c0)
    if failure is not None:
        raise ValueError(f"path does not satisfy the C0 condition: {failure}")
    path = normalize_c0(t, c0)
    on = set(path)
    ordering = []
    for i, v in enumerate(path):
        inner = 0 < i < len(path) - 1
        off = [y for y in t.adj[v] if y not in on]
        if not inner or not off:
            if off:
                raise ValueError(f"path end {v} is not a leaf")
            ordering.append(v)
            continue
        d = t.degree(v)
        if d == 3:
            w0 = off[0]
            if t.degree(w0) == 3:
                b1, b2 = [y for y in t.adj[w0] if y != v]
                ordering += list(reversed(_simple_branch(t, b2, w0))) + [v, w0] + _simple_branch(t, b1, w0)
            else:
                ordering += [v] + _simple_branch(t, w0, v)
        elif d == 4:
            u0, w0 = off
            ordering += list(reversed(_simple_branch(t, u0, v))) + [v] + _simple_branch(t, w0, v)
        else:
            long = [y for y in off if t.degree(y) > 1]
            leaves = [y for y in off if t.degree(y) == 1]
            if len(long) > 2:
                raise ValueError(f"vertex {v} has {len(long)} non-leaf branches off the path")
            before = list(reversed(_simple_branch(t, long[0], v))) if long else []
            after = _simple_branch(t, long[1], v) if len(long) > 1 else []
            ordering += before + [v] + leaves + after
    classes = [1] * t.n
    for v in path:
        classes[v] = 0
    return path, Representation.build(ordering, classes)


@dataclass(frozen=True)
class Classification:
    verdict: str  # "pthin1", "pthin2" or "ge3"
    representation: Representation | None = None
    c0: tuple | None = None
    witness: Witness | None = None

    @property
    def value(self) -> str:
        return {"pthin1": "pthin=1", "pthin2": "pthin=2", "ge3": "pthin>=3"}[self.verdict]


def _path_order(t: Tree) -> list:
    if t.n == 1:
        return [0]
    a, b = t.leaves()[0], t.leaves()[-1]
    return unique_path(t, a, b)


def classify(t: Tree) -> Classification:
    if is_path_graph(t):
        order = _path_order(t)
        return Classification("pthin1", Representation.build(order, [0] * t.n))
    report = degree_condition_report(t)
    c0 = find_c0(t) if report.cond2 else None
    if c0 is None:
        return Classification("ge3", witness=extract_witness(t, report))
    path, rep = build_representation(t, c0)
    bad = check_representation(t, rep, strong=True)
    if bad is not None:
        raise AssertionError(f"constructed representation failed verification: {bad}")
    return Classification("pthin2", rep, tuple(path))


def _all_distances(t: Tree) -> list:
    dist = []
    for s in range(t.n):
        d = [-1] * t.n
        d[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in t.adj[x]:
                if d[y] < 0:
                    d[y] = d[x] + 1
                    queue.append(y)
        dist.append(d)
    return dist


def extract_witness(t: Tree, report: ConditionReport | None = None) -> Witness:
    """A forbidden induced subtree of a tree whose proper thinness exceeds 2.

    A degree-5 vertex with five non-leaf neighbours gives ``T0`` directly.
    Otherwise every triple of degree->=3 vertices with a nexus ``v0`` is
    sorted by which of the three are adjacent to ``v0`` (and of what degree);
    the smallest resulting family instance wins.
    """
    if report is None:
        report = degree_condition_report(t)
    if not report.cond2:
        v = report.offending
        legs = [y for y in t.adj[v] if t.degree(y) > 1][:5]
        ends = [next(z for z in t.adj[y] if z != v) for y in legs]
        return realize(t, FamilySpec("T0"), v, ends)
    best = None
    for w in _triple_witnesses(t):
        if best is None or w.sort_key() < best.sort_key():
            best = w
    if best is None:
        raise ValueError("tree has proper thinness <= 2; no forbidden subtree exists")
    return best


def _median(t, dist, a, b, c):
    da = (dist[a][b] + dist[a][c] - dist[b][c]) // 2
    path = unique_path(t, a, b)
    return path[da]


def _triple_witnesses(t: Tree):
    dist = _all_distances(t)
    deg = [t.degree(v) for v in range(t.n)]
    cands = [v for v in range(t.n) if deg[v] >= 3]
    for a, b, c in combinations(cands, 3):
        # distances from the nexus; all positive iff a nexus exists
        ra = (dist[a][b] + dist[a][c] - dist[b][c]) // 2
        rb = dist[a][b] - ra
        rc = dist[a][c] - ra
        if ra <= 0 or rb <= 0 or rc <= 0:
            continue
        v0 = _median(t, dist, a, b, c)
        trio = sorted([(ra, a), (rb, b), (rc, c)])
        heavy_adj = [x for r, x in trio if r == 1 and deg[x] >= 4]
        far = [(r, x) for r, x in trio if r >= 2]
        if len(heavy_adj) == 3:
            yield realize(t, FamilySpec("T1"), v0, heavy_adj)
        elif len(heavy_adj) == 2 and len(far) == 1:
            yield realize(t, FamilySpec("T4", (far[0][0],)), v0, heavy_adj + [far[0][1]])
        elif len(heavy_adj) == 1 and len(far) == 2:
            yield realize(t, FamilySpec("T3", (far[0][0], far[1][0])), v0, heavy_adj + [x for _, x in far])
        elif len(far) == 3:
            params = tuple(r for r, _ in far)
            yield realize(t, FamilySpec("T2", params), v0, [x for _, x in far])
        if deg[v0] >= 4:
            adj = [x for r, x in trio if r == 1]
            if adj:
                anchor = adj[0]
                rest = [(r, x) for r, x in trio if x != anchor]
                used = {unique_path(t, v0, x)[1] for _, x in trio}
                pendant = min(y for y in t.adj[v0] if y not in used)
                yield realize(t, FamilySpec("T5", (rest[0][0], rest[1][0])), v0,
                              [anchor, pendant, rest[0][1], rest[1][1]])
