"""Labeled trees over integer vertex ids ``0..n-1``.

The text format is the one used throughout the package: a first line with the
vertex count ``n`` followed by ``n - 1`` lines ``u v``, one per edge.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Sequence


class TreeFormatError(ValueError):
    """Raised when a tree text or edge list does not describe a tree.

    ``line`` is the 1-based line of the first offending input line, or
    ``None`` when the problem is global (disconnected input, for instance).
    """

    def __init__(self, kind: str, message: str, line: int | None = None):
        self.kind = kind
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class MalformedLine(TreeFormatError):
    def __init__(self, message, line=None):
        super().__init__("malformed", message, line)


class DuplicateEdge(TreeFormatError):
    def __init__(self, message, line=None):
        super().__init__("duplicate-edge", message, line)


class SelfLoop(TreeFormatError):
    def __init__(self, message, line=None):
        super().__init__("self-loop", message, line)


class Disconnected(TreeFormatError):
    def __init__(self, message, line=None):
        super().__init__("disconnected", message, line)


class Cyclic(TreeFormatError):
    def __init__(self, message, line=None):
        super().__init__("cycle", message, line)


@dataclass(frozen=True)
class Tree:
    """Immutable labeled tree.

    Build with :meth:`from_edges` (validating) rather than the raw
    constructor.
    """

    n: int
    edges: frozenset
    adj: tuple = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Tree":
        if n < 1:
            raise MalformedLine("a tree needs at least one vertex")
        canon = []
        seen = set()
        root = list(range(n))

        def find(x):
            while root[x] != x:
                root[x] = root[root[x]]
                x = root[x]
            return x

        for idx, (u, v) in enumerate(edges):
            line = idx + 2
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedLine(f"vertex id out of range in edge ({u}, {v})", line)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}", line)
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdge(f"duplicate edge {e}", line)
            ru, rv = find(u), find(v)
            if ru == rv:
                raise Cyclic(f"edge {e} closes a cycle", line)
            root[ru] = rv
            seen.add(e)
            canon.append(e)
        if len(canon) != n - 1:
            missing = next(x for x in range(n) if find(x) != find(0))
            raise Disconnected(f"vertex {missing} is not reachable from vertex 0")
        nbrs = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        adj = tuple(tuple(sorted(a)) for a in nbrs)
        return cls(n, frozenset(canon), adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def leaves(self) -> list:
        return [v for v in range(self.n) if len(self.adj[v]) == 1]

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Tree", list]:
        """Subtree induced by a connected vertex set, relabeled ``0..m-1``.

        Returns the tree and the list mapping new ids to the original ones.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.sorted_edges() if u in index and v in index]
        return Tree.from_edges(len(keep), edges), keep

    def remove_vertices(self, vertices: Iterable[int]) -> list:
        """Vertex sets of the connected components of ``T - vertices``."""
        gone = set(vertices)
        comps = []
        seen = set(gone)
        for s in range(self.n):
            if s in seen:
                continue
            comp = []
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Tree with vertex ``v`` renamed ``perm[v]``."""
        return Tree.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def parse_tree(text: str) -> Tree:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MalformedLine("empty input", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise MalformedLine(f"expected vertex count, got {lines[0]!r}", 1) from None
    if n < 1:
        raise MalformedLine("vertex count must be at least 1", 1)
    edges = []
    for i, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if len(parts) != 2:
            raise MalformedLine(f"expected 'u v', got {raw!r}", i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"expected integer ids, got {raw!r}", i) from None
        edges.append((u, v))
    return Tree.from_edges(n, edges)


def serialize_tree(t: Tree) -> str:
    return "\n".join([str(t.n)] + [f"{u} {v}" for u, v in t.sorted_edges()])


def unique_path(t: Tree, u: int, v: int) -> list:
    """The simple path from ``u`` to ``v`` as a vertex list."""
    for x in (u, v):
        if not 0 <= x < t.n:
            raise ValueError(f"invalid vertex id {x}")
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in t.adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def is_simple_path(t: Tree, path: Sequence[int]) -> bool:
    if not path or len(set(path)) != len(path):
        return False
    if any(not 0 <= x < t.n for x in path):
        return False
    return all(t.has_edge(a, b) for a, b in zip(path, path[1:]))


def nexus_of(t: Tree, v1: int, v2: int, v3: int) -> int | None:
    """Vertex whose paths to the three given vertices meet only in itself.

    Returns ``None`` when the three vertices lie on a common simple path.
    """
    trio = (v1, v2, v3)
    if len(set(trio)) != 3:
        raise ValueError("nexus needs three distinct vertices")
    for x in trio:
        if not 0 <= x < t.n:
            raise ValueError(f"invalid vertex id {x}")
    p12 = unique_path(t, v1, v2)
    p13 = set(unique_path(t, v1, v3))
    p23 = set(unique_path(t, v2, v3))
    median = next(x for x in p12 if x in p13 and x in p23)
    if median in trio:
        return None
    return median


def is_path_graph(t: Tree) -> bool:
    return all(len(a) <= 2 for a in t.adj)


def is_caterpillar(t: Tree) -> bool:
    """True iff deleting every leaf leaves a path (or nothing)."""
    if t.n <= 2:
        return True
    inner = [v for v in range(t.n) if len(t.adj[v]) > 1]
    inner_set = set(inner)
    return all(sum(1 for y in t.adj[v] if y in inner_set) <= 2 for v in inner)


def is_caterpillar_by_definition(t: Tree) -> bool:
    """Direct check: some simple path ``P`` has ``N[P]`` equal to all vertices.

    Only leaf-to-leaf paths need checking, since extending a path never
    shrinks its closed neighbourhood.
    """
    if t.n <= 2:
        return True
    leaves = t.leaves()
    for i, a in enumerate(leaves):
        for b in leaves[i + 1 :]:
            covered = set()
            for x in unique_path(t, a, b):
                covered.add(x)
                covered.update(t.adj[x])
            if len(covered) == t.n:
                return True
    return False


def prufer_decode(seq: Sequence[int], n: int | None = None) -> Tree:
    """Labeled tree on ``len(seq) + 2`` vertices with the given Prüfer code."""
    if n is None:
        n = len(seq) + 2
    if n == 1:
        return Tree.from_edges(1, [])
    if len(seq) != n - 2 or any(not 0 <= x < n for x in seq):
        raise ValueError(f"invalid Prufer sequence of length {len(seq)} for n={n}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    # linear-time decoding with a moving pointer
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if x < ptr and degree[x] == 1:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    u = leaf
    v = next(w for w in range(n - 1, -1, -1) if degree[w] == 1 and w != u)
    edges.append((u, v))
    return Tree.from_edges(n, edges)


def prufer_encode(t: Tree) -> list:
    if t.n <= 2:
        return []
    degree = [len(a) for a in t.adj]
    removed = [False] * t.n
    seq = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for _ in range(t.n - 2):
        nxt = next(y for y in t.adj[leaf] if not removed[y])
        seq.append(nxt)
        removed[leaf] = True
        degree[nxt] -= 1
        if nxt < ptr and degree[nxt] == 1:
            leaf = nxt
        else:
            ptr += 1
            while degree[ptr] != 1 or removed[ptr]:
                ptr += 1
            leaf = ptr
    return seq


def random_tree(n: int, seed: int = 0) -> Tree:
    """Uniformly random labeled tree (Prüfer decoding of a random code)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n <= 2:
        return Tree.from_edges(n, [(0, 1)] if n == 2 else [])
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


MAX_ENUMERATION_N = 9


def all_labeled_trees(n: int) -> Iterator[Tree]:
    """Every labeled tree on ``n`` vertices, in Prüfer-code order."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"n must be in 1..{MAX_ENUMERATION_N}")
    if n <= 2:
        yield Tree.from_edges(n, [(0, 1)] if n == 2 else [])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def canonical_form(t: Tree) -> str:
    """Isomorphism-invariant string (AHU encoding rooted at the center)."""
    centers = _centers(t)
    return min(_ahu(t, c, None) for c in centers) if len(centers) == 1 else _bicentral(t, centers)


def _centers(t):
    if t.n <= 2:
        return list(range(t.n))
    degree = [len(a) for a in t.adj]
    layer = [v for v in range(t.n) if degree[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for y in t.adj[v]:
                degree[y] -= 1
                if degree[y] == 1:
                    nxt.append(y)
        layer = nxt
    return sorted(layer)


def _ahu(t, root, parent):
    # iterative post-order to survive deep paths
    order = []
    stack = [(root, parent)]
    while stack:
        v, p = stack.pop()
        order.append((v, p))
        for y in t.adj[v]:
            if y != p:
                stack.append((y, v))
    code = {}
    for v, p in reversed(order):
        kids = sorted(code[y] for y in t.adj[v] if y != p)
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def _bicentral(t, centers):
    a, b = centers
    ca, cb = _ahu(t, a, b), _ahu(t, b, a)
    return "|".join(sorted((ca, cb)))
