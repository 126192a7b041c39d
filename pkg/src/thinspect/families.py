"""Named trees: paths, stars, spiders, caterpillars and the forbidden families.

Labeling is canonical so generated files are byte-stable. Every "armed"
family has its center at vertex 0; arms follow in order, each arm listing
its path vertices from the center outward and then the leaves hanging off
the arm's last vertex (the *branch vertex*). For ``T2``--``T5`` the integer
parameters are distances from the center to the branch vertices.

==========  =============================================  ==========
family      arms ``(length, leaves at the branch vertex)``  vertices
==========  =============================================  ==========
T0          (2,0) x5                                       11
T1          (1,3) x3                                       13
T2(i,j,k)   (i,2) (j,2) (k,2)                              7+i+j+k
T3(i,j)     (1,3) (i,2) (j,2)                              9+i+j
T4(i)       (1,3) (1,3) (i,2)                              11+i
T5(i,j)     (1,2) (1,0) (i,2) (j,2)                        9+i+j
==========  =============================================  ==========
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .tree import Tree, prufer_decode

FORBIDDEN = ("T0", "T1", "T2", "T3", "T4", "T5")

# name -> (number of integer parameters, minimum value of each)
_PARAMETRIC = {
    "T0": (0, 0),
    "T1": (0, 0),
    "T2": (3, 2),
    "T3": (2, 2),
    "T4": (1, 2),
    "T5": (2, 1),
    "TA": (0, 0),
}

MINIMAL = {
    "T0": (),
    "T1": (),
    "T2": (2, 2, 2),
    "T3": (2, 2),
    "T4": (2,),
    "T5": (1, 1),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named tree and its parameters.

    ``params`` holds integers for the forbidden families, ``Path``, ``Star``
    and ``Spider``; a tuple of per-spine-vertex leaf counts for
    ``Caterpillar``; a tuple of per-spine-vertex hair-length tuples for
    ``LongHairedCaterpillar``; and the code for ``Prufer``.
    """

    family: str
    params: tuple = ()

    def __str__(self):
        if not self.params:
            return self.family
        if self.family in _PARAMETRIC:
            return f"{self.family}({','.join(map(str, self.params))})"
        return f"{self.family}{self.params}"

    def validate(self) -> None:
        fam, p = self.family, self.params
        if fam in _PARAMETRIC:
            count, low = _PARAMETRIC[fam]
            if len(p) != count:
                raise ValueError(f"{fam} takes {count} parameters, got {len(p)}")
            for x in p:
                if not isinstance(x, int) or x < low:
                    raise ValueError(f"{fam} parameters must be integers >= {low}, got {p}")
        elif fam == "Path":
            _need_ints(fam, p, 1, 1)
        elif fam == "Star":
            _need_ints(fam, p, 1, 0)
        elif fam == "Spider":
            _need_ints(fam, p, 2, 0)
            if p[0] > 0 and p[1] < 1:
                raise ValueError("Spider legs need length >= 1")
        elif fam == "Caterpillar":
            if not p or any(not isinstance(x, int) or x < 0 for x in p):
                raise ValueError("Caterpillar needs a non-empty tuple of leaf counts")
        elif fam == "LongHairedCaterpillar":
            if not p:
                raise ValueError("LongHairedCaterpillar needs at least one spine vertex")
            for hairs in p:
                if any(not isinstance(h, int) or h < 1 for h in hairs):
                    raise ValueError("hair lengths must be integers >= 1")
        elif fam == "Prufer":
            pass
        else:
            raise ValueError(f"unknown family {fam!r}")


def _need_ints(fam, p, count, low):
    if len(p) != count or any(not isinstance(x, int) or x < low for x in p):
        raise ValueError(f"{fam} takes {count} integer parameter(s) >= {low}, got {p}")


def family_arms(spec: FamilySpec) -> list:
    """``(length, leaves)`` arm list of an armed family (T0..T5, Spider, Star)."""
    fam, p = spec.family, spec.params
    if fam == "T0":
        return [(2, 0)] * 5
    if fam == "T1":
        return [(1, 3)] * 3
    if fam == "T2":
        return [(p[0], 2), (p[1], 2), (p[2], 2)]
    if fam == "T3":
        return [(1, 3), (p[0], 2), (p[1], 2)]
    if fam == "T4":
        return [(1, 3), (1, 3), (p[0], 2)]
    if fam == "T5":
        return [(1, 2), (1, 0), (p[0], 2), (p[1], 2)]
    if fam == "Spider":
        return [(p[1], 0)] * p[0]
    if fam == "Star":
        return [(1, 0)] * p[0]
    raise ValueError(f"{fam} is not an armed family")


def arm_layout(arms) -> list:
    """Vertex ids of each arm: ``(path ids outward, leaf ids)`` per arm."""
    out = []
    nxt = 1
    for length, leaves in arms:
        path = list(range(nxt, nxt + length))
        nxt += length
        hang = list(range(nxt, nxt + leaves))
        nxt += leaves
        out.append((path, hang))
    return out


def _armed_tree(arms) -> Tree:
    edges = []
    layout = arm_layout(arms)
    n = 1
    for path, hang in layout:
        prev = 0
        for x in path:
            edges.append((prev, x))
            prev = x
        for leaf in hang:
            edges.append((path[-1], leaf))
        n += len(path) + len(hang)
    return Tree.from_edges(n, edges)


def build_family(spec: FamilySpec) -> Tree:
    spec.validate()
    fam, p = spec.family, spec.params
    if fam == "Path":
        return Tree.from_edges(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if fam in FORBIDDEN or fam in ("Spider", "Star"):
        return _armed_tree(family_arms(spec))
    if fam == "Caterpillar":
        return long_haired_caterpillar(tuple((1,) * c for c in p))
    if fam == "LongHairedCaterpillar":
        return long_haired_caterpillar(p)
    if fam == "TA":
        return ta_tree()
    if fam == "Prufer":
        return prufer_decode(list(p))
    raise ValueError(f"unknown family {fam!r}")


def long_haired_caterpillar(hairs) -> Tree:
    """Spine ``0..s-1`` in order; spine vertex ``i`` carries paths of the given lengths."""
    s = len(hairs)
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i, lengths in enumerate(hairs):
        for length in lengths:
            prev = i
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return Tree.from_edges(nxt, edges)


def random_caterpillar(rng: random.Random, max_n: int = 40) -> Tree:
    spine = rng.randint(1, max(1, max_n // 3))
    budget = max_n - spine
    leaves = [0] * spine
    for _ in range(rng.randint(0, budget)):
        leaves[rng.randrange(spine)] += 1
    t = build_family(FamilySpec("Caterpillar", tuple(leaves)))
    return t.relabel(_shuffled(rng, t.n))


def random_long_haired_caterpillar(rng: random.Random, max_n: int = 40, max_degree: int = 3) -> Tree:
    """Random subdivided caterpillar whose maximum degree is at most ``max_degree``."""
    while True:
        spine = rng.randint(1, max(1, max_n // 4))
        hairs = []
        used = spine
        for i in range(spine):
            room = max_degree - (i > 0) - (i < spine - 1)
            k = rng.randint(0, max(0, room))
            lengths = []
            for _ in range(k):
                length = rng.randint(1, 4)
                if used + length > max_n:
                    break
                used += length
                lengths.append(length)
            hairs.append(tuple(lengths))
        t = long_haired_caterpillar(tuple(hairs))
        if max(t.degree(v) for v in range(t.n)) <= max_degree:
            return t.relabel(_shuffled(rng, t.n))


def _shuffled(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


# Edges of the 34-vertex tree built from three T0 copies and a joining vertex,
# with drawing node ids 5..34 shifted down by one (the drawing has no node 4).
_TA_DRAWING_EDGES = [
    (0, 2), (2, 9), (9, 10), (10, 17), (17, 18), (10, 11), (11, 12), (10, 13),
    (13, 14), (10, 15), (15, 16), (0, 1), (1, 5), (5, 6), (6, 19), (19, 20),
    (6, 25), (25, 26), (6, 23), (23, 24), (6, 21), (21, 22), (0, 3), (3, 7),
    (7, 8), (8, 33), (33, 34), (8, 31), (31, 32), (8, 29), (29, 30), (27, 8),
    (28, 27),
]


def _ta_label(x: int) -> int:
    return x - 1 if x >= 5 else x


TA_JOIN = 0
# the three T0 centers, in relabeled ids
TA_CENTERS = (_ta_label(10), _ta_label(6), _ta_label(8))


def ta_tree() -> Tree:
    return Tree.from_edges(34, [(_ta_label(u), _ta_label(v)) for u, v in _TA_DRAWING_EDGES])


def ta_copies() -> list:
    """Vertex sets of the three T0 copies (the components of ``T_A - v0``)."""
    return ta_tree().remove_vertices([TA_JOIN])
