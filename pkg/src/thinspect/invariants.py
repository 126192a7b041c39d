"""Structural properties every strongly consistent representation of a tree has.

Each checker returns a list of offending tuples; an empty list means the
property holds. They are cheap enough to run on every certificate a suite
produces.
"""

from __future__ import annotations

from .thinness import Representation, check_representation
from .tree import Tree


def same_class_neighbors(t: Tree, rep: Representation) -> list:
    """At most one same-class neighbour on each side of every vertex.

    Offenders are ``(v, side, neighbours)`` with ``side`` "before" or "after".
    """
    pos = rep.positions()
    bad = []
    for v in range(t.n):
        mates = [y for y in t.adj[v] if rep.classes[y] == rep.classes[v]]
        before = sorted(y for y in mates if pos[y] < pos[v])
        after = sorted(y for y in mates if pos[y] > pos[v])
        if len(before) > 1:
            bad.append((v, "before", tuple(before)))
        if len(after) > 1:
            bad.append((v, "after", tuple(after)))
    return bad


def neighbors_other_class(t: Tree, rep: Representation) -> list:
    """With two classes, only the outermost other-class neighbours may be non-leaves.

    Offenders are ``(v, w)`` where ``w`` is an other-class neighbour of
    ``v`` strictly between two others and has degree > 1. Representations
    with more than two classes are skipped.
    """
    if rep.k != 2:
        return []
    pos = rep.positions()
    bad = []
    for v in range(t.n):
        others = sorted((y for y in t.adj[v] if rep.classes[y] != rep.classes[v]), key=pos.__getitem__)
        for w in others[1:-1]:
            if t.degree(w) > 1:
                bad.append((v, w))
    return bad


def no_double_crossing(t: Tree, rep: Representation) -> list:
    """No induced path ``v1 v2 v3 v4`` with alternating classes crosses itself.

    The two excluded patterns are ``v1 < v3`` with ``v4 < v2`` and the
    mirror ``v3 < v1`` with ``v2 < v4``. Offenders are the 4-tuples.
    """
    pos = rep.positions()
    cls = rep.classes
    bad = []
    for v2 in range(t.n):
        for v3 in t.adj[v2]:
            if cls[v2] == cls[v3]:
                continue
            for v1 in t.adj[v2]:
                if v1 == v3 or cls[v1] != cls[v3]:
                    continue
                for v4 in t.adj[v3]:
                    if v4 == v2 or cls[v4] != cls[v2]:
                        continue
                    a = pos[v1] < pos[v3] and pos[v4] < pos[v2]
                    b = pos[v3] < pos[v1] and pos[v2] < pos[v4]
                    if a or b:
                        bad.append((v1, v2, v3, v4))
    return bad


def reverse_symmetry(t: Tree, rep: Representation) -> list:
    """Strong consistency survives reversing the ordering; offender is the reversed violation."""
    if check_representation(t, rep, strong=True) is not None:
        return []
    v = check_representation(t, rep.reversed(), strong=True)
    return [] if v is None else [v]


CHECKS = {
    "same_class_neighbors": same_class_neighbors,
    "neighbors_other_class": neighbors_other_class,
    "no_double_crossing": no_double_crossing,
    "reverse_symmetry": reverse_symmetry,
}


def invariant_violations(t: Tree, rep: Representation) -> dict:
    """Every failing check by name; empty when all hold."""
    out = {}
    for name, check in CHECKS.items():
        found = check(t, rep)
        if found:
            out[name] = found
    return out
