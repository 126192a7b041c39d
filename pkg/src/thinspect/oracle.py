"""Exact proper thinness by exhaustive search, for desk-scale trees.

For a fixed partition, an ordering is built left to right. Every triple
``r < s < t`` is checked at the moment its middle vertex ``s`` is placed,
with ``r`` among the already placed vertices ``P`` and ``t`` among the
unplaced ones. Placing ``s`` is therefore legal iff

* forward: every placed ``r`` in the class of ``s`` has no unplaced
  neighbour (other than ``s``) outside ``N(s)``;
* backward: every unplaced ``t`` in the class of ``s`` has no placed
  neighbour outside ``N(s)``.

Both tests depend on the set ``P`` alone, not on its internal order, so a
prefix set that failed once fails always and is memoized.
"""

from __future__ import annotations

import os

from .thinness import CapExceeded, Representation
from .tree import Tree

ENV_CAP = "THINSPECT_MAX_ORACLE_N"

# maximum n per class budget k; larger k falls back to the k=3 value
DEFAULT_CAPS = {1: 24, 2: 14, 3: 11}


def oracle_cap(k: int, override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(ENV_CAP)
    if env:
        return int(env)
    return DEFAULT_CAPS.get(k, DEFAULT_CAPS[3])


def _partitions(t: Tree, k: int):
    """Class assignments with at most ``k`` classes, up to renaming classes.

    Restricted-growth order with vertex 0 in class 0, so the enumeration (and
    hence the first certificate found) is deterministic.
    """
    n = t.n
    classes = [0] * n

    def rec(v, used):
        if v == n:
            yield classes
            return
        for c in range(min(k, used + 1)):
            classes[v] = c
            yield from rec(v + 1, max(used, c + 1))

    yield from rec(1, 1) if n > 1 else iter([classes])


def _find_ordering(t: Tree, classes) -> list | None:
    n = t.n
    full = (1 << n) - 1
    nbr = [0] * n
    for v in range(n):
        for y in t.adj[v]:
            nbr[v] |= 1 << y
    k = max(classes) + 1
    cmask = [0] * k
    for v in range(n):
        cmask[classes[v]] |= 1 << v
    same = [cmask[classes[v]] for v in range(n)]
    dead = set()
    order = []

    def can_place(s, placed):
        bit = 1 << s
        outside = full & ~(placed | bit | nbr[s])
        group = same[s]
        m = group & placed
        while m:
            low = m & -m
            r = low.bit_length() - 1
            if nbr[r] & outside:
                return False
            m ^= low
        inside_bad = placed & ~nbr[s]
        m = group & ~placed & ~bit
        while m:
            low = m & -m
            w = low.bit_length() - 1
            if nbr[w] & inside_bad:
                return False
            m ^= low
        return True

    def rec(placed):
        if placed == full:
            return True
        if placed in dead:
            return False
        free = full & ~placed
        while free:
            low = free & -free
            s = low.bit_length() - 1
            free ^= low
            if can_place(s, placed):
                order.append(s)
                if rec(placed | low):
                    return True
                order.pop()
        dead.add(placed)
        return False

    if rec(0):
        return order
    return None


def pthin_decide(t: Tree, k: int, cap: int | None = None) -> Representation | None:
    """A strongly consistent representation with at most ``k`` classes, or ``None``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    limit = oracle_cap(k, cap)
    if t.n > limit:
        raise CapExceeded(f"n={t.n} exceeds oracle cap {limit} for k={k}")
    for classes in _partitions(t, k):
        order = _find_ordering(t, classes)
        if order is not None:
            return Representation.build(order, list(classes))
    return None


def pthin_exact(t: Tree, cap: int | None = None) -> tuple:
    """``(pthin, certificate)`` by increasing ``k`` until the search succeeds."""
    k = 1
    while True:
        rep = pthin_decide(t, k, cap)
        if rep is not None:
            return k, rep
        k += 1
