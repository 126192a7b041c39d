"""Forbidden-family witnesses and induced-subtree template matching."""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilySpec, arm_layout, build_family, family_arms
from .tree import Tree, unique_path

# family preference when several witnesses are available
FAMILY_RANK = {"T0": 0, "T1": 1, "T5": 2, "T4": 3, "T3": 4, "T2": 5}


@dataclass(frozen=True)
class Witness:
    """``mapping[i]`` is the host vertex playing template vertex ``i``."""

    family: FamilySpec
    mapping: tuple

    @property
    def vertices(self) -> list:
        return sorted(self.mapping)

    def sort_key(self):
        return (len(self.mapping), FAMILY_RANK[self.family.family], self.family.params, self.vertices)

    def is_valid(self, t: Tree) -> bool:
        return validate_mapping(t, self.family, self.mapping)


TemplateMatch = Witness


def validate_mapping(t: Tree, family: FamilySpec, mapping) -> bool:
    """Does ``mapping`` embed the template as an induced subtree of ``t``?"""
    template = build_family(family)
    if len(mapping) != template.n or len(set(mapping)) != template.n:
        return False
    if any(not 0 <= x < t.n for x in mapping):
        return False
    for a in range(template.n):
        for b in range(a + 1, template.n):
            if template.has_edge(a, b) != t.has_edge(mapping[a], mapping[b]):
                return False
    return True


def _rooted_codes(t: Tree, root: int, allowed) -> dict:
    order = []
    stack = [(root, -1)]
    parent = {}
    while stack:
        v, p = stack.pop()
        parent[v] = p
        order.append(v)
        for y in t.adj[v]:
            if y != p and y in allowed:
                stack.append((y, v))
    codes = {}
    for v in reversed(order):
        codes[v] = "(" + "".join(sorted(codes[y] for y in t.adj[v] if y != parent[v] and y in allowed)) + ")"
    return codes, parent


def match_template(t: Tree, subset, family: FamilySpec) -> Witness | None:
    """A witness iff ``t[subset]`` is isomorphic to the named template.

    Uses rooted-tree codes: the template is rooted at its center (vertex 0),
    each host vertex of matching degree profile is tried as the root, and
    children are paired by equal codes.
    """
    subset = set(subset)
    if any(not 0 <= x < t.n for x in subset):
        raise ValueError("subset contains invalid vertex ids")
    template = build_family(family)
    if len(subset) != template.n:
        return None
    tcodes, tparent = _rooted_codes(template, 0, set(range(template.n)))
    if len(tcodes) != template.n:
        return None
    target = tcodes[0]
    center_degree = template.degree(0)
    for root in sorted(subset):
        if sum(1 for y in t.adj[root] if y in subset) != center_degree:
            continue
        hcodes, hparent = _rooted_codes(t, root, subset)
        if len(hcodes) != len(subset) or hcodes[root] != target:
            continue
        mapping = [None] * template.n
        stack = [(0, root)]
        while stack:
            a, h = stack.pop()
            mapping[a] = h
            a_kids = sorted((tcodes[y], y) for y in template.adj[a] if y != tparent[a])
            h_kids = sorted((hcodes[y], y) for y in t.adj[h] if y != hparent[h] and y in subset)
            for (_, ya), (_, yh) in zip(a_kids, h_kids):
                stack.append((ya, yh))
        return Witness(family, tuple(mapping))
    return None


def realize(t: Tree, family: FamilySpec, center: int, branch_ends) -> Witness:
    """Build a witness from a center and the host vertex ending each arm.

    ``branch_ends`` follows the template's arm order; arms must lie in
    distinct branches at ``center``. Leaves of an arm are the smallest-id
    neighbours of its end vertex away from the center.
    """
    arms = family_arms(family)
    layout = arm_layout(arms)
    if len(branch_ends) != len(arms):
        raise ValueError(f"{family} has {len(arms)} arms, got {len(branch_ends)} ends")
    mapping = [center] + [None] * sum(length + leaves for length, leaves in arms)
    for (length, leaves), (path_ids, leaf_ids), end in zip(arms, layout, branch_ends):
        path = unique_path(t, center, end)[1:]
        if len(path) != length:
            raise ValueError(f"arm of length {length} realized by a path of length {len(path)}")
        for tid, h in zip(path_ids, path):
            mapping[tid] = h
        prev = path[-2] if len(path) > 1 else center
        extra = [y for y in t.adj[end] if y != prev][:leaves]
        if len(extra) != leaves:
            raise ValueError(f"vertex {end} lacks {leaves} free neighbours")
        for tid, h in zip(leaf_ids, extra):
            mapping[tid] = h
    return Witness(family, tuple(mapping))
