"""Exhaustive classify-versus-oracle agreement over labeled trees.

The oracle's answer depends only on the isomorphism class, so it is computed
once per canonical form and reused for every labeling; ``classify`` runs on
each labeled tree, since its certificates are label-specific.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .invariants import invariant_violations
from .oracle import pthin_decide
from .recognition import classify
from .thinness import check_representation
from .tree import Tree, all_labeled_trees, canonical_form

BUCKET = {"pthin1": 1, "pthin2": 2, "ge3": 3}


@dataclass
class SweepResult:
    n: int
    trees: int = 0
    shapes: int = 0
    mismatches: list = field(default_factory=list)  # (edges, verdict, oracle bucket)
    bad_certificates: list = field(default_factory=list)
    invariant_failures: list = field(default_factory=list)
    buckets: dict = field(default_factory=lambda: {1: 0, 2: 0, 3: 0})

    @property
    def ok(self) -> bool:
        return not (self.mismatches or self.bad_certificates or self.invariant_failures)

    def summary(self) -> str:
        return f"trees={self.trees} mismatches={len(self.mismatches)}"


class OracleCache:
    """Oracle bucket (1, 2 or 3 meaning ">= 3") per isomorphism class."""

    def __init__(self, cap: int | None = None):
        self.cap = cap
        self.buckets = {}
        self.representatives = {}  # key -> (tree, representation or None)

    def bucket(self, t: Tree) -> int:
        key = canonical_form(t)
        if key not in self.buckets:
            rep = None
            for k in (1, 2):
                rep = pthin_decide(t, k, cap=self.cap)
                if rep is not None:
                    break
            self.buckets[key] = rep.k if rep is not None else 3
            self.representatives[key] = (t, rep)
        return self.buckets[key]


def agreement_sweep(n: int, cap: int | None = None, check_invariants: bool = True,
                    cache: OracleCache | None = None, visit=None) -> SweepResult:
    """Compare ``classify`` with the oracle on every labeled tree of size ``n``.

    ``visit(tree, classification)`` is called for each tree, if given.
    """
    cache = cache if cache is not None else OracleCache(cap)
    out = SweepResult(n)
    before = len(cache.buckets)
    for t in all_labeled_trees(n):
        out.trees += 1
        c = classify(t)
        if visit is not None:
            visit(t, c)
        want = cache.bucket(t)
        got = BUCKET[c.verdict]
        out.buckets[want] += 1
        if got != want:
            out.mismatches.append((t.sorted_edges(), c.verdict, want))
        if c.witness is not None:
            if not c.witness.is_valid(t):
                out.bad_certificates.append((t.sorted_edges(), "witness"))
        elif check_representation(t, c.representation, strong=True) is not None:
            out.bad_certificates.append((t.sorted_edges(), "representation"))
        elif check_invariants:
            bad = invariant_violations(t, c.representation)
            if bad:
                out.invariant_failures.append((t.sorted_edges(), "classify", bad))
    out.shapes = len(cache.buckets) - before
    if check_invariants:
        for key, (t, rep) in cache.representatives.items():
            if rep is not None and t.n == n:
                bad = invariant_violations(t, rep)
                if bad:
                    out.invariant_failures.append((t.sorted_edges(), "oracle", bad))
    return out
