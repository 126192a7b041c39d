"""Detection of the forbidden subtrees, minimality audits and the T_A battery.

:func:`detect` scans every vertex as a potential template center and works
from per-branch summaries, so it shares no search code with
:func:`~thinspect.recognition.extract_witness` and the two can be checked
against each other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations

from .families import MINIMAL, FamilySpec, build_family, ta_copies, ta_tree
from .recognition import classify
from .thinness import Representation, check_representation
from .tree import Tree, unique_path
from .witness import Witness, match_template, realize

__all__ = [
    "detect",
    "match_template",
    "minimality_audit",
    "ta_battery",
    "ta_reference_representation",
]


@dataclass(frozen=True)
class _Branch:
    root: int          # neighbour of the center
    degree: int        # degree of ``root``
    far: tuple | None  # (distance, vertex): nearest degree->=3 vertex at distance >= 2
    any3: tuple | None  # (distance, vertex): nearest degree->=3 vertex at distance >= 1


def _branch(t: Tree, center: int, root: int) -> _Branch:
    far = any3 = None
    queue = deque([(root, center, 1)])
    while queue:
        v, p, d = queue.popleft()
        if t.degree(v) >= 3:
            if any3 is None or (d, v) < any3:
                any3 = (d, v)
            if d >= 2 and (far is None or (d, v) < far):
                far = (d, v)
        for y in t.adj[v]:
            if y != p:
                queue.append((y, v, d + 1))
    return _Branch(root, t.degree(root), far, any3)


def _center_candidates(t: Tree, c: int):
    branches = [_branch(t, c, a) for a in t.adj[c]]
    heavy = [b for b in branches if b.degree >= 4]
    with_far = [b for b in branches if b.far is not None]
    for trio in combinations(heavy, 3):
        yield realize(t, FamilySpec("T1"), c, [b.root for b in trio])
    for pair in combinations(heavy, 2):
        for b in with_far:
            if b not in pair:
                yield realize(t, FamilySpec("T4", (b.far[0],)), c, [pair[0].root, pair[1].root, b.far[1]])
    for h in heavy:
        for b1, b2 in combinations([b for b in with_far if b is not h], 2):
            b1, b2 = sorted((b1, b2), key=lambda b: b.far)
            yield realize(t, FamilySpec("T3", (b1.far[0], b2.far[0])), c, [h.root, b1.far[1], b2.far[1]])
    for trio in combinations(with_far, 3):
        trio = sorted(trio, key=lambda b: b.far)
        yield realize(t, FamilySpec("T2", tuple(b.far[0] for b in trio)), c, [b.far[1] for b in trio])
    if len(branches) >= 4:
        anchors = [b for b in branches if b.degree >= 3]
        for a in anchors:
            others = [b for b in branches if b is not a and b.any3 is not None]
            for b1, b2 in combinations(others, 2):
                b1, b2 = sorted((b1, b2), key=lambda b: b.any3)
                rest = [b.root for b in branches if b not in (a, b1, b2)]
                yield realize(t, FamilySpec("T5", (b1.any3[0], b2.any3[0])), c,
                              [a.root, min(rest), b1.any3[1], b2.any3[1]])


def detect(t: Tree) -> Witness | None:
    """Smallest forbidden-family instance occurring as an induced subtree, if any."""
    for v in range(t.n):
        legs = [y for y in t.adj[v] if t.degree(y) > 1]
        if len(legs) >= 5:
            # T0 is the smallest template and ranks first among equals
            legs = legs[:5]
            ends = [next(z for z in t.adj[y] if z != v) for y in legs]
            return realize(t, FamilySpec("T0"), v, ends)
    best = None
    for c in range(t.n):
        if t.degree(c) < 3:
            continue
        for w in _center_candidates(t, c):
            if best is None or w.sort_key() < best.sort_key():
                best = w
    return best


@dataclass
class AuditReport:
    family: FamilySpec
    n: int
    verdict: str
    deletions: list = field(default_factory=list)  # (leaf, verdict, certificate verified)
    oracle_pthin: int | None = None

    @property
    def ok(self) -> bool:
        if self.verdict != "ge3":
            return False
        if self.oracle_pthin is not None and self.oracle_pthin != 3:
            return False
        return all(v in ("pthin1", "pthin2") and good for _, v, good in self.deletions)

    def lines(self) -> list:
        out = [f"{self.family}: n={self.n} verdict={self.verdict}"]
        for leaf, verdict, good in self.deletions:
            out.append(f"  - leaf {leaf}: {verdict} certificate={'ok' if good else 'FAILED'}")
        if self.oracle_pthin is not None:
            out.append(f"  oracle pthin={self.oracle_pthin}")
        out.append("PASS" if self.ok else "FAIL")
        return out


def minimality_audit(family: FamilySpec, oracle_max_n: int = 13) -> AuditReport:
    """Check the instance is forbidden and every one-leaf deletion is not.

    Every proper connected induced subtree lies inside some one-leaf
    deletion, so by monotonicity these deletions suffice. When the instance
    has at most ``oracle_max_n`` vertices the exact search also confirms
    proper thinness exactly 3.
    """
    if family.family not in MINIMAL or tuple(family.params) != MINIMAL[family.family]:
        raise ValueError(f"{family} is not a forbidden family at its minimal parameters")
    from .oracle import pthin_decide

    t = build_family(family)
    report = AuditReport(family, t.n, classify(t).verdict)
    for leaf in t.leaves():
        sub, _ = t.induced(v for v in range(t.n) if v != leaf)
        c = classify(sub)
        good = c.representation is not None and check_representation(sub, c.representation, strong=True) is None
        report.deletions.append((leaf, c.verdict, good))
    if t.n <= oracle_max_n:
        if pthin_decide(t, 2, cap=oracle_max_n) is not None:
            report.oracle_pthin = 2
        elif pthin_decide(t, 3, cap=oracle_max_n) is not None:
            report.oracle_pthin = 3
        else:
            report.oracle_pthin = 4
    return report


# Node coordinates of a drawing of a proper 3-thin representation of T_A,
# keyed by the drawing's node ids (which skip 4). The ordering runs along y,
# bottom to top, and the three classes sit on the lines x = -1.25, 0, 1.25.
_TA_DRAWING_COORDS = {
    0: (-1.25, -3.5), 1: (1.25, -1.5), 2: (-1.25, -6), 3: (1.25, -2),
    5: (1.25, 1.75), 6: (0, 2.25), 7: (1.25, -3.75), 8: (0, -3.25),
    9: (-1.25, -7), 10: (0, -7.75), 11: (1.25, -8.25), 12: (1.25, -9.25),
    13: (0, -6.75), 14: (0, -5.75), 15: (-1.25, -8.5), 16: (-1.25, -9.5),
    17: (0, -8.75), 18: (0, -9.75), 19: (1.25, 2.75), 20: (1.25, 3.75),
    21: (0, 3.25), 22: (0, 4.25), 23: (0, 1.25), 24: (0, 0.5),
    25: (-1.25, 3), 26: (-1.25, 4), 27: (-1.25, -1.25), 28: (-1.25, -0.25),
    29: (1.25, -4.25), 30: (1.25, -5), 31: (0, -4.5), 32: (0, -5.25),
    33: (0, -1), 34: (0, 0),
}
_CLASS_LINES = {-1.25: 0, 0: 1, 1.25: 2}


def ta_reference_representation() -> Representation:
    label = {v: (v - 1 if v >= 5 else v) for v in _TA_DRAWING_COORDS}
    order = [label[v] for v in sorted(_TA_DRAWING_COORDS, key=lambda v: _TA_DRAWING_COORDS[v][1])]
    classes = [0] * len(order)
    for v, (x, _) in _TA_DRAWING_COORDS.items():
        classes[label[v]] = _CLASS_LINES[x]
    return Representation(tuple(order), tuple(classes), 3)


def load_golden_ta() -> tuple:
    """The shipped ``ta.tree`` and ``ta_rep3.cert`` files."""
    from .certificates import load_certificate
    from .tree import parse_tree

    data = resources.files("thinspect") / "data"
    t = parse_tree((data / "ta.tree").read_text())
    rep = load_certificate((data / "ta_rep3.cert").read_text())["representation"]
    return t, rep


@dataclass
class TABattery:
    representation_ok: bool = False
    t0_detected: bool = False
    paths_checked: int = 0
    paths_failed: list = field(default_factory=list)
    copies_meet_all_classes: bool = False
    classes_disconnected: bool = False

    @property
    def ok(self) -> bool:
        return (self.representation_ok and self.t0_detected and not self.paths_failed
                and self.copies_meet_all_classes and self.classes_disconnected)

    def lines(self) -> list:
        mark = lambda b: "ok" if b else "FAIL"  # noqa: E731
        return [
            f"(a) reference representation strongly consistent with 3 classes: {mark(self.representation_ok)}",
            f"(b) T0 detected inside T_A: {mark(self.t0_detected)}",
            f"(c) paths C0 with a T0 left in T_A - C0: {self.paths_checked - len(self.paths_failed)}/{self.paths_checked}",
            f"(d) every T0 copy meets all three classes: {mark(self.copies_meet_all_classes)}",
            f"(e) every class induces a disconnected subgraph: {mark(self.classes_disconnected)}",
            "PASS" if self.ok else "FAIL",
        ]


def _connected(t: Tree, vertices) -> bool:
    vs = set(vertices)
    if not vs:
        return True
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in t.adj[x]:
            if y in vs and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == vs


def ta_battery(rep: Representation | None = None) -> TABattery:
    t = ta_tree()
    if rep is None:
        rep = ta_reference_representation()
    out = TABattery()
    out.representation_ok = rep.k == 3 and check_representation(t, rep, strong=True) is None
    found = detect(t)
    copies = ta_copies()
    out.t0_detected = (found is not None and found.family.family == "T0"
                       and all(match_template(t, copy, FamilySpec("T0")) is not None for copy in copies))
    # every simple path, one per unordered pair of end vertices (including single vertices)
    for a in range(t.n):
        for b in range(a, t.n):
            path = unique_path(t, a, b)
            out.paths_checked += 1
            if not _leaves_t0(t, path):
                out.paths_failed.append((a, b))
    out.copies_meet_all_classes = all(len({rep.classes[v] for v in copy}) == 3 for copy in copies)
    out.classes_disconnected = all(not _connected(t, members) for members in rep.class_members())
    return out


def _leaves_t0(t: Tree, path) -> bool:
    for comp in t.remove_vertices(path):
        if len(comp) < 11:
            continue
        sub, _ = t.induced(comp)
        w = detect(sub)
        if w is not None and w.family.family == "T0":
            return True
    return False
