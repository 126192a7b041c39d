"""Certifying recognition of trees by proper thinness.

Trees with proper thinness 1 are paths. Those with proper thinness 2 get a
strongly consistent two-class ordering. All others get an induced copy of
one of six forbidden subtrees.

>>> from thinspect import build_family, classify, FamilySpec
>>> classify(build_family(FamilySpec("T0"))).value
'pthin>=3'
"""

from .families import FamilySpec, build_family
from .oracle import pthin_decide, pthin_exact
from .patterns import detect, match_template, minimality_audit, ta_battery
from .recognition import Classification, classify, extract_witness, find_c0
from .thinness import (
    CapExceeded,
    Representation,
    Violation,
    check_representation,
    conflict_graph,
    min_classes_exact,
    min_classes_for_ordering,
)
from .tree import Tree, parse_tree, random_tree, serialize_tree
from .witness import Witness

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Classification",
    "FamilySpec",
    "Representation",
    "Tree",
    "Violation",
    "Witness",
    "build_family",
    "check_representation",
    "classify",
    "conflict_graph",
    "detect",
    "extract_witness",
    "find_c0",
    "match_template",
    "min_classes_exact",
    "min_classes_for_ordering",
    "minimality_audit",
    "parse_tree",
    "pthin_decide",
    "pthin_exact",
    "random_tree",
    "serialize_tree",
    "ta_battery",
]
