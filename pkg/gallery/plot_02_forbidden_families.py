"""
The six forbidden subtrees
==========================

A tree has proper thinness at most two exactly when it avoids six induced
subtrees, two of them fixed and four parametrized by arm lengths. This
script builds the smallest member of each and looks at what the recognizer
and the standalone matcher report.
"""

# %%
from thinspect import FamilySpec, build_family, classify, detect, minimality_audit
from thinspect.families import MINIMAL

for name, params in MINIMAL.items():
    spec = FamilySpec(name, params)
    t = build_family(spec)
    w = classify(t).witness
    print(f"{str(spec):10s} n={t.n:2d} witness={w.family}")

# %%
# Anything containing a forbidden subtree inherits the verdict. Here a T2
# with long arms is not minimal; ``detect``
# searches independently of ``classify`` and both agree.
t = build_family(FamilySpec("T2", (2, 3, 4)))
print(classify(t).value, detect(t).family)

# %%
# Minimality: deleting any leaf of a minimal member drops the proper
# thinness to two. The audit checks every leaf with the recognizer and
# confirms the value three with the exact oracle.
report = minimality_audit(FamilySpec("T0"))
print("\n".join(report.lines()))
