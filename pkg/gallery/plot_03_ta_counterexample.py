"""
Three classes without disconnecting
===================================

Three copies of T0 joined through one extra vertex give a 34-vertex tree
``TA``. It has proper thinness three, yet it admits a three-class certificate
in which no class induces a connected subgraph and each copy of T0 touches
all three classes. The battery below checks these facts on a stored
certificate.
"""

# %%
from thinspect import check_representation
from thinspect.patterns import load_golden_ta, ta_battery

t, rep = load_golden_ta()
print(t.n, "vertices, k =", rep.k)
print("strongly consistent:", check_representation(t, rep, strong=True) is None)

# %%
# Every class, as an induced subgraph, falls apart into several pieces.
for i, members in enumerate(rep.class_members()):
    print(f"class {i}: {len(members)} vertices")

# %%
# The full battery also deletes every leaf-to-leaf path and checks that
# some copy of T0 always survives.
battery = ta_battery(rep)
print("\n".join(battery.lines()))
