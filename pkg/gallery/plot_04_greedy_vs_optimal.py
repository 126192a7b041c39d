"""
Greedy versus optimal classes for a fixed ordering
==================================================

For a fixed vertex ordering, two vertices conflict when they cannot share a
class. Coloring the conflict graph greedily in order is fast but can waste a
class. Because non-conflict is transitive along the ordering, the optimum is
a minimum chain cover and follows from a bipartite matching.
"""

# %%
from thinspect import Tree, conflict_graph, min_classes_exact, min_classes_for_ordering
from thinspect.thinness import greedy_classes_for_ordering

t = Tree.from_edges(4, [(0, 3), (1, 2), (2, 3)])
order = [0, 1, 2, 3]
print("conflicts:", sorted(conflict_graph(t, order, strong=True).conflicts))

# %%
greedy = greedy_classes_for_ordering(t, order, strong=True)
best = min_classes_for_ordering(t, order, strong=True)
print("greedy k =", greedy.k, greedy.class_members())
print("matching k =", best.k, best.class_members())

# %%
# A brute-force search over all class assignments confirms the matching
# answer.
print("exact k =", min_classes_exact(t, order, strong=True).k)
