"""
Recognizing proper thinness of a tree
=====================================

``classify`` sorts a tree into one of three buckets and always hands back
something checkable: an ordering with a partition for the two small buckets,
an induced forbidden subtree for the last one.
"""

# %%
# Paths are the trees of proper thinness one. Their certificate is the
# path order itself, with everything in a single class.
from thinspect import FamilySpec, build_family, check_representation, classify, parse_tree

p6 = build_family(FamilySpec("Path", (6,)))
c = classify(p6)
print(c.value, c.representation.ordering)

# %%
# A spider with three legs of length two is not a path. The recognizer finds
# a central path ``c0``; deleting it leaves only paths, and ``c0`` becomes
# class 0 of a strongly consistent two-class ordering.
spider = parse_tree("7\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n")
c = classify(spider)
print(c.value, "c0 =", c.c0)
print("ordering:", c.representation.ordering)
print("classes: ", c.representation.classes)

# %%
# Certificates are verified independently of how they were produced.
# ``check_representation`` returns ``None`` or the first violated triple.
print(check_representation(spider, c.representation, strong=True))

# %%
# Collapsing both classes into one cannot work, since the tree is not a
# path. The checker names the failing clause and the offending vertices.
from thinspect import Representation

one_class = Representation.build(c.representation.ordering, [0] * spider.n)
print(check_representation(spider, one_class))
