"""
Distance sets and similarity classes
====================================

The lattice set at scale k uses only the even distances 2, 4, ..., 2k.
Similarity here means signed coordinate permutations, positive scaling
and translation.
"""

from fractions import Fraction
from taxicab import Configuration, generate_lambda, distance_set, Metric

lam = generate_lambda(3, 3)
print([str(v) for v in distance_set(lam).values])

# Under the max-metric the same points see different distances.
print([str(v) for v in distance_set(lam, Metric.LINF).values])

# Move the set around: swap axes, flip one, scale by 3/2, translate.
from taxicab.similarity import SimilarityTransform, apply_transform, canonicalize, are_similar
t = SimilarityTransform((2, 0, 1), (1, -1, 1), Fraction(3, 2), (5, 0, Fraction(-1, 3)))
moved = apply_transform(t, lam)
print([str(v) for v in distance_set(moved).values])  # every distance scaled by 3/2
assert are_similar(lam, moved)
assert canonicalize(lam) == canonicalize(moved)

# The canonical form is a primitive integer representative.
print(canonicalize(generate_lambda(2, 1)))

# Axis-parallel: every l1-distance is attained by a pair differing in one coordinate.
from taxicab.similarity import is_axis_parallel
print(is_axis_parallel(lam), is_axis_parallel(Configuration([(0, 0), (1, 1)])))
