"""
Searching a grid for large k-distance sets
==========================================

Branch-and-bound over a finite rational grid. Results hold for that grid
only; they are evidence, not proofs.
"""

import time
from taxicab.search import GridSpec, max_k_distance_sets, verify_conjecture_instance
from taxicab import Metric

# The plane, two distances, grid [-2, 2]^2.
res = max_k_distance_sets(GridSpec(2, 2, 1), 2)
print(res.max_size, len(res.canonical_classes), res.nodes_explored)
print(res.canonical_classes[0])

# Bundle the search with the checks that matter and print a verdict.
for d, k in [(2, 1), (2, 2), (3, 1)]:
    start = time.perf_counter()
    report = verify_conjecture_instance(d, k, GridSpec(d, k, 1))
    print(f"--- d={d} k={k} ({time.perf_counter() - start:.2f}s)")
    print(report.summary())

# Orderly mode only looks at sets touching every lower face of the grid.
fast = max_k_distance_sets(GridSpec(2, 3, 1), 3, orderly=True)
print(fast.max_size, fast.nodes_explored)

# With the max-metric the winner is a square grid of (k+1)^2 points.
sq = max_k_distance_sets(GridSpec(2, 2, 1), 2, Metric.LINF)
print(sq.max_size, sq.canonical_classes[0])

# A tight node budget leaves the answer open.
cut = verify_conjecture_instance(2, 2, GridSpec(2, 2, 1), node_limit=20)
print(cut.verdict)
