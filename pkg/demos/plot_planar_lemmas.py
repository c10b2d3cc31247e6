"""
Planar tools: enclosing balls and collinear sets
================================================

In the plane the l1-metric is the max-metric in rotated coordinates, which
makes enclosing balls easy to build.
"""

from taxicab import Configuration, generate_lambda, l1_distance
from taxicab.geometry import to_linf_plane, linf_distance
from taxicab.lemmas import enclosing_ball_2d, strip_upper_hemisphere, line_analysis

p, q = (3, 1), (-2, 4)
print(l1_distance(p, q), linf_distance(to_linf_plane(p), to_linf_plane(q)))

# A ball whose diameter equals the diameter of the point set.
c = Configuration([(0, 0), (1, 1), (2, 0), (1, -2)])
ball = enclosing_ball_2d(c)
print(ball.center, ball.radius, ball.diameter)

# Dropping the upper half of the boundary strictly shrinks the diameter.
lam = generate_lambda(2, 2)
ball = enclosing_ball_2d(lam)
rest = strip_upper_hemisphere(lam, ball)
print(len(lam), "->", len(rest), rest)

# n collinear points always see at least n-1 distances; equality means an
# arithmetic progression.
ap = Configuration([(0, 1), (2, 2), (4, 3), (6, 4)])
print(line_analysis(ap))
bent = Configuration([(0, 1), (2, 2), (6, 4)])
print(line_analysis(bent))
