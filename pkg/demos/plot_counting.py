"""
Counting lattice points in an l1-ball
=====================================

Three ways to get the size of the scaled cross-polytope lattice set, and a
look at the polynomial coefficients.
"""

# Enumerate the set directly for a small case.
from taxicab import generate_lambda
pts = generate_lambda(2, 2)
print(len(pts), "points:", pts)

# The recurrence and the closed-form polynomial agree with enumeration.
from taxicab.counting import lambda_size_recursive, lambda_size_polynomial
for d in range(1, 6):
    row = [lambda_size_recursive(d, k) for k in range(6)]
    assert row == [lambda_size_polynomial(d, k) for k in range(6)]
    print(f"d={d}:", row)

# Coefficients of the polynomial in n = k+1, one per power of matching parity.
from taxicab.counting import lambda_coefficients
for d in range(2, 8):
    poly = lambda_coefficients(d)
    terms = " + ".join(f"{a} n^{p}" for a, p in zip(poly.coefficients, poly.powers()))
    print(f"d={d}: {terms}")

# The polynomial is exact for large k, where enumeration would be hopeless.
print(lambda_size_polynomial(6, 1000))

# Bernoulli numbers drive the coefficient recursion.
from taxicab.exact import bernoulli, faulhaber_sum
print([str(bernoulli(n)) for n in range(0, 13, 2)])
assert faulhaber_sum(3, 10) == sum(i ** 3 for i in range(1, 11))
