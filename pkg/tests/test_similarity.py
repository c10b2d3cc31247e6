from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from taxicab.geometry import Configuration, DimensionMismatchError, Metric, distance_set, generate_lambda
from taxicab.similarity import (
    SimilarityTransform,
    apply_transform,
    are_similar,
    canonicalize,
    is_axis_parallel,
    signed_permutations,
)

from conftest import points, rand_config, rand_transform

L21 = generate_lambda(2, 1)


def test_transform_examples():
    ident = SimilarityTransform.identity(2)
    assert apply_transform(ident, L21) == L21
    double = SimilarityTransform((0, 1), (1, 1), 2)
    assert apply_transform(double, Configuration([(0, 0), (1, 0)])) == Configuration([(0, 0), (2, 0)])
    swap_neg = SimilarityTransform((1, 0), (-1, 1))
    assert apply_transform(swap_neg, Configuration([(1, 2)])) == Configuration([(-2, 1)])


def test_transform_validation():
    with pytest.raises(ValueError):
        SimilarityTransform((0, 0), (1, 1))
    with pytest.raises(ValueError):
        SimilarityTransform((0, 1), (1, 2))
    with pytest.raises(ValueError):
        SimilarityTransform((0, 1), (1, 1), 0)
    with pytest.raises(DimensionMismatchError):
        apply_transform(SimilarityTransform.identity(3), L21)


def test_signed_permutation_count():
    assert [len(signed_permutations(d)) for d in range(1, 5)] == [2, 8, 48, 384]


def test_canonicalize_examples():
    shifted = Configuration([(5, 3), (7, 3), (6, 4), (6, 2)])
    assert canonicalize(shifted) == canonicalize(L21)
    # Worked by hand: the diamond with per-axis minimum 0.
    assert canonicalize(L21) == Configuration([(0, 1), (1, 0), (1, 2), (2, 1)])
    assert canonicalize(Configuration([], dimension=2)) == Configuration([], dimension=2)
    assert canonicalize(Configuration([(F(1, 3), F(1, 3))])) == Configuration([(0, 0)])


def test_canonical_form_is_primitive():
    c = canonicalize(Configuration([(0, 0), (F(3, 2), 0), (0, F(9, 4))]))
    assert all(x.denominator == 1 for p in c for x in p)
    assert c == Configuration([(0, 0), (0, 2), (3, 0)])


def test_are_similar_examples():
    assert are_similar(L21, Configuration([(0, 0), (2, 0), (1, 1), (1, -1)]))
    square = Configuration([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert not are_similar(L21, square)
    assert len(distance_set(square)) == 2 and len(distance_set(L21)) == 1
    empty = Configuration([], dimension=2)
    assert are_similar(empty, empty)
    with pytest.raises(DimensionMismatchError):
        are_similar(L21, generate_lambda(3, 1))


def test_rotation_is_not_a_similarity():
    # A quarter turn is a signed permutation; (x, y) -> (x - y, x + y) is not.
    rect = Configuration([(0, 0), (2, 0), (0, 1)])
    assert are_similar(rect, Configuration([(0, 0), (0, 2), (-1, 0)]))
    assert not are_similar(rect, Configuration([(0, 0), (2, 2), (-1, 1)]))


def test_axis_parallel_examples():
    assert is_axis_parallel(generate_lambda(2, 2))
    assert not is_axis_parallel(Configuration([(0, 0), (1, 1)]), Metric.L1)
    assert is_axis_parallel(generate_lambda(3, 1))
    unit_square = Configuration([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert is_axis_parallel(unit_square, Metric.LINF)
    assert not is_axis_parallel(unit_square, Metric.L1)
    with pytest.raises(ValueError):
        is_axis_parallel(Configuration([(0, 0)]))


def test_canonical_invariance_and_scaling(rng):
    for _ in range(1000):
        d = rng.randint(1, 4)
        c = rand_config(rng, d)
        t = rand_transform(rng, d)
        tc = apply_transform(t, c)
        assert len(tc) == len(c)
        assert canonicalize(tc) == canonicalize(c)
        assert distance_set(tc).values == tuple(t.scale * v for v in distance_set(c).values)
        if len(c) >= 2:
            for metric in Metric:
                assert is_axis_parallel(tc, metric) == is_axis_parallel(c, metric)


def test_idempotent(rng):
    for _ in range(300):
        c = rand_config(rng, rng.randint(1, 4))
        once = canonicalize(c)
        assert canonicalize(once) == once


def test_equivalence_relation(rng):
    bases = [rand_config(rng, 2, max_points=6) for _ in range(3)]
    pool = [(i, apply_transform(rand_transform(rng, 2), b)) for i, b in enumerate(bases) for _ in range(5)]
    for i, a in pool:
        assert are_similar(a, a)
        for j, b in pool:
            ab = are_similar(a, b)
            assert ab == are_similar(b, a)
            if canonicalize(bases[i]) == canonicalize(bases[j]):
                assert ab
            for _, c in pool[:5]:
                if ab and are_similar(b, c):
                    assert are_similar(a, c)


def test_lambda_similar_to_its_images(rng):
    for _ in range(60):
        d, k = rng.randint(1, 4), rng.randint(0, 4)
        lam = generate_lambda(d, k)
        assert are_similar(lam, apply_transform(rand_transform(rng, d), lam))


@settings(max_examples=200, deadline=None)
@given(st.lists(points(2), min_size=1, max_size=8), st.permutations([0, 1]),
       st.tuples(st.sampled_from([1, -1]), st.sampled_from([1, -1])),
       st.fractions(min_value=F(1, 10), max_value=10), points(2))
def test_canonical_invariance_hypothesis(pts, perm, signs, scale, shift):
    c = Configuration(pts)
    t = SimilarityTransform(tuple(perm), signs, scale, shift)
    assert canonicalize(apply_transform(t, c)) == canonicalize(c)
