import dataclasses
import random
from fractions import Fraction as F

import pytest

from taxicab.geometry import Configuration, Metric, distance_set, generate_lambda
from taxicab import search
from taxicab.search import (
    COUNTEREXAMPLE,
    CONSISTENT,
    INCOMPLETE,
    GridSpec,
    GridTooSmallError,
    enumerate_grid,
    max_k_distance_sets,
    naive_max_k_distance_sets,
    verify_conjecture_instance,
)
from taxicab.similarity import are_similar, canonicalize


def test_enumerate_grid_examples():
    assert enumerate_grid(GridSpec(1, 1, 1)) == [(-1,), (0,), (1,)]
    pts = enumerate_grid(GridSpec(2, 1, 1))
    assert len(pts) == 9 and pts[0] == (-1, -1) and pts == sorted(pts)
    assert {x for p in enumerate_grid(GridSpec(2, 1, 2)) for x in p} == {F(-1, 2), F(0), F(1, 2)}
    half = enumerate_grid(GridSpec(2, 2, 2))
    assert len(half) == 25
    assert {x for p in half for x in p} == {F(-1), F(-1, 2), F(0), F(1, 2), F(1)}


def test_grid_validation():
    with pytest.raises(ValueError):
        GridSpec(0, 1, 1)
    with pytest.raises(ValueError):
        GridSpec(2, 0, 1)


def check_result(res):
    for c in res.canonical_classes:
        assert len(c) == res.max_size
        assert len(distance_set(c, res.metric)) <= res.k
    classes = res.canonical_classes
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            assert not are_similar(a, b)


@pytest.mark.parametrize("d, k, metric, size, expected", [
    (2, 1, Metric.L1, 4, generate_lambda(2, 1)),
    (3, 1, Metric.L1, 6, generate_lambda(3, 1)),
    (2, 1, Metric.LINF, 4, Configuration([(0, 0), (0, 1), (1, 0), (1, 1)])),
])
def test_search_examples(d, k, metric, size, expected):
    res = max_k_distance_sets(GridSpec(d, 1, 1), k, metric)
    check_result(res)
    assert res.complete
    assert res.max_size == size
    assert res.canonical_classes == (canonicalize(expected),)


@pytest.mark.parametrize("grid, k, metric", [
    (GridSpec(2, 1, 1), 1, Metric.L1),
    (GridSpec(2, 1, 1), 2, Metric.L1),
    (GridSpec(2, 1, 1), 2, Metric.LINF),
    (GridSpec(1, 7, 1), 3, Metric.L1),
    (GridSpec(1, 3, 2), 2, Metric.LINF),
])
def test_matches_naive_enumeration(grid, k, metric):
    res = max_k_distance_sets(grid, k, metric)
    size, classes = naive_max_k_distance_sets(grid, k, metric)
    assert (res.max_size, res.canonical_classes) == (size, classes)


def test_naive_pruned_agrees_with_plain():
    g = GridSpec(2, 1, 1)
    assert naive_max_k_distance_sets(g, 2, prune=True) == naive_max_k_distance_sets(g, 2)


def test_lower_bound_and_monotone_in_m():
    prev = 0
    for m in range(1, 4):
        res = max_k_distance_sets(GridSpec(2, m, 1), 2)
        assert res.max_size >= prev
        if m >= 2:
            assert res.max_size >= len(generate_lambda(2, 2))
        prev = res.max_size


@pytest.mark.parametrize("d, m, q, k", [(1, 3, 1, 2), (2, 1, 1, 1), (2, 2, 1, 2)])
def test_scale_consistency(d, m, q, k):
    a = max_k_distance_sets(GridSpec(d, m, q), k)
    b = max_k_distance_sets(GridSpec(d, 2 * m, 2 * q), k, orderly=True)
    assert (a.max_size, a.canonical_classes) == (b.max_size, b.canonical_classes)


def test_orderly_mode_agrees_and_is_smaller():
    rng = random.Random(7)
    for _ in range(8):
        d = rng.choice([1, 2])
        g = GridSpec(d, rng.randint(1, 3 if d == 2 else 6), rng.choice([1, 2]))
        k = rng.randint(1, 3)
        metric = rng.choice(list(Metric))
        plain = max_k_distance_sets(g, k, metric)
        fast = max_k_distance_sets(g, k, metric, orderly=True)
        assert (plain.max_size, plain.canonical_classes) == (fast.max_size, fast.canonical_classes)
        assert fast.nodes_explored <= plain.nodes_explored


def test_deterministic_across_runs_and_jobs():
    g = GridSpec(2, 2, 1)
    runs = [max_k_distance_sets(g, 2, jobs=j) for j in (1, 1, 2, 3)]
    first = runs[0]
    for r in runs[1:]:
        assert (r.max_size, r.canonical_classes, r.complete) == (
            first.max_size, first.canonical_classes, first.complete)
    assert runs[0].nodes_explored == runs[1].nodes_explored


def test_node_limit_marks_incomplete():
    res = max_k_distance_sets(GridSpec(2, 2, 1), 2, node_limit=10)
    assert not res.complete
    rep = verify_conjecture_instance(2, 2, GridSpec(2, 2, 1), node_limit=10)
    assert rep.verdict == INCOMPLETE


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        max_k_distance_sets(GridSpec(2, 1, 1), 0)


@pytest.mark.parametrize("d, k, m, size", [(2, 1, 1, 4), (2, 2, 2, 9), (3, 1, 1, 6)])
def test_verify_examples(d, k, m, size):
    rep = verify_conjecture_instance(d, k, GridSpec(d, m, 1))
    assert rep.verdict == CONSISTENT
    assert rep.max_size == rep.lambda_size == size
    assert rep.unique_lambda_class and rep.all_axis_parallel
    assert rep.witness is None
    assert "CONSISTENT" in rep.summary()


def test_verify_rejects_bad_grids():
    with pytest.raises(GridTooSmallError):
        verify_conjecture_instance(2, 2, GridSpec(2, 1, 1))
    with pytest.raises(GridTooSmallError):
        verify_conjecture_instance(2, 1, GridSpec(2, 1, 2))
    with pytest.raises(ValueError):
        verify_conjecture_instance(3, 1, GridSpec(2, 1, 1))


def test_verify_flags_extra_class(monkeypatch):
    g = GridSpec(2, 1, 1)
    real = search.max_k_distance_sets(g, 1)
    diagonal = canonicalize(Configuration([(0, 0), (1, 1)]))
    fake = dataclasses.replace(
        real, canonical_classes=real.canonical_classes + (diagonal,))
    monkeypatch.setattr(search, "max_k_distance_sets", lambda *a, **kw: fake)
    rep = verify_conjecture_instance(2, 1, g)
    assert rep.verdict == COUNTEREXAMPLE
    assert not rep.unique_lambda_class and not rep.all_axis_parallel
    assert rep.witness == diagonal
