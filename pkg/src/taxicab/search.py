"""Exhaustive search for the largest k-distance sets inside a finite rational grid.

The search is exact but grid-restricted: it finds the true maximum over
subsets of {a/q : |a| <= m}^d, which bounds nothing outside that grid.
Refining q reaches configurations with finer rational coordinates.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .counting import lambda_size_recursive
from .geometry import Configuration, Metric, Point, distance, generate_lambda
from .similarity import canonical_key, canonicalize, is_axis_parallel

__all__ = [
    "GridSpec",
    "SearchResult",
    "ConjectureReport",
    "GridTooSmallError",
    "enumerate_grid",
    "max_k_distance_sets",
    "naive_max_k_distance_sets",
    "verify_conjecture_instance",
    "CONSISTENT",
    "COUNTEREXAMPLE",
    "INCOMPLETE",
]

log = logging.getLogger(__name__)

CONSISTENT = "CONSISTENT"
COUNTEREXAMPLE = "COUNTEREXAMPLE"
INCOMPLETE = "INCOMPLETE"

DEFAULT_NODE_LIMIT = 10**9


class GridTooSmallError(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    """The grid {a/q : a integer, |a| <= m}^dimension."""

    dimension: int
    half_width: int
    denominator: int = 1

    def __post_init__(self):
        if self.dimension < 1 or self.half_width < 1 or self.denominator < 1:
            raise ValueError(f"grid parameters must be positive: {self}")

    @property
    def size(self) -> int:
        return (2 * self.half_width + 1) ** self.dimension

    def integer_points(self) -> list[tuple[int, ...]]:
        m = self.half_width
        return list(itertools.product(range(-m, m + 1), repeat=self.dimension))

    def contains_lambda(self, k: int) -> bool:
        return self.half_width >= k * self.denominator


def enumerate_grid(g: GridSpec) -> list[Point]:
    """All grid points in lexicographic order."""
    vals = [Fraction(a, g.denominator) for a in range(-g.half_width, g.half_width + 1)]
    return list(itertools.product(vals, repeat=g.dimension))


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a grid search.

    ``canonical_classes`` holds one canonical representative per similarity
    class of maximum-size solution, sorted. ``nodes_explored`` is a
    diagnostic and depends on ``jobs``; everything else does not.
    """

    max_size: int
    canonical_classes: tuple[Configuration, ...]
    nodes_explored: int
    grid: GridSpec
    k: int
    metric: Metric
    complete: bool = True


class _NodeLimitReached(Exception):
    pass


def _int_distance(p: Sequence[int], q: Sequence[int], metric: Metric) -> int:
    if metric is Metric.L1:
        return sum(abs(a - b) for a, b in zip(p, q))
    return max(abs(a - b) for a, b in zip(p, q))


class _BranchAndBound:
    """Depth-first subset extension in grid order.

    Candidates carry a bitmask of the distances they would add to the
    chosen set; a candidate survives only while the union with the current
    distance mask has at most k bits. Branches that cannot reach the
    incumbent size are cut; ties are still explored so every maximum
    solution is seen.
    """

    def __init__(self, grid: GridSpec, k: int, metric: Metric, *, orderly: bool, node_limit: int):
        self.grid = grid
        self.k = k
        self.metric = metric
        self.orderly = orderly
        self.node_limit = node_limit
        self.points = grid.integer_points()
        n = len(self.points)
        values = sorted(
            {_int_distance(p, q, metric) for p, q in itertools.combinations(self.points, 2)}
        )
        bit = {v: 1 << i for i, v in enumerate(values)}
        self.dbit = [
            [0 if i == j else bit[_int_distance(self.points[i], self.points[j], metric)]
             for j in range(n)]
            for i in range(n)
        ]
        m = grid.half_width
        self.low = [
            sum(1 << a for a, x in enumerate(p) if x == -m) for p in self.points
        ]
        self.all_axes = (1 << grid.dimension) - 1
        self.best = 0
        self.solutions: list[tuple[int, ...]] = []
        self.nodes = 0
        self.chosen: list[int] = []

    def roots(self) -> list[int]:
        if not self.orderly:
            return list(range(len(self.points)))
        # Every class has a translate touching the lower face on every axis;
        # the lexicographically first point of it then has x_1 = -m.
        return [i for i, p in enumerate(self.points) if p[0] == -self.grid.half_width]

    def run_root(self, i: int) -> None:
        self.chosen.append(i)
        row = self.dbit[i]
        cands = [(j, row[j]) for j in range(i + 1, len(self.points))]
        self._extend(1, 0, cands, self.low[i])
        self.chosen.pop()

    def run(self, roots: Iterable[int] | None = None) -> None:
        self.nodes += 1  # the empty set
        self._record(0)
        for i in self.roots() if roots is None else roots:
            self.run_root(i)

    def _record(self, size: int) -> None:
        if size > self.best:
            self.best = size
            self.solutions = [tuple(self.chosen)]
        elif size == self.best:
            self.solutions.append(tuple(self.chosen))

    def _extend(self, size: int, dmask: int, cands: list[tuple[int, int]], hit: int) -> None:
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise _NodeLimitReached
        if not self.orderly or hit == self.all_axes:
            self._record(size)
        if size + len(cands) < self.best:
            return
        if self.orderly and hit != self.all_axes:
            reach = hit
            for j, _ in cands:
                reach |= self.low[j]
            if reach != self.all_axes:
                return
        k = self.k
        dbit = self.dbit
        low = self.low
        total = len(cands)
        for pos, (i, prof) in enumerate(cands):
            if size + total - pos < self.best:
                break
            nmask = dmask | prof
            row = dbit[i]
            nxt = []
            for j, pj in cands[pos + 1:]:
                pn = pj | row[j]
                if (nmask | pn).bit_count() <= k:
                    nxt.append((j, pn))
            self.chosen.append(i)
            self._extend(size + 1, nmask, nxt, hit | low[i])
            self.chosen.pop()


def _to_configuration(grid: GridSpec, pts: Iterable[Sequence[int]]) -> Configuration:
    q = grid.denominator
    return Configuration(
        (tuple(Fraction(a, q) for a in p) for p in pts), dimension=grid.dimension
    )


def _canonical_classes(grid: GridSpec, points, raw: Iterable[tuple[int, ...]]) -> dict:
    classes = {}
    for sol in raw:
        config = _to_configuration(grid, (points[i] for i in sol))
        key = canonical_key(config)
        if key not in classes:
            classes[key] = canonicalize(config)
    return classes


def _worker(args):
    grid, k, metric, orderly, node_limit, roots = args
    bb = _BranchAndBound(grid, k, metric, orderly=orderly, node_limit=node_limit)
    complete = True
    try:
        for i in roots:
            bb.run_root(i)
    except _NodeLimitReached:
        complete = False
    keys = sorted(_canonical_classes(grid, bb.points, bb.solutions)) if bb.best else []
    return bb.best, keys, bb.nodes, complete


def max_k_distance_sets(
    g: GridSpec,
    k: int,
    metric: Metric = Metric.L1,
    *,
    jobs: int = 1,
    node_limit: int = DEFAULT_NODE_LIMIT,
    orderly: bool = False,
) -> SearchResult:
    """Largest subsets of the grid with at most ``k`` distinct distances.

    ``orderly=True`` explores only subsets whose minimum on every axis is the
    grid's lower edge. Every similarity class keeps such a translate, so
    the answer is unchanged and the tree is much smaller.

    With ``jobs > 1`` top-level branches are split round-robin across
    processes; each worker keeps its own incumbent and ``node_limit``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    metric = Metric(metric)
    bb = _BranchAndBound(g, k, metric, orderly=orderly, node_limit=node_limit)
    if jobs <= 1:
        complete = True
        try:
            bb.run()
        except _NodeLimitReached:
            complete = False
            log.warning("node limit %d reached; search incomplete", node_limit)
        classes = _canonical_classes(g, bb.points, bb.solutions)
        best, nodes = bb.best, bb.nodes
    else:
        roots = bb.roots()
        chunks = [roots[w::jobs] for w in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outs = list(pool.map(
                _worker, [(g, k, metric, orderly, node_limit, c) for c in chunks]
            ))
        best = max(max(o[0] for o in outs), 1)
        nodes = 1 + sum(o[2] for o in outs)
        complete = all(o[3] for o in outs)
        keys = sorted({key for b, ks, _, _ in outs if b == best for key in ks})
        classes = {}
        for key in keys:
            config = Configuration((tuple(Fraction(x) for x in p) for p in key), dimension=g.dimension)
            classes[key] = config
    reps = tuple(classes[key] for key in sorted(classes))
    return SearchResult(best, reps, nodes, g, k, metric, complete)


def naive_max_k_distance_sets(
    g: GridSpec,
    k: int,
    metric: Metric = Metric.L1,
    *,
    prune: bool = False,
) -> tuple[int, tuple[Configuration, ...]]:
    """Reference answer by plain subset enumeration on exact rationals.

    Without ``prune`` it walks combinations from the largest size down and
    stops at the first size that has a solution. With ``prune`` it
    enumerates include/exclude choices and only abandons a branch once its
    distance set already exceeds ``k``; there is no size bound.
    """
    metric = Metric(metric)
    pts = enumerate_grid(g)
    n = len(pts)
    dist = {}
    for i, j in itertools.combinations(range(n), 2):
        dist[i, j] = distance(pts[i], pts[j], metric)

    def canon(found: list[tuple[int, ...]]) -> tuple[Configuration, ...]:
        reps = {
            canonicalize(Configuration((pts[i] for i in sub), dimension=g.dimension))
            for sub in found
        }
        return tuple(sorted(reps))

    if not prune:
        for r in range(n, 0, -1):
            found = []
            for sub in itertools.combinations(range(n), r):
                seen = set()
                ok = True
                for a, b in itertools.combinations(sub, 2):
                    seen.add(dist[a, b])
                    if len(seen) > k:
                        ok = False
                        break
                if ok:
                    found.append(sub)
            if found:
                return r, canon(found)
        return 0, ()

    best = 0
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def walk(i: int, seen: frozenset) -> None:
        nonlocal best, found
        if i == n:
            size = len(chosen)
            if size > best:
                best, found = size, [tuple(chosen)]
            elif size == best:
                found.append(tuple(chosen))
            return
        grown = seen.union(dist[c, i] for c in chosen)
        if len(grown) <= k:
            chosen.append(i)
            walk(i + 1, grown)
            chosen.pop()
        walk(i + 1, seen)

    walk(0, frozenset())
    return best, canon(found)


@dataclass(frozen=True)
class ConjectureReport:
    d: int
    k: int
    grid: GridSpec
    lambda_size: int
    max_size: int
    size_matches: bool
    unique_lambda_class: bool
    all_axis_parallel: bool
    verdict: str
    witness: Configuration | None
    result: SearchResult = field(repr=False)

    def summary(self) -> str:
        g = self.grid
        lines = [
            f"d={self.d} k={self.k} grid m={g.half_width} q={g.denominator} ({g.size} points)",
            f"|Lambda_{self.d}({self.k})| = {self.lambda_size}",
            f"grid maximum = {self.max_size}"
            + ("" if self.result.complete else " (lower bound only)"),
            f"classes at maximum = {len(self.result.canonical_classes)}",
            f"size matches: {self.size_matches}",
            f"unique class is Lambda: {self.unique_lambda_class}",
            f"all maxima axis-parallel: {self.all_axis_parallel}",
            f"nodes explored = {self.result.nodes_explored}",
            "note: verdict holds on this grid only, not on all of R^d",
            self.verdict,
        ]
        return "\n".join(lines)


def verify_conjecture_instance(
    d: int,
    k: int,
    g: GridSpec,
    *,
    jobs: int = 1,
    node_limit: int = DEFAULT_NODE_LIMIT,
    orderly: bool = False,
) -> ConjectureReport:
    """Compare the grid optimum for ``k`` taxicab distances with Lambda_d(k).

    Checks that the maximum equals |Lambda_d(k)|, that Lambda_d(k) is the
    only class at the maximum, and that every maximum is axis-parallel.
    """
    if g.dimension != d:
        raise ValueError(f"grid dimension {g.dimension} != d={d}")
    if not g.contains_lambda(k):
        raise GridTooSmallError(
            f"grid m={g.half_width}, q={g.denominator} cannot hold Lambda_{d}({k}); need m >= k*q"
        )
    res = max_k_distance_sets(g, k, Metric.L1, jobs=jobs, node_limit=node_limit, orderly=orderly)
    target = lambda_size_recursive(d, k)
    lam = canonicalize(generate_lambda(d, k))
    size_ok = res.max_size == target
    unique = res.canonical_classes == (lam,)
    witness = None
    axis_ok = True
    for c in res.canonical_classes:
        if len(c) >= 2 and not is_axis_parallel(c, Metric.L1):
            axis_ok = False
            witness = witness or c
    if witness is None and not unique:
        witness = next((c for c in res.canonical_classes if c != lam), None)
    if not res.complete:
        verdict = INCOMPLETE
    elif size_ok and unique and axis_ok:
        verdict = CONSISTENT
    else:
        verdict = COUNTEREXAMPLE
    return ConjectureReport(
        d, k, g, target, res.max_size, size_ok, unique, axis_ok, verdict, witness, res
    )
