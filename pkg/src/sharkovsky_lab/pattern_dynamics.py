"""Combinatorial patterns of periodic orbits and their covering graphs.

A pattern is the cyclic permutation induced by a periodic orbit on its
points ordered spatially.  Its canonical realization is the
connect-the-dots interpolant on equally spaced points, whose consecutive
point intervals form the nodes of a directed covering graph; closed walks
of that graph are interval cycles, and each interval cycle forces a
periodic point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from . import witnesses
from .errors import (
    InvalidPattern,
    NoLeastPeriodWitness,
    NotAWalk,
    NotOddPeriod,
    PieceBudgetExceeded,
    WalkBudgetExceeded,
)
from .exact_pwl import (
    DEFAULT_PIECE_BUDGET,
    Interval,
    IntervalLoop,
    PwlMap,
    connect_the_dots_points,
    periodic_orbits,
)

DEFAULT_WALK_BUDGET = 1_000_000


@dataclass(frozen=True)
class CyclicPattern:
    """A single m-cycle on spatial ranks 1..m, as the one-line map i -> sigma(i)."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        mapping = tuple(int(v) for v in self.mapping)
        m = len(mapping)
        if m < 2:
            raise InvalidPattern("a pattern needs at least two points")
        if sorted(mapping) != list(range(1, m + 1)):
            raise InvalidPattern(f"{mapping} is not a permutation of 1..{m}")
        seen = set()
        cur = 1
        while cur not in seen:
            seen.add(cur)
            cur = mapping[cur - 1]
        if len(seen) != m:
            raise InvalidPattern(f"{mapping} is not a single {m}-cycle")
        object.__setattr__(self, "mapping", mapping)

    @property
    def size(self) -> int:
        return len(self.mapping)

    def image(self, i: int) -> int:
        return self.mapping[i - 1]

    def mirror(self) -> "CyclicPattern":
        """The spatially reflected pattern."""
        m = self.size
        return CyclicPattern(
            tuple(m + 1 - self.mapping[m - i] for i in range(1, m + 1))
        )

    def cycle_string(self) -> str:
        """One-line cycle notation starting from rank 1, e.g. '1>3>2'."""
        parts = [1]
        cur = self.image(1)
        while cur != 1:
            parts.append(cur)
            cur = self.image(cur)
        return ">".join(str(p) for p in parts)

    @classmethod
    def from_cycle_string(cls, text: str) -> "CyclicPattern":
        """Parse '1>3>2' style notation: each rank maps to the next, wrapping."""
        try:
            ranks = [int(tok) for tok in text.split(">")]
        except ValueError as exc:
            raise InvalidPattern(f"cannot parse cycle notation {text!r}") from exc
        m = len(ranks)
        if sorted(ranks) != list(range(1, m + 1)):
            raise InvalidPattern(f"{text!r} must list each of 1..{m} exactly once")
        mapping = [0] * m
        for a, b in zip(ranks, ranks[1:] + ranks[:1]):
            mapping[a - 1] = b
        return cls(tuple(mapping))

    def __str__(self) -> str:
        return self.cycle_string()


def all_patterns(m: int) -> Iterator[CyclicPattern]:
    """Every cyclic pattern on m points ((m-1)! of them), deterministic order."""
    import itertools

    for rest in itertools.permutations(range(2, m + 1)):
        ranks = (1,) + rest
        mapping = [0] * m
        for a, b in zip(ranks, ranks[1:] + ranks[:1]):
            mapping[a - 1] = b
        yield CyclicPattern(tuple(mapping))


def random_pattern(m: int, rng: random.Random) -> CyclicPattern:
    ranks = [1] + rng.sample(range(2, m + 1), m - 1)
    mapping = [0] * m
    for a, b in zip(ranks, ranks[1:] + ranks[:1]):
        mapping[a - 1] = b
    return CyclicPattern(tuple(mapping))


def connect_the_dots(pattern: CyclicPattern) -> PwlMap:
    """The canonical realization on equally spaced points (i-1)/(m-1).

    Its breakpoint set is a periodic orbit whose spatial type is the
    pattern itself.
    """
    m = pattern.size
    xs = connect_the_dots_points(m)
    return PwlMap([(xs[i - 1], xs[pattern.image(i) - 1]) for i in range(1, m + 1)])


@dataclass(frozen=True)
class MarkovGraph:
    """Directed covering graph on the m-1 consecutive-point intervals."""

    node_count: int
    edges: frozenset[tuple[int, int]]

    def successors(self, i: int) -> list[int]:
        return sorted(j for (a, j) in self.edges if a == i)

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def to_dot(self) -> str:
        lines = ["digraph covering {"]
        for i, j in sorted(self.edges):
            lines.append(f"  {i} -> {j};")
        lines.append("}")
        return "\n".join(lines)


def markov_graph(pattern: CyclicPattern) -> MarkovGraph:
    """Edge (i, j) exactly when the i-th interval's image spans the j-th."""
    m = pattern.size
    edges = set()
    for i in range(1, m):
        a = pattern.image(i)
        b = pattern.image(i + 1)
        lo, hi = min(a, b), max(a, b)
        for j in range(lo, hi):
            edges.add((i, j))
    return MarkovGraph(m - 1, frozenset(edges))


def _least_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def iter_closed_walks(graph: MarkovGraph, n: int) -> Iterator[tuple[int, ...]]:
    """Closed walks of length n, one canonical representative per rotation class.

    Representatives are the lexicographically least rotations, produced in
    ascending order.
    """
    if n < 1:
        raise ValueError("walk length must be >= 1")
    succ = {i: graph.successors(i) for i in range(1, graph.node_count + 1)}

    def extend(start: int, path: list[int]) -> Iterator[tuple[int, ...]]:
        if len(path) == n:
            if graph.has_edge(path[-1], start):
                walk = tuple(path)
                if walk == _least_rotation(walk):
                    yield walk
            return
        for nxt in succ[path[-1]]:
            if nxt >= start:
                path.append(nxt)
                yield from extend(start, path)
                path.pop()

    for start in range(1, graph.node_count + 1):
        yield from extend(start, [start])


def closed_walks(
    graph: MarkovGraph, n: int, walk_budget: int = DEFAULT_WALK_BUDGET
) -> list[tuple[int, ...]]:
    """All closed walks of length n up to rotation, deterministic order."""
    out = []
    for walk in iter_closed_walks(graph, n):
        out.append(walk)
        if len(out) > walk_budget:
            raise WalkBudgetExceeded(
                f"more than {walk_budget} closed walks of length {n}"
            )
    return out


def _node_interval(pattern: CyclicPattern, node: int) -> Interval:
    xs = connect_the_dots_points(pattern.size)
    return Interval(xs[node - 1], xs[node])


def loop_to_intervals(pattern: CyclicPattern, walk: tuple[int, ...]) -> IntervalLoop:
    """Relabel a closed walk as the interval cycle of the realization."""
    graph = markov_graph(pattern)
    if not walk:
        raise NotAWalk("empty walk")
    for node in walk:
        if not (1 <= node <= graph.node_count):
            raise NotAWalk(f"node {node} outside 1..{graph.node_count}")
    for a, b in zip(walk, walk[1:] + walk[:1]):
        if not graph.has_edge(a, b):
            raise NotAWalk(f"missing edge {a} -> {b}")
    return IntervalLoop(tuple(_node_interval(pattern, node) for node in walk))


def _realized_direct(
    f: PwlMap, k: int, piece_budget: int
) -> bool:
    census = periodic_orbits(f, k, piece_budget)
    return bool(census.orbits) or bool(census.continuum)


def _realized_by_walks(
    pattern: CyclicPattern,
    f: PwlMap,
    graph: MarkovGraph,
    k: int,
    piece_budget: int,
    walk_budget: int,
) -> bool:
    if k == pattern.size:
        return True  # the pattern's own orbit
    tried = 0
    for walk in iter_closed_walks(graph, k):
        tried += 1
        if tried > walk_budget:
            raise WalkBudgetExceeded(
                f"more than {walk_budget} closed walks of length {k}"
            )
        loop = IntervalLoop(tuple(_node_interval(pattern, node) for node in walk))
        try:
            witnesses.periodic_point_from_cycle(
                f, loop, require_least_period=True, piece_budget=piece_budget
            )
            return True
        except NoLeastPeriodWitness:
            continue
    return False


def realized_periods(
    pattern: CyclicPattern,
    upto: int,
    method: str = "auto",
    piece_budget: int = DEFAULT_PIECE_BUDGET,
    walk_budget: int = DEFAULT_WALK_BUDGET,
) -> set[int]:
    """Least periods k <= upto realized by the pattern's canonical realization.

    Two independent routes are available: "direct" enumerates the periodic
    points of the k-th iterate; "walks" searches closed walks of the
    covering graph and certifies a least-period witness along each.
    "auto" uses the direct route per period and falls back to walks when
    the piece budget is hit; "both" runs the two and insists they agree.
    """
    if method not in {"auto", "direct", "walks", "both"}:
        raise ValueError(f"unknown method {method!r}")
    f = connect_the_dots(pattern)
    graph = markov_graph(pattern)
    realized = set()
    for k in range(1, upto + 1):
        if method == "direct":
            hit = _realized_direct(f, k, piece_budget)
        elif method == "walks":
            hit = _realized_by_walks(
                pattern, f, graph, k, piece_budget, walk_budget
            )
        elif method == "both":
            direct = _realized_direct(f, k, piece_budget)
            walked = _realized_by_walks(
                pattern, f, graph, k, piece_budget, walk_budget
            )
            if direct != walked:
                raise AssertionError(
                    f"spectrum routes disagree at period {k} for {pattern}: "
                    f"direct={direct} walks={walked}"
                )
            hit = direct
        else:
            try:
                hit = _realized_direct(f, k, piece_budget)
            except PieceBudgetExceeded:
                hit = _realized_by_walks(
                    pattern, f, graph, k, piece_budget, walk_budget
                )
        if hit:
            realized.add(k)
    return realized


def stefan_pattern(m: int) -> CyclicPattern:
    """The canonical odd-period spiral, center point moving right first.

    Starting from the middle rank c, successive images alternate sides of
    c at strictly increasing distance: c, c+1, c-1, c+2, c-2, ...
    """
    if m < 3 or m % 2 == 0:
        raise NotOddPeriod(f"need an odd period >= 3, got {m}")
    c = (m + 1) // 2
    order = [c]
    for step in range(1, c):
        order.append(c + step)
        order.append(c - step)
    mapping = [0] * m
    for a, b in zip(order, order[1:] + order[:1]):
        mapping[a - 1] = b
    return CyclicPattern(tuple(mapping))


def is_stefan_pattern(pattern: CyclicPattern) -> bool:
    """True for the two mirror spirals of the pattern's (odd) period."""
    m = pattern.size
    if m < 3 or m % 2 == 0:
        raise NotOddPeriod(f"need an odd period >= 3, got {m}")
    spiral = stefan_pattern(m)
    return pattern in (spiral, spiral.mirror())
