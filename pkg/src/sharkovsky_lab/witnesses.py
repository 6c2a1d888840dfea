"""Constructive periodic-point witnesses, certified in exact arithmetic.

Three constructions live here:

* a period-2 point from a crossed pair f(d) <= c < d <= f(c);
* a period-2 point from any orbit of period greater than 2;
* from any odd-period orbit, points of every even period and of every
  period past the orbit's own, built by chaining interval cycles and
  extracting a point that follows the chain.

Every returned point is certified by exact evaluation: the stated period
holds and no smaller one does.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import (
    EvenPeriod,
    NoLeastPeriodWitness,
    NotACycle,
    NotAnOrbit,
    PeriodTooSmall,
    PreconditionViolated,
    UnsupportedPeriodForCase,
)
from .exact_pwl import (
    DEFAULT_PIECE_BUDGET,
    Interval,
    IntervalLoop,
    Orbit,
    PwlMap,
    _compose,
    _fixed_structure,
    _level_hits,
    _restrict,
    as_fraction,
    is_orbit_of,
    least_period,
    orbit_of,
    point_of_least_period_in_lap,
)

# ---------------------------------------------------------------------------
# small exact-solving helpers on a restricted window
# ---------------------------------------------------------------------------


def _window_pairs(f: PwlMap, window: Interval):
    if window.is_degenerate:
        return None
    return _restrict(f.breakpoints, window.lo, window.hi)


def _fixed_in(f: PwlMap, window: Interval) -> tuple[Fraction, ...]:
    """Ascending fixed points of f inside the window (lap endpoints included)."""
    if window.is_degenerate:
        return (window.lo,) if f(window.lo) == window.lo else ()
    pts, _ = _fixed_structure(_window_pairs(f, window))
    return pts


def _leftmost_solution(f: PwlMap, level: Fraction, window: Interval) -> Fraction:
    """The leftmost x in the window with f(x) = level; must exist."""
    if window.is_degenerate:
        if f(window.lo) == level:
            return window.lo
        raise AssertionError(f"no solution of f = {level} in {window}")
    hits = _level_hits(_window_pairs(f, window), level)
    if not hits:
        raise AssertionError(f"no solution of f = {level} in {window}")
    return hits[0].lo


def _leftmost_period2_point(f: PwlMap, window: Interval) -> Fraction:
    """Leftmost solution of f(f(x)) = x in the window that f does not fix.

    When the solutions fill whole laps the leftmost non-fixed one may not
    be attained; in that case the representative right of the offending
    fixed point is the midpoint toward the lap's end.
    """
    square = f.iterate(2)
    if window.is_degenerate:
        y = window.lo
        if square(y) == y and f(y) != y:
            return y
        raise AssertionError(f"no period-2 point in {window}")
    pts, laps = _fixed_structure(_window_pairs(square, window))
    candidates = list(pts)
    for lap in laps:
        fixed_inside = [p for p in _fixed_in(f, lap)]
        if fixed_inside:
            # an involution lap holds at most one fixed point of f
            z = fixed_inside[0]
            if z == lap.lo and lap.hi > z:
                candidates.append((z + lap.hi) / 2)
        # lap endpoints already sit among pts
    for y in sorted(candidates):
        if f(y) != y:
            return y
    raise AssertionError(f"no period-2 point in {window}")


# ---------------------------------------------------------------------------
# period 2 from a crossed pair, and from any long orbit
# ---------------------------------------------------------------------------


class CrossingCase(enum.Enum):
    NO_FIXED_POINT_LEFT = "NoFixedPointLeft"
    FIXED_POINT_LEFT = "FixedPointLeft"


@dataclass(frozen=True)
class PeriodTwoWitness:
    """The named points of the crossed-pair construction.

    ``lower`` and ``upper`` are the crossing pair (c, d); ``first_fixed``
    is the least fixed point inside [c, d]; ``upper_preimage`` maps to d.
    When a fixed point exists left of c, ``left_fixed`` is the last one
    and ``lower_preimage`` maps to c.  ``point`` is the certified period-2
    point.
    """

    lower: Fraction
    upper: Fraction
    first_fixed: Fraction
    upper_preimage: Fraction
    point: Fraction
    case: CrossingCase
    left_fixed: Optional[Fraction] = None
    lower_preimage: Optional[Fraction] = None


def period_two_from_crossing(
    f: PwlMap, c: Fraction, d: Fraction
) -> PeriodTwoWitness:
    """A certified period-2 point whenever f(d) <= c < d <= f(c)."""
    c, d = as_fraction(c), as_fraction(d)
    dom = f.domain
    if not (dom.contains(c) and dom.contains(d)):
        raise PreconditionViolated(f"{c}, {d} must lie in {dom}")
    if not (f(d) <= c < d <= f(c)):
        raise PreconditionViolated(
            f"need f(d) <= c < d <= f(c); got f({d}) = {f(d)}, f({c}) = {f(c)}"
        )
    a = dom.lo
    first_fixed = _fixed_in(f, Interval(c, d))[0]
    upper_preimage = _leftmost_solution(f, d, Interval(c, first_fixed))

    fixed_left = () if a == c else _fixed_in(f, Interval(a, c))
    if not fixed_left:
        # f fixes nothing in [a, upper_preimage], and f^2 crosses the
        # diagonal between a and upper_preimage
        point = _leftmost_period2_point(f, Interval(a, upper_preimage))
        witness = PeriodTwoWitness(
            lower=c,
            upper=d,
            first_fixed=first_fixed,
            upper_preimage=upper_preimage,
            point=point,
            case=CrossingCase.NO_FIXED_POINT_LEFT,
        )
    else:
        left_fixed = fixed_left[-1]
        lower_preimage = _leftmost_solution(f, c, Interval(left_fixed, c))
        point = _leftmost_period2_point(
            f, Interval(lower_preimage, upper_preimage)
        )
        witness = PeriodTwoWitness(
            lower=c,
            upper=d,
            first_fixed=first_fixed,
            upper_preimage=upper_preimage,
            point=point,
            case=CrossingCase.FIXED_POINT_LEFT,
            left_fixed=left_fixed,
            lower_preimage=lower_preimage,
        )
    assert f(f(witness.point)) == witness.point and f(witness.point) != witness.point
    return witness


def _require_orbit(f: PwlMap, orbit: Orbit) -> None:
    if not is_orbit_of(f, orbit):
        raise NotAnOrbit(f"{list(orbit.points)} is not a single orbit of the map")


def _switch_rank(f: PwlMap, orbit: Orbit) -> int:
    """The 1-based rank s of the last orbit point with x < f(x)."""
    ranks = [i for i, p in enumerate(orbit.points, start=1) if f(p) > p]
    return max(ranks)


def period_two_from_orbit(f: PwlMap, orbit: Orbit) -> PeriodTwoWitness:
    """A certified period-2 point from any orbit of period at least 3.

    The last point moving right and its successor form a crossed pair.
    """
    _require_orbit(f, orbit)
    if orbit.period <= 2:
        raise PeriodTooSmall(f"need period > 2, got {orbit.period}")
    s = _switch_rank(f, orbit)
    c = orbit.points[s - 1]
    d = orbit.points[s]
    return period_two_from_crossing(f, c, d)


# ---------------------------------------------------------------------------
# a periodic point following an interval cycle
# ---------------------------------------------------------------------------


def _branch_chains(
    f: PwlMap, intervals: tuple[Interval, ...]
) -> Iterator[list[Interval]]:
    """All chains (L_0 .. L_{n-1}) with L_i in J_i and f(L_i) = L_{i+1}.

    Branches are explored leftmost-first at every level of the backward
    recursion, so the emitted order is deterministic.
    """
    n = len(intervals)

    def rec(i: int, target: Interval) -> Iterator[list[Interval]]:
        for branch in f.preimage_branches(intervals[i], target):
            if i == 0:
                yield [branch]
            else:
                for prefix in rec(i - 1, branch):
                    yield prefix + [branch]

    yield from rec(n - 1, intervals[0])


def _chain_fixed_candidates(
    f: PwlMap, chain: list[Interval], piece_budget: int
) -> tuple[tuple[Fraction, ...], tuple[Interval, ...]]:
    """Fixed points of f^n restricted along the chain's first interval."""
    first = chain[0]
    if first.is_degenerate:
        y = first.lo
        cur = y
        for _ in chain:
            cur = f(cur)
        return ((y,) if cur == y else ()), ()
    pairs = _restrict(f.breakpoints, first.lo, first.hi)
    for _ in range(len(chain) - 1):
        pairs = _compose(f.breakpoints, pairs, piece_budget)
    return _fixed_structure(pairs)


def _itinerary_holds(f: PwlMap, y: Fraction, loop: IntervalLoop) -> bool:
    cur = y
    for J in loop:
        if not J.contains(cur):
            return False
        cur = f(cur)
    return cur == y


def periodic_point_from_cycle(
    f: PwlMap,
    loop: IntervalLoop,
    require_least_period: bool = False,
    piece_budget: int = DEFAULT_PIECE_BUDGET,
) -> Fraction:
    """A point y with f^i(y) in J_i for each i and f^n(y) = y.

    The chain of intervals must be a cycle: each f(J_i) covers J_{i+1}
    cyclically.  The point is found by nesting preimage branches backward
    and solving the restricted composition exactly on the innermost
    interval.  With ``require_least_period`` the branches are explored
    depth-first until a point of least period exactly n appears; if every
    branch yields only shorter periods, :class:`NoLeastPeriodWitness` is
    raised.
    """
    n = len(loop)
    for i in range(n):
        J, K = loop[i], loop[(i + 1) % n]
        if not f.covers(J, K):
            raise NotACycle(f"f({J}) does not cover {K} at position {i}")

    for chain in _branch_chains(f, loop.intervals):
        points, laps = _chain_fixed_candidates(f, chain, piece_budget)
        for y in points:
            if not _itinerary_holds(f, y, loop):
                continue
            if not require_least_period or least_period(f, y, n) == n:
                return y
        if require_least_period:
            for lap in laps:
                rep = point_of_least_period_in_lap(f, n, lap, piece_budget)
                if rep is not None and _itinerary_holds(f, rep, loop):
                    return rep
    if require_least_period:
        raise NoLeastPeriodWitness(
            f"every branch of the length-{n} cycle has only shorter periods"
        )
    raise AssertionError("a covering cycle must yield a periodic point")


# ---------------------------------------------------------------------------
# the odd-period machinery
# ---------------------------------------------------------------------------


class TraceCase(enum.Enum):
    PERIOD_THREE = "PeriodThree"
    PRE_ESCAPE_LEFT = "PreEscapeLeft"
    PRE_ESCAPE_AT_UPPER = "PreEscapeAtUpper"
    REBOUND_ABOVE = "ReboundAbove"
    REBOUND_BELOW = "ReboundBelow"

    @property
    def yields_period_three(self) -> bool:
        return self in (
            TraceCase.PRE_ESCAPE_LEFT,
            TraceCase.PRE_ESCAPE_AT_UPPER,
            TraceCase.REBOUND_ABOVE,
        )


@dataclass(frozen=True)
class OddOrbitTrace:
    """Everything the odd-period constructions need, in analysis coordinates.

    ``switch`` is the rank s of the last orbit point moving right, so the
    switch interval [x_s, x_{s+1}] holds the fixed point.  ``straddle`` is
    the rank t of the interval left of the switch whose endpoint images
    straddle the fixed point.  ``escape_time`` is the first iterate of x_s
    landing at or below x_t; ``rebound_time`` the first iterate climbing
    back to the pre-escape point.  In the REBOUND_BELOW case the relay
    points satisfy f(fixed_preimage) = fixed_point,
    f(upper_relay) = fixed_preimage and f(lower_relay) = upper_relay.

    When ``mirrored`` is true, ``map`` and ``orbit`` are the reflections
    of the caller's originals and every field refers to the reflected
    system; witnesses are reflected back by the callers.
    """

    map: PwlMap
    orbit: Orbit
    switch: int
    straddle: int
    escape_time: int
    fixed_point: Fraction
    case: TraceCase
    mirrored: bool
    rebound_time: Optional[int] = None
    fixed_preimage: Optional[Fraction] = None
    upper_relay: Optional[Fraction] = None
    lower_relay: Optional[Fraction] = None

    @property
    def period(self) -> int:
        return self.orbit.period

    def point(self, rank: int) -> Fraction:
        return self.orbit.points[rank - 1]

    def switch_iterate(self, i: int) -> Fraction:
        cur = self.point(self.switch)
        for _ in range(i):
            cur = self.map(cur)
        return cur


def _reflect_map(f: PwlMap) -> PwlMap:
    dom = f.domain
    total = dom.lo + dom.hi
    return PwlMap([(total - x, total - y) for x, y in reversed(f.breakpoints)])


def _reflect_orbit(f: PwlMap, orbit: Orbit) -> Orbit:
    dom = f.domain
    total = dom.lo + dom.hi
    return Orbit(tuple(total - p for p in orbit.points))


def _analyze_oriented(
    f: PwlMap, orbit: Orbit, mirrored: bool
) -> Optional[OddOrbitTrace]:
    pts = orbit.points
    m = len(pts)
    s = _switch_rank(f, orbit)
    x_s, x_s1 = pts[s - 1], pts[s]
    fixed = _fixed_in(f, Interval(x_s, x_s1))
    z = fixed[0]

    def on_left(p: Fraction) -> bool:
        v = f(p)
        if v <= x_s:
            return True
        assert v >= x_s1, "orbit values cannot enter the switch gap"
        return False

    straddles = [
        t
        for t in range(1, s)
        if on_left(pts[t - 1]) != on_left(pts[t])
    ]
    if not straddles:
        return None
    t = max(straddles)
    x_t = pts[t - 1]

    its = [x_s]
    for _ in range(m):
        its.append(f(its[-1]))
    q = next(i for i in range(1, m + 1) if its[i] <= x_t)
    assert 2 <= q <= m - 1, f"escape time {q} out of range for period {m}"

    kwargs = dict(
        map=f,
        orbit=orbit,
        switch=s,
        straddle=t,
        escape_time=q,
        fixed_point=z,
        mirrored=mirrored,
    )
    if m == 3:
        return OddOrbitTrace(case=TraceCase.PERIOD_THREE, **kwargs)

    pre_escape = its[q - 1]
    if pre_escape < x_s:
        assert pre_escape >= pts[t]
        return OddOrbitTrace(case=TraceCase.PRE_ESCAPE_LEFT, **kwargs)
    if pre_escape == x_s1:
        return OddOrbitTrace(case=TraceCase.PRE_ESCAPE_AT_UPPER, **kwargs)

    rebound = next(i for i in range(1, q) if its[i] >= pre_escape)
    pre_rebound = its[rebound - 1]
    assert pts[t] <= pre_rebound < pre_escape
    if pre_rebound >= x_s1:
        return OddOrbitTrace(
            case=TraceCase.REBOUND_ABOVE, rebound_time=rebound, **kwargs
        )

    assert pre_rebound <= x_s
    fixed_preimage = _leftmost_solution(f, z, Interval(x_t, pts[t]))
    upper_relay = _leftmost_solution(f, fixed_preimage, Interval(z, pre_escape))
    lower_relay = _leftmost_solution(f, upper_relay, Interval(pre_rebound, z))
    return OddOrbitTrace(
        case=TraceCase.REBOUND_BELOW,
        rebound_time=rebound,
        fixed_preimage=fixed_preimage,
        upper_relay=upper_relay,
        lower_relay=lower_relay,
        **kwargs,
    )


def analyze_odd_orbit(f: PwlMap, orbit: Orbit) -> OddOrbitTrace:
    """Classify an odd-period orbit for the forcing constructions.

    The analysis prefers a straddle interval left of the switch interval;
    when only right-side straddles exist the whole problem is reflected
    (x -> lo + hi - x) and the trace marked ``mirrored``.
    """
    _require_orbit(f, orbit)
    if orbit.period % 2 == 0:
        raise EvenPeriod(f"need an odd period, got {orbit.period}")
    if orbit.period < 3:
        raise PeriodTooSmall("need period >= 3")
    trace = _analyze_oriented(f, orbit, mirrored=False)
    if trace is None:
        reflected = _reflect_map(f)
        trace = _analyze_oriented(
            reflected, _reflect_orbit(f, orbit), mirrored=True
        )
        assert trace is not None, "reflection must expose a left straddle"
    return trace


def forcing_cycle(trace: OddOrbitTrace, n: int) -> IntervalLoop:
    """The interval cycle whose witness realizes period n for this trace.

    PERIOD_THREE traces accept every n >= 1.  The three period-3 cases
    accept only n = 3 (all other periods then flow through the period-3
    machinery).  REBOUND_BELOW accepts every even n >= 2 and every
    n >= period + 1.
    """
    if n < 1:
        raise ValueError("period must be >= 1")
    pts = trace.orbit.points
    s, t = trace.switch, trace.straddle
    z = trace.fixed_point
    switch_iv = Interval(pts[s - 1], pts[s])
    straddle_iv = Interval(pts[t - 1], pts[t])
    case = trace.case

    if case is TraceCase.PERIOD_THREE:
        loop = (
            [switch_iv]
            if n == 1
            else [straddle_iv] + [switch_iv] * (n - 1)
        )
    elif case is TraceCase.PRE_ESCAPE_LEFT:
        if n != 3:
            raise UnsupportedPeriodForCase(f"this trace only builds n = 3, not {n}")
        pre_escape = trace.switch_iterate(trace.escape_time - 1)
        a = Interval(pts[t - 1], pre_escape)
        b = Interval(pre_escape, z)
        loop = [a, b, b]
    elif case is TraceCase.PRE_ESCAPE_AT_UPPER:
        if n != 3:
            raise UnsupportedPeriodForCase(f"this trace only builds n = 3, not {n}")
        loop = [Interval(z, pts[s]), straddle_iv, switch_iv]
    elif case is TraceCase.REBOUND_ABOVE:
        if n != 3:
            raise UnsupportedPeriodForCase(f"this trace only builds n = 3, not {n}")
        pre_escape = trace.switch_iterate(trace.escape_time - 1)
        pre_rebound = trace.switch_iterate(trace.rebound_time - 1)
        a = Interval(pre_rebound, pre_escape)
        b = Interval(z, pre_rebound)
        loop = [a, b, b]
    else:  # REBOUND_BELOW
        m = trace.period
        u = trace.fixed_preimage
        w = trace.upper_relay
        v = trace.lower_relay
        uv = Interval(u, v)
        zw = Interval(z, w)
        vz = Interval(v, z)
        if n == 2:
            loop = [uv, zw]
        elif n % 2 == 0:
            loop = [uv] + [zw, vz] * ((n - 2) // 2) + [zw]
        elif n >= m + 1:
            q, k = trace.escape_time, trace.rebound_time
            rungs = [
                Interval.between(z, trace.switch_iterate(i)) for i in range(q)
            ]
            loop = (
                rungs[:k]
                + [rungs[q - 1], straddle_iv]
                + [switch_iv] * (n - k - 2)
            )
        else:
            raise UnsupportedPeriodForCase(
                f"period {n} is neither even nor past {m}; not forced this way"
            )

    cycle = IntervalLoop(tuple(loop))
    for i in range(len(cycle)):
        J, K = cycle[i], cycle[(i + 1) % len(cycle)]
        if not trace.map.covers(J, K):
            raise NotACycle(
                f"internal covering check failed at position {i}: "
                f"f({J}) misses {K}; this is a bug"
            )
    return cycle


def odd_period_witness(
    f: PwlMap,
    orbit: Orbit,
    n: int,
    piece_budget: int = DEFAULT_PIECE_BUDGET,
) -> Fraction:
    """A certified point of least period exactly n forced by an odd orbit.

    Valid n: every even n >= 2, every n >= period + 1, and any n >= 1
    when the analysis reaches a period-3 orbit (which forces everything).
    """
    trace = analyze_odd_orbit(f, orbit)
    y = _witness_from_trace(trace, n, piece_budget)
    if trace.mirrored:
        dom = f.domain
        y = dom.lo + dom.hi - y
    assert least_period(f, y, n) == n
    return y


def _witness_from_trace(
    trace: OddOrbitTrace, n: int, piece_budget: int
) -> Fraction:
    if trace.case is TraceCase.PERIOD_THREE:
        return periodic_point_from_cycle(
            trace.map,
            forcing_cycle(trace, n),
            require_least_period=True,
            piece_budget=piece_budget,
        )
    if trace.case.yields_period_three:
        seed = periodic_point_from_cycle(
            trace.map,
            forcing_cycle(trace, 3),
            require_least_period=True,
            piece_budget=piece_budget,
        )
        return odd_period_witness(
            trace.map, orbit_of(trace.map, seed), n, piece_budget
        )
    return periodic_point_from_cycle(
        trace.map,
        forcing_cycle(trace, n),
        require_least_period=True,
        piece_budget=piece_budget,
    )
