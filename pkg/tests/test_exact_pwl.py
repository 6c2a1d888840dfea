"""Exact map representation, enumeration, and preimage machinery."""

import random
from fractions import Fraction as F

import pytest

from sharkovsky_lab import (
    BadClampBounds,
    Interval,
    NonMonotoneBreakpoints,
    NotAnOrbit,
    NotCovering,
    NotSelfMap,
    Orbit,
    OutOfDomain,
    PieceBudgetExceeded,
    PwlMap,
    fixed_points_of_iterate,
    is_orbit_of,
    least_period,
    orbit_of,
    periodic_orbits,
    point_of_least_period_in_lap,
    tent_map,
)

TENT = tent_map()
IDENTITY = PwlMap([(0, 0), (1, 1)])
NEG = PwlMap([(0, 1), (1, 0)])  # x -> 1 - x
THREE_CYCLE = PwlMap([(0, F(1, 2)), (F(1, 2), 1), (1, 0)])


def mobius(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


class TestConstruction:
    def test_tent_breakpoints(self):
        assert TENT.breakpoints == ((F(0), F(0)), (F(1, 2), F(1)), (F(1), F(0)))

    def test_accepts_strings_and_ints(self):
        f = PwlMap([("0", "0"), ("1/2", "1"), ("1", "0")])
        assert f == TENT

    def test_collinear_breakpoints_merge(self):
        f = PwlMap([(0, 0), (F(1, 2), F(1, 2)), (1, 1)])
        assert f == IDENTITY

    def test_non_monotone_rejected(self):
        with pytest.raises(NonMonotoneBreakpoints):
            PwlMap([(0, 0), (1, 1), (F(1, 2), 0)])
        with pytest.raises(NonMonotoneBreakpoints):
            PwlMap([(0, 0), (0, 1)])

    def test_too_few_breakpoints_rejected(self):
        with pytest.raises(NonMonotoneBreakpoints):
            PwlMap([(0, 0)])

    def test_escaping_value_rejected(self):
        with pytest.raises(NotSelfMap):
            PwlMap([(0, 0), (1, 2)])

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            PwlMap([(0, 0), (0.5, 1), (1, 0)])


class TestEval:
    def test_tent_values(self):
        assert TENT(F(1, 3)) == F(2, 3)
        assert TENT(F(1, 2)) == 1
        assert TENT(F(3, 4)) == F(1, 2)

    def test_identity(self):
        assert IDENTITY(F(5, 7)) == F(5, 7)

    def test_breakpoints_hit_exactly(self):
        for x, y in THREE_CYCLE.breakpoints:
            assert THREE_CYCLE(x) == y

    def test_out_of_domain(self):
        with pytest.raises(OutOfDomain):
            TENT(F(3, 2))
        with pytest.raises(OutOfDomain):
            TENT(F(-1, 2))


class TestIterate:
    def test_tent_square_has_five_breakpoints(self):
        square = TENT.iterate(2)
        assert len(square.breakpoints) == 5
        assert [x for x, _ in square.breakpoints] == [
            F(0), F(1, 4), F(1, 2), F(3, 4), F(1)
        ]

    def test_first_iterate_is_the_map(self):
        assert TENT.iterate(1) == TENT

    def test_identity_is_idempotent(self):
        assert IDENTITY.iterate(9) == IDENTITY

    def test_semigroup_identities_at_random_rationals(self):
        rng = random.Random(7)
        f2 = THREE_CYCLE.iterate(2)
        f3 = THREE_CYCLE.iterate(3)
        f5 = THREE_CYCLE.iterate(5)
        f6_nested = f2.iterate(3)  # (f^2)^3 = f^6
        f6 = THREE_CYCLE.iterate(6)
        for _ in range(100):
            x = F(rng.randrange(0, 1001), 1000)
            assert f5(x) == f2(f3(x)) == f3(f2(x))
            assert f6_nested(x) == f6(x)

    def test_piece_budget(self):
        with pytest.raises(PieceBudgetExceeded):
            TENT.iterate(8, piece_budget=10)

    def test_invalid_count(self):
        with pytest.raises(ValueError):
            TENT.iterate(0)


class TestImageAndCovers:
    def test_monotone_lap(self):
        assert TENT.image(Interval(0, F(1, 2))) == Interval(0, 1)

    def test_interior_maximum(self):
        assert TENT.image(Interval(F(1, 4), F(3, 4))) == Interval(F(1, 2), 1)

    def test_identity_image(self):
        assert IDENTITY.image(Interval(F(1, 5), F(2, 5))) == Interval(F(1, 5), F(2, 5))

    def test_degenerate_image(self):
        assert TENT.image(Interval(F(1, 3), F(1, 3))) == Interval(F(2, 3), F(2, 3))

    def test_image_matches_refined_minmax(self):
        rng = random.Random(11)
        g = TENT.iterate(3)
        for _ in range(50):
            a = F(rng.randrange(0, 500), 1000)
            b = a + F(rng.randrange(1, 500), 1000)
            J = Interval(a, b)
            xs = [a, b] + [x for x, _ in g.breakpoints if a < x < b]
            vals = [g(x) for x in xs]
            assert g.image(J) == Interval(min(vals), max(vals))

    def test_covers(self):
        assert TENT.covers(Interval(0, F(1, 2)), Interval(F(1, 2), 1))
        assert not IDENTITY.covers(Interval(0, F(1, 2)), Interval(F(1, 2), 1))
        assert not TENT.covers(Interval(0, F(1, 4)), Interval(F(3, 4), 1))

    def test_covers_degenerate_target_is_membership(self):
        assert TENT.covers(Interval(0, F(1, 2)), Interval(F(1, 3), F(1, 3)))
        assert not TENT.covers(Interval(0, F(1, 8)), Interval(F(1, 2), F(1, 2)))


class TestPreimageBranches:
    def test_two_full_laps(self):
        branches = TENT.preimage_branches(Interval(0, 1), Interval(0, 1))
        assert branches == [Interval(0, F(1, 2)), Interval(F(1, 2), 1)]

    def test_single_branch(self):
        branches = TENT.preimage_branches(Interval(0, F(1, 2)), Interval(F(1, 2), 1))
        assert branches == [Interval(F(1, 4), F(1, 2))]

    def test_identity_branch(self):
        J = Interval(F(1, 3), F(2, 3))
        assert IDENTITY.preimage_branches(J, J) == [J]

    def test_not_covering(self):
        with pytest.raises(NotCovering):
            TENT.preimage_branches(Interval(0, F(1, 4)), Interval(F(3, 4), 1))

    def test_four_monotone_branches_of_the_square(self):
        square = TENT.iterate(2)
        K = Interval(F(1, 4), F(3, 4))
        branches = square.preimage_branches(Interval(0, 1), K)
        assert branches == [
            Interval(F(1, 16), F(3, 16)),
            Interval(F(5, 16), F(7, 16)),
            Interval(F(9, 16), F(11, 16)),
            Interval(F(13, 16), F(15, 16)),
        ]
        for L in branches:
            assert square.image(L) == K

    def test_plateau_branches_cover_the_component(self):
        clamped = TENT.clamp(F(1, 4), F(3, 4))
        K = Interval(F(1, 4), F(3, 4))
        branches = clamped.preimage_branches(Interval(0, 1), K)
        assert branches == [Interval(0, F(5, 8)), Interval(F(3, 8), 1)]
        for L in branches:
            assert clamped.image(L) == K
        # the two branches cover every point mapping into K
        assert branches[0].lo == 0 and branches[1].hi == 1
        assert branches[1].lo <= branches[0].hi

    def test_degenerate_target_components(self):
        clamped = TENT.clamp(0, F(1, 2))
        hits = clamped.preimage_branches(Interval(0, 1), Interval(F(1, 2), F(1, 2)))
        assert hits == [Interval(F(1, 4), F(3, 4))]

    def test_completeness_on_strictly_interior_targets(self):
        # for tent iterates with K strictly inside (0, 1), every lap is a
        # full monotone sweep, so each component of {f(x) in K} maps onto
        # K and must be swallowed by the branches
        g = TENT.iterate(3)
        K = Interval(F(3, 10), F(7, 10))
        branches = g.preimage_branches(Interval(0, 1), K)
        assert len(branches) == 8  # one monotone branch per lap
        for a, b in zip(branches, branches[1:]):
            assert a.hi < b.lo
        step = F(1, 1000)
        x = F(0)
        while x <= 1:
            if K.contains(g(x)):
                assert any(L.contains(x) for L in branches), x
            x += step

    def test_soundness_on_random_windows(self):
        rng = random.Random(13)
        g = TENT.iterate(3)
        J = Interval(0, 1)
        for _ in range(40):
            a = F(rng.randrange(0, 900), 1000)
            b = a + F(rng.randrange(50, 100), 1000)
            K = Interval(a, b)
            if not g.covers(J, K):
                continue
            for L in g.preimage_branches(J, K):
                assert g.image(L) == K
                assert g(L.lo) in (K.lo, K.hi) and g(L.hi) in (K.lo, K.hi)
                assert g(L.lo) != g(L.hi)


class TestFixedPoints:
    def test_tent_base_cases(self):
        assert list(fixed_points_of_iterate(TENT, 1)) == [0, F(2, 3)]
        assert list(fixed_points_of_iterate(TENT, 2)) == [
            0, F(2, 5), F(2, 3), F(4, 5)
        ]

    @pytest.mark.parametrize("k", range(1, 11))
    def test_closed_form_oracle(self, k):
        # On each dyadic lap the k-th iterate is x -> +/- 2^k x + even,
        # so its fixed points are the 2m/(2^k +/- 1) family.
        plus = {F(2 * m, 2**k + 1) for m in range(2 ** (k - 1) + 1)}
        minus = {F(2 * m, 2**k - 1) for m in range(2 ** (k - 1))}
        expected = sorted(plus | minus)
        assert list(fixed_points_of_iterate(TENT, k)) == expected
        assert len(expected) == 2**k

    def test_identity_lap_flagged(self):
        fps = fixed_points_of_iterate(NEG, 2)
        assert fps.has_continuum
        assert fps.identity_laps == (Interval(0, 1),)
        assert list(fps) == [0, 1]

    def test_tent_never_flags(self):
        assert not fixed_points_of_iterate(TENT, 6).has_continuum


class TestPeriodicOrbits:
    def test_tent_period_two(self):
        census = periodic_orbits(TENT, 2)
        assert [list(o) for o in census] == [[F(2, 5), F(4, 5)]]
        assert not census.continuum

    def test_tent_period_three_ordered_by_minimum(self):
        census = periodic_orbits(TENT, 3)
        assert [list(o) for o in census] == [
            [F(2, 9), F(4, 9), F(8, 9)],
            [F(2, 7), F(4, 7), F(6, 7)],
        ]

    def test_identity_has_no_period_two(self):
        census = periodic_orbits(IDENTITY, 2)
        assert len(census) == 0
        assert not census.continuum

    def test_reflection_carries_a_continuum_of_period_two(self):
        census = periodic_orbits(NEG, 2)
        assert [list(o) for o in census] == [[0, 1]]
        assert census.continuum == (Interval(0, 1),)

    def test_orbit_points_cycle_exactly(self):
        for k in (2, 3, 4, 5):
            for orbit in periodic_orbits(TENT, k):
                assert is_orbit_of(TENT, orbit)
                for p in orbit:
                    assert least_period(TENT, p, k) == k

    @pytest.mark.parametrize("k", range(1, 13))
    def test_mobius_orbit_count_identity(self, k):
        count = len(periodic_orbits(TENT, k))
        expected = sum(
            mobius(k // d) * 2**d for d in range(1, k + 1) if k % d == 0
        )
        assert k * count == expected


class TestContinuumExtraction:
    def test_representative_for_the_reflection(self):
        rep = point_of_least_period_in_lap(NEG, 2, Interval(0, 1))
        assert rep is not None
        assert least_period(NEG, rep, 2) == 2

    def test_exhausted_lap_returns_none(self):
        # every point of the reflection has period 1 or 2, never 4
        assert point_of_least_period_in_lap(NEG, 4, Interval(0, 1)) is None

    def test_identity_lap_period_one(self):
        assert point_of_least_period_in_lap(IDENTITY, 1, Interval(0, 1)) == 0


class TestClamp:
    def test_truncation_has_exact_plateaus(self):
        clamped = TENT.clamp(F(2, 7), F(6, 7))
        assert clamped.breakpoints == (
            (F(0), F(2, 7)),
            (F(1, 7), F(2, 7)),
            (F(3, 7), F(6, 7)),
            (F(4, 7), F(6, 7)),
            (F(6, 7), F(2, 7)),
            (F(1), F(2, 7)),
        )

    def test_noop_bounds(self):
        assert TENT.clamp(0, 1) == TENT
        dom = THREE_CYCLE.domain
        assert THREE_CYCLE.clamp(dom.lo, dom.hi) == THREE_CYCLE

    def test_bad_bounds(self):
        with pytest.raises(BadClampBounds):
            TENT.clamp(F(3, 4), F(1, 4))
        with pytest.raises(BadClampBounds):
            TENT.clamp(F(-1, 2), 1)


class TestOrbits:
    def test_orbit_of_periodic_point(self):
        orbit = orbit_of(TENT, F(2, 7))
        assert list(orbit) == [F(2, 7), F(4, 7), F(6, 7)]
        assert orbit.period == 3
        assert orbit.diameter == F(4, 7)

    def test_preperiodic_point_rejected(self):
        with pytest.raises(NotAnOrbit):
            orbit_of(TENT, F(1, 2))  # 1/2 -> 1 -> 0 -> 0

    def test_duplicate_points_rejected(self):
        with pytest.raises(NotAnOrbit):
            Orbit((F(1, 2), F(1, 2)))

    def test_is_orbit_of(self):
        assert is_orbit_of(TENT, Orbit((F(2, 5), F(4, 5))))
        assert not is_orbit_of(TENT, Orbit((F(2, 5), F(3, 5))))
        # a proper subset of a 3-cycle of the square is not an orbit
        square = TENT.iterate(2)
        assert not is_orbit_of(square, Orbit((F(2, 7), F(4, 7))))
