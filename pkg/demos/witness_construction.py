#!/usr/bin/env python3
"""Build explicit periodic points, certified by exact arithmetic.

Starting from a periodic orbit, the library constructs interval cycles
whose coverings force new periodic points, then extracts those points by
nesting exact preimages.  Everything below is a rational number and every
period claim an exact equality.
"""

from sharkovsky_lab import (
    analyze_odd_orbit,
    connect_the_dots,
    least_period,
    loop_to_intervals,
    odd_period_witness,
    orbit_of,
    period_two_from_orbit,
    periodic_point_from_cycle,
    stefan_pattern,
)
from sharkovsky_lab.pattern_dynamics import CyclicPattern

three = CyclicPattern.from_cycle_string("1>2>3")
f = connect_the_dots(three)
orbit = orbit_of(f, 0)
print(f"realization of the 3-cycle: orbit {[str(p) for p in orbit]}")

w = period_two_from_orbit(f, orbit)
print(f"\nperiod-2 witness from the crossing construction: {w.point}")
print(f"  its orbit: {[str(p) for p in orbit_of(f, w.point)]}")

print("\nan interval cycle and the point following it:")
loop = loop_to_intervals(three, (1, 2, 2, 2))
y = periodic_point_from_cycle(f, loop, require_least_period=True)
print(f"  cycle {[str(J) for J in loop]}")
print(f"  witness {y} with orbit {[str(p) for p in orbit_of(f, y)]}")

print("\nwitnesses of every period from the period-3 orbit:")
for n in range(1, 8):
    y = odd_period_witness(f, orbit, n)
    assert least_period(f, y, n) == n
    print(f"  period {n}: {y}")

print("\nthe period-5 spiral and its analysis:")
spiral = stefan_pattern(5)
g = connect_the_dots(spiral)
sp_orbit = orbit_of(g, 0)
trace = analyze_odd_orbit(g, sp_orbit)
print(f"  pattern {spiral}  case {trace.case.value}")
print(f"  fixed point {trace.fixed_point}, escape time {trace.escape_time},"
      f" rebound time {trace.rebound_time}")
print(f"  relay points: {trace.fixed_preimage} -> {trace.lower_relay}"
      f" -> {trace.upper_relay}")
for n in (2, 4, 6, 8, 10):
    print(f"  even period {n}: witness {odd_period_witness(g, sp_orbit, n)}")
for n in (6, 7, 8):
    print(f"  long period {n}: witness {odd_period_witness(g, sp_orbit, n)}")
