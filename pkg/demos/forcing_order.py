#!/usr/bin/env python3
"""Walk through the period-forcing order on positive integers.

The order puts every number with an odd factor first (odds by size, then
2*odds, then 4*odds, ...) and the powers of two last, in descending
order.  A map with a period-m point must have points of every period
after m.
"""

from sharkovsky_lab import (
    decompose,
    forced_periods_upto,
    forces,
    sharkovsky_compare,
    sort_key,
)

head = [3, 5, 7, 9, 2 * 3, 2 * 5, 2 * 7, 4 * 3, 4 * 5, 16, 8, 4, 2, 1]
print("the head and tail of the order:")
print("  " + " < ".join(str(n) for n in head))
for a, b in zip(head, head[1:]):
    assert sharkovsky_compare(a, b).value == "precedes"

print("\neach number is placed by its dyadic decomposition n = 2^k * q:")
for n in (12, 40, 7, 64):
    key = decompose(n)
    print(f"  {n} = 2^{key.two_exponent} * {key.odd_part}  -> sort key {sort_key(n)}")

print("\nperiods forced by a few representatives, up to 20:")
for m in (3, 5, 12, 8, 2):
    print(f"  {m:>2} forces {forced_periods_upto(m, 20)}")

print("\nperiod 3 forces every period; everything forces 1:")
assert all(forces(3, n) for n in range(1, 1000))
assert all(forces(n, 1) for n in range(1, 1000))
print("  checked exhaustively up to 1000")
