"""Wire formats: "p/q" rationals, JSON maps and orbits.

Rationals serialize as "p/q" with "/q" omitted for integers, which is
exactly ``str(Fraction)``.  A map serializes as
``{"breakpoints": [["0", "0"], ["1/2", "1"], ["1", "0"]]}`` and an orbit
as its ascending "p/q" list.  Every emitted value re-parses to an equal
one.
"""

from __future__ import annotations

from fractions import Fraction

from .exact_pwl import Orbit, PwlMap, as_fraction

SCHEMA = "sharkovsky-lab/1"


def format_rational(value: Fraction) -> str:
    return str(as_fraction(value))


def parse_rational(text: str) -> Fraction:
    return as_fraction(text)


def pwlmap_to_obj(f: PwlMap) -> dict:
    return {
        "breakpoints": [
            [format_rational(x), format_rational(y)] for x, y in f.breakpoints
        ]
    }


def pwlmap_from_obj(obj: dict) -> PwlMap:
    return PwlMap([(parse_rational(x), parse_rational(y)) for x, y in obj["breakpoints"]])


def orbit_to_list(orbit: Orbit) -> list[str]:
    return [format_rational(p) for p in orbit.points]


def orbit_from_list(values: list[str]) -> Orbit:
    return Orbit(tuple(parse_rational(v) for v in values))
