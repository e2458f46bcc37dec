from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from usigns import Polygon, SignPattern, consistent_patterns
from usigns.points import PointConfig

# the twelve ordering/pattern pairs of the pentagon, signs over
# (u13, u14, u24, u25, u35)
PENTAGON_TABLE = {
    (1, 2, 3, 4, 5): "+++++",
    (1, 3, 2, 4, 5): "-++++",
    (1, 5, 2, 3, 4): "+-+++",
    (1, 2, 4, 3, 5): "++-++",
    (1, 3, 4, 5, 2): "+++-+",
    (1, 2, 3, 5, 4): "++++-",
    (1, 5, 3, 2, 4): "--+++",
    (1, 5, 2, 4, 3): "+--++",
    (1, 4, 3, 5, 2): "++--+",
    (1, 3, 5, 4, 2): "+++--",
    (1, 3, 2, 5, 4): "-+++-",
    (1, 4, 2, 5, 3): "-----",
}

# unique consistent decagon pattern matching the worked ten-point example
DECAGON_NEGATIVES = ((3, 7), (3, 8), (6, 8), (6, 10), (7, 10))


@lru_cache(maxsize=None)
def consistent_bits(n: int, primitive_only: bool = False) -> frozenset[int]:
    poly = Polygon(n)
    return frozenset(
        p.bits for p in consistent_patterns(poly, primitive_only=primitive_only)
    )


def label_chord(word, a: int, b: int) -> tuple[int, int]:
    """Positional chord of the chart of ``word`` holding labels a and b."""
    pos = {lbl: k + 1 for k, lbl in enumerate(word)}
    i, j = sorted((pos[a], pos[b]))
    return (i, j)


def relabel_pattern(pattern: SignPattern, vertex_map) -> SignPattern:
    """Push a pattern through a vertex relabeling (chord {i,j} -> images)."""
    poly = Polygon(pattern.n)
    bits = 0
    for k, (i, j) in enumerate(poly.chords):
        if pattern.bits >> k & 1:
            c = poly.chord(vertex_map(i), vertex_map(j))
            bits |= 1 << poly.chord_index[c]
    return SignPattern(pattern.n, bits)


def rotate_pattern(pattern: SignPattern, shift: int) -> SignPattern:
    poly = Polygon(pattern.n)
    return relabel_pattern(pattern, lambda v: poly.wrap(v + shift))


def reflect_pattern(pattern: SignPattern) -> SignPattern:
    n = pattern.n
    return relabel_pattern(pattern, lambda v: n + 1 - v)


def random_config(rng: random.Random, n: int, with_infinity: bool = False) -> PointConfig:
    """n distinct random rational points, optionally one at infinity."""
    values: list = []
    seen = set()
    while len(values) < n:
        v = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        if v not in seen:
            seen.add(v)
            values.append(v)
    if with_infinity:
        values[rng.randrange(n)] = "inf"
    return PointConfig.from_values(values)
