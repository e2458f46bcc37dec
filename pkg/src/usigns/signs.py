"""Transport of sign patterns through chart changes.

A point with chord signs s in the target chart has, for every source chord,
the sign of its monomial image: the map's own sign times the parity of the
negative values raised to odd exponents. That orthant bookkeeping links
dihedral orderings to sign patterns: each ordering corresponds to the unique
standard-chart pattern whose transport into that ordering's chart is the
all-plus orthant.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .ngon import Polygon, _check_permutation
from .monomial import MonomialMap, _elementary_images, _sort_positions
from .patterns import SignPattern


def _transport_bits(bits: int, table: tuple[tuple[int, int], ...]) -> int:
    out = 0
    for idx, (neg, mask) in enumerate(table):
        if neg ^ ((bits & mask).bit_count() & 1):
            out |= 1 << idx
    return out


def transport(pattern: SignPattern, m: MonomialMap) -> SignPattern:
    """Pull a target-chart sign pattern back to the map's source chart."""
    if pattern.n != m.n:
        raise ValueError(f"pattern is for n={pattern.n}, map for n={m.n}")
    return SignPattern(m.n, _transport_bits(pattern.bits, m.transport_table()))


@lru_cache(maxsize=None)
def _elementary_table(n: int, k: int) -> tuple[tuple[int, int], ...]:
    poly = Polygon(n)
    table = []
    for mono in _elementary_images(poly, k):
        mask = 0
        for c, e in mono.powers:
            if e & 1:
                mask |= 1 << poly.chord_index[c]
        table.append((1 if mono.sign < 0 else 0, mask))
    return tuple(table)


def sign_of_ordering(poly: Polygon, word: Sequence[int]) -> SignPattern:
    """The standard-chart sign pattern of the component ordered by ``word``.

    This is the unique pattern whose transport through the chart change of
    ``word`` is all-plus. Elementary chart changes are involutive, so the
    pattern is obtained by pushing all-plus forward through the word's
    sorting sequence one adjacent swap at a time; the result depends only on
    the dihedral class of the word.
    """
    word = _check_permutation(word)
    if len(word) != poly.n:
        raise ValueError(f"word has length {len(word)}, polygon has n={poly.n}")
    bits = 0
    for k in _sort_positions(word):
        bits = _transport_bits(bits, _elementary_table(poly.n, k))
    return SignPattern(poly.n, bits)
