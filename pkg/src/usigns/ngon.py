"""Combinatorics of the labeled n-gon.

Vertices are labeled 1..n around the polygon; all vertex arithmetic is mod n
mapped back into 1..n. A chord is an unordered pair of non-adjacent vertices,
stored canonically as (i, j) with i < j. The lexicographic order on canonical
chords is the global serialization order used by sign patterns.

A dihedral ordering is a word (a permutation of 1..n) considered up to the 2n
rotations and reflections. The canonical representative starts with 1 and has
its second entry smaller than its last.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

Chord = tuple[int, int]


@dataclass(frozen=True)
class Polygon:
    """The cyclically labeled n-gon, n >= 4, with cached chord tables."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 4:
            raise ValueError(f"need at least 4 vertices, got n={self.n}")

    @cached_property
    def chords(self) -> tuple[Chord, ...]:
        """All chords in lexicographic (i, j) order."""
        n = self.n
        out = [
            (i, j)
            for i in range(1, n - 1)
            for j in range(i + 2, n + 1)
            if (i, j) != (1, n)
        ]
        assert len(out) == n * (n - 3) // 2
        return tuple(out)

    @cached_property
    def chord_index(self) -> dict[Chord, int]:
        return {c: k for k, c in enumerate(self.chords)}

    @property
    def chord_count(self) -> int:
        return self.n * (self.n - 3) // 2

    def wrap(self, v: int) -> int:
        """Map an integer to the vertex label in 1..n."""
        return (v - 1) % self.n + 1

    def chord(self, a: int, b: int) -> Chord:
        """Canonical form of the chord between vertices a and b."""
        a, b = self.wrap(a), self.wrap(b)
        if a > b:
            a, b = b, a
        if (a, b) not in self.chord_index:
            raise ValueError(f"({a},{b}) is not a chord of the {self.n}-gon")
        return (a, b)

    def is_chord(self, a: int, b: int) -> bool:
        a, b = self.wrap(a), self.wrap(b)
        return (min(a, b), max(a, b)) in self.chord_index

    def chord_length(self, c: Chord) -> int:
        """Cyclic distance between the endpoints, in 2..n//2."""
        i, j = self.chord(*c)
        return min(j - i, self.n - (j - i))

    @cached_property
    def identity_word(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))


def chords(poly: Polygon) -> tuple[Chord, ...]:
    """Chords of the n-gon in the canonical (lexicographic) order."""
    return poly.chords


def crosses(poly: Polygon, c1: Chord, c2: Chord) -> bool:
    """Whether two distinct chords cross in the planar drawing.

    True iff one endpoint of c2 lies strictly inside each of the two open
    arcs cut out by c1; chords sharing an endpoint never cross.
    """
    c1 = poly.chord(*c1)
    c2 = poly.chord(*c2)
    if c1 == c2:
        raise ValueError("crossing is only defined for distinct chords")
    i, j = c1
    k, l = c2
    if k in c1 or l in c1:
        return False
    k_inside = i < k < j
    l_inside = i < l < j
    return k_inside != l_inside


def crossing_chords(poly: Polygon, c: Chord) -> tuple[Chord, ...]:
    """All chords crossing c, in canonical order."""
    c = poly.chord(*c)
    return tuple(d for d in poly.chords if d != c and crosses(poly, c, d))


def _check_permutation(word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(word)
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise ValueError(f"{word!r} is not a permutation of 1..{n}")
    return word


def canonicalize(word: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of the dihedral class of a word.

    Rotate label 1 to the front, then reflect if the second entry exceeds
    the last. Idempotent and constant on each dihedral orbit.

    >>> canonicalize([2, 3, 4, 5, 1])
    (1, 2, 3, 4, 5)
    >>> canonicalize([1, 5, 4, 3, 2])
    (1, 2, 3, 4, 5)
    """
    word = _check_permutation(word)
    i = word.index(1)
    word = word[i:] + word[:i]
    if len(word) >= 3 and word[1] > word[-1]:
        word = (word[0],) + tuple(reversed(word[1:]))
    return word


def dihedral_class(word: Sequence[int]) -> set[tuple[int, ...]]:
    """All 2n rotations/reflections of a word."""
    word = _check_permutation(word)
    n = len(word)
    out = set()
    rev = tuple(reversed(word))
    for w in (word, rev):
        for r in range(n):
            out.add(w[r:] + w[:r])
    return out


def all_orderings(poly: Polygon) -> Iterator[tuple[int, ...]]:
    """All (n-1)!/2 canonical dihedral orderings, lexicographically."""
    rest = range(2, poly.n + 1)
    for p in itertools.permutations(rest):
        if p[0] < p[-1]:
            yield (1,) + p


def ordering_count(poly: Polygon) -> int:
    """(n-1)!/2, the number of dihedral orderings."""
    count = 1
    for k in range(2, poly.n):
        count *= k
    return count // 2


def compose_transposition(word: Sequence[int], x: int, y: int) -> tuple[int, ...]:
    """Left-compose the label transposition (x y) onto a word.

    Returns the word with the entries holding labels x and y swapped.

    >>> compose_transposition((1, 2, 3, 4, 5), 1, 3)
    (3, 2, 1, 4, 5)
    >>> compose_transposition((1, 4, 2, 5, 3), 4, 2)
    (1, 2, 4, 5, 3)
    """
    word = tuple(word)
    n = len(word)
    if x == y or not (1 <= x <= n and 1 <= y <= n):
        raise ValueError(f"invalid transposition ({x} {y}) for n={n}")
    swap = {x: y, y: x}
    return tuple(swap.get(v, v) for v in word)


def cyclic_intervals(poly: Polygon, cuts: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Split 1..n into k cyclic intervals at k >= 4 increasing cut points.

    Interval m runs from cuts[m] to cuts[m+1]-1; the last wraps around to
    cuts[0]-1. Intervals are nonempty, disjoint, and cover 1..n.
    """
    cuts = tuple(cuts)
    n = poly.n
    if len(cuts) < 4:
        raise ValueError("need at least 4 cut points")
    if list(cuts) != sorted(set(cuts)) or cuts[0] < 1 or cuts[-1] > n:
        raise ValueError(f"cut points must be strictly increasing in 1..{n}")
    out = []
    for m, a in enumerate(cuts):
        b = cuts[(m + 1) % len(cuts)]
        size = (b - a) % n
        out.append(tuple(poly.wrap(a + t) for t in range(size)))
    return tuple(out)
