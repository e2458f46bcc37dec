from __future__ import annotations

import itertools
import random

import pytest

from usigns import (
    Polygon,
    all_orderings,
    canonicalize,
    chords,
    compose_transposition,
    crosses,
    crossing_chords,
    cyclic_intervals,
    dihedral_class,
    ordering_count,
)


def test_polygon_validation():
    with pytest.raises(ValueError):
        Polygon(3)
    assert Polygon(4).chord_count == 2


@pytest.mark.parametrize(
    "n,expected",
    [
        (4, [(1, 3), (2, 4)]),
        (5, [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]),
        (
            6,
            [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)],
        ),
    ],
)
def test_chords_canonical_order(n, expected):
    assert list(chords(Polygon(n))) == expected


@pytest.mark.parametrize("n", range(4, 13))
def test_chord_count_formula(n):
    assert len(chords(Polygon(n))) == n * (n - 3) // 2


def test_crosses_examples():
    p6 = Polygon(6)
    assert crosses(p6, (1, 3), (2, 4))
    assert not crosses(p6, (1, 3), (4, 6))
    assert crosses(p6, (1, 4), (2, 6))
    # sharing an endpoint never crosses
    assert not crosses(p6, (1, 4), (2, 4))
    with pytest.raises(ValueError):
        crosses(p6, (1, 3), (1, 3))
    with pytest.raises(ValueError):
        crosses(p6, (1, 2), (2, 4))


def _interleaved(n: int, c1, c2) -> bool:
    # independent check: walk the circle from one endpoint of c1 and record
    # the order the other three endpoints appear in
    i, j = c1
    seq = []
    v = i
    for _ in range(n - 1):
        v = v % n + 1
        if v in (j, *c2):
            seq.append(v)
    return seq[0] in c2 and seq[1] == j and seq[2] in c2


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_crosses_against_interleaving(n):
    poly = Polygon(n)
    for c1, c2 in itertools.combinations(chords(poly), 2):
        expected = not set(c1) & set(c2) and _interleaved(n, c1, c2)
        assert crosses(poly, c1, c2) == expected
        assert crosses(poly, c2, c1) == expected


@pytest.mark.parametrize("n", range(4, 13))
def test_crossing_set_size(n):
    # a chord with p and q interior vertices on its two arcs crosses p*q chords
    poly = Polygon(n)
    for c in chords(poly):
        d = poly.chord_length(c)
        assert len(crossing_chords(poly, c)) == (d - 1) * (n - d - 1)


def test_canonicalize_examples():
    assert canonicalize([2, 3, 4, 5, 1]) == (1, 2, 3, 4, 5)
    assert canonicalize([1, 5, 4, 3, 2]) == (1, 2, 3, 4, 5)
    # brute force: the canonical form is the lexicographic orbit minimum
    assert canonicalize([3, 1, 4, 2, 5]) == min(dihedral_class([3, 1, 4, 2, 5]))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_canonicalize_orbit_constant(n):
    rng = random.Random(7)
    for _ in range(25):
        word = list(range(1, n + 1))
        rng.shuffle(word)
        rep = canonicalize(word)
        assert rep == min(dihedral_class(word))
        for other in dihedral_class(word):
            assert canonicalize(other) == rep
        assert canonicalize(rep) == rep


def test_canonicalize_rejects_non_permutation():
    with pytest.raises(ValueError):
        canonicalize([1, 2, 2, 4])


@pytest.mark.parametrize("n,count", [(4, 3), (5, 12), (6, 60), (8, 2520)])
def test_all_orderings_count(n, count):
    words = list(all_orderings(Polygon(n)))
    assert len(words) == count == ordering_count(Polygon(n))
    assert len(set(words)) == count
    assert all(canonicalize(w) == w for w in words)


def test_compose_transposition_examples():
    assert compose_transposition((1, 2, 3, 4, 5), 1, 3) == (3, 2, 1, 4, 5)
    assert compose_transposition((1, 4, 2, 5, 3), 4, 2) == (1, 2, 4, 5, 3)
    with pytest.raises(ValueError):
        compose_transposition((1, 2, 3, 4), 2, 2)
    with pytest.raises(ValueError):
        compose_transposition((1, 2, 3, 4), 0, 2)


def test_compose_transposition_ten_point_example():
    # six transpositions applied to the identity, right-to-left
    word = tuple(range(1, 11))
    for x, y in [(7, 8), (9, 10), (4, 6), (7, 9), (6, 8), (5, 4)]:
        word = compose_transposition(word, x, y)
    assert word == (1, 2, 3, 8, 4, 5, 6, 9, 10, 7)


def test_cyclic_intervals():
    poly = Polygon(7)
    parts = cyclic_intervals(poly, (1, 2, 3, 6, 7))
    assert parts == ((1,), (2,), (3, 4, 5), (6,), (7,))
    # wrap-around last interval
    parts = cyclic_intervals(poly, (2, 3, 6, 7))
    assert parts == ((2,), (3, 4, 5), (6,), (7, 1))
    covered = sorted(v for part in parts for v in part)
    assert covered == list(range(1, 8))
    with pytest.raises(ValueError):
        cyclic_intervals(poly, (1, 2, 3))
    with pytest.raises(ValueError):
        cyclic_intervals(poly, (1, 2, 2, 5))
