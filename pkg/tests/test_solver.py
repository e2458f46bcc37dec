from __future__ import annotations

import itertools
import random

import pytest

from usigns import (
    InconsistentPatternError,
    IntransitiveOrderError,
    IterationLimitError,
    Polygon,
    SignPattern,
    all_orderings,
    canonicalize,
    is_consistent,
    map_for_ordering,
    ordering_from_sign_matrix,
    realize,
    reconstruct_sign_matrix,
    sign_of_ordering,
    solve,
    transport,
)
from usigns.points import standard_gauge

from conftest import DECAGON_NEGATIVES, PENTAGON_TABLE, consistent_bits


def test_solve_all_plus_is_identity():
    poly = Polygon(6)
    word, trace = solve(poly, SignPattern.all_plus(6))
    assert word == poly.identity_word
    assert trace.iterations == 0


def test_solve_pentagon_table():
    poly = Polygon(5)
    for expected_word, signs in PENTAGON_TABLE.items():
        word, trace = solve(poly, SignPattern.from_string(5, signs))
        assert word == canonicalize(expected_word)
        assert trace.steps == () or trace.steps[-1].pattern.is_all_plus()


def test_solve_rejects_inconsistent():
    poly = Polygon(4)
    with pytest.raises(InconsistentPatternError):
        solve(poly, SignPattern.from_string(4, "--"))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_solve_rejects_all_inconsistent_patterns(n):
    poly = Polygon(n)
    good = consistent_bits(n)
    for bits in range(1 << poly.chord_count):
        if bits not in good:
            with pytest.raises(InconsistentPatternError):
                solve(poly, SignPattern(n, bits))


def test_iteration_limit():
    poly = Polygon(5)
    with pytest.raises(IterationLimitError) as err:
        solve(poly, SignPattern.from_string(5, "-++++"), max_iterations=0)
    assert err.value.trace.iterations == 0


@pytest.mark.parametrize("n", [4, 5, 6])
def test_solve_roundtrip_exhaustive(n):
    poly = Polygon(n)
    for bits in consistent_bits(n):
        pattern = SignPattern(n, bits)
        word, trace = solve(poly, pattern)
        assert sign_of_ordering(poly, word) == pattern
        assert word == canonicalize(word)


@pytest.mark.parametrize("n", [5, 6])
def test_solve_tie_break_independent_result(n):
    poly = Polygon(n)
    for bits in consistent_bits(n):
        pattern = SignPattern(n, bits)
        w1, _ = solve(poly, pattern)
        w2, _ = solve(poly, pattern, largest_tie_break=True)
        assert w1 == w2


def test_solve_incremental_matches_from_scratch():
    # the loop transports through one transposition at a time; rebuilding the
    # full chart change from the accumulated word must agree at every step
    poly = Polygon(6)
    rng = random.Random(17)
    sample = rng.sample(sorted(consistent_bits(6)), 20)
    for bits in sample:
        pattern = SignPattern(6, bits)
        word, trace = solve(poly, pattern)
        alpha = poly.identity_word
        for step in trace.steps:
            alpha = tuple(
                {step.swap[0]: step.swap[1], step.swap[1]: step.swap[0]}.get(v, v)
                for v in alpha
            )
            assert transport(pattern, map_for_ordering(poly, alpha)) == step.pattern


def test_decagon_worked_example():
    poly = Polygon(10)
    pattern = SignPattern.from_negative_chords(10, DECAGON_NEGATIVES)
    assert is_consistent(poly, pattern)
    word, trace = solve(poly, pattern)
    assert word == canonicalize((1, 2, 3, 8, 4, 5, 6, 9, 10, 7))
    assert trace.iterations == 6
    assert [s.swap for s in trace.steps] == [
        (7, 8),
        (9, 10),
        (4, 6),
        (7, 9),
        (6, 8),
        (5, 4),
    ]
    assert trace.steps[0].chord == (6, 8)
    assert trace.steps[1].chord == (8, 10)


def test_trace_render_format():
    poly = Polygon(5)
    _, trace = solve(poly, SignPattern.from_string(5, "-++++"))
    assert trace.render() == "chord=(1,3) swap=(2,3) N=0 l=- pattern=+++++"


def _lex_key(stats_pair):
    negatives, length = stats_pair
    return (negatives, length or 0)


@pytest.mark.parametrize("n", [5, 6])
def test_trace_invariant_properties(n):
    poly = Polygon(n)
    for bits in consistent_bits(n):
        _, trace = solve(poly, SignPattern(n, bits))
        seq = trace.state_stats()
        for idx, (negatives, length) in enumerate(seq[:-1]):
            # short negative chords force a strict drop in the negative count
            if length in (2, 3):
                assert seq[idx + 1][0] < negatives
            # the (N, l) pair drops lexicographically within 2n further steps
            window = seq[idx + 1 : idx + 1 + 2 * n]
            assert any(_lex_key(state) < _lex_key(seq[idx]) for state in window)


def test_sign_matrix_identity_pattern():
    poly = Polygon(6)
    matrix = reconstruct_sign_matrix(poly, sign_of_ordering(poly, poly.identity_word))
    for i in range(1, 6):
        for j in range(i + 1, 6):
            assert matrix.sign(i, j) == -1
            assert matrix.sign(j, i) == 1
    with pytest.raises(ValueError):
        matrix.sign(2, 2)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_sign_matrix_matches_gauged_points(n):
    poly = Polygon(n)
    for word in itertools.islice(all_orderings(poly), 80):
        matrix = reconstruct_sign_matrix(poly, sign_of_ordering(poly, word))
        gauged = standard_gauge(realize(poly, word), 1, 2, n)
        for i in range(1, n):
            for j in range(i + 1, n):
                zi, zj = gauged.point(i).value(), gauged.point(j).value()
                assert matrix.sign(i, j) == (1 if zi > zj else -1)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_matrix_route_roundtrip(n):
    poly = Polygon(n)
    for word in all_orderings(poly):
        matrix = reconstruct_sign_matrix(poly, sign_of_ordering(poly, word))
        assert ordering_from_sign_matrix(poly, matrix) == word


def test_matrix_route_flags_inconsistent_patterns():
    # inconsistent input either fails the order check or disagrees with itself
    poly = Polygon(6)
    rng = random.Random(23)
    good = consistent_bits(6)
    bad = [b for b in range(1 << 9) if b not in good]
    flagged = 0
    for bits in rng.sample(bad, 200):
        pattern = SignPattern(6, bits)
        try:
            word = ordering_from_sign_matrix(poly, reconstruct_sign_matrix(poly, pattern))
        except IntransitiveOrderError:
            flagged += 1
            continue
        assert sign_of_ordering(poly, word) != pattern
        flagged += 1
    assert flagged == 200
