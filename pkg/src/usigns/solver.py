"""From a consistent sign pattern to its dihedral ordering.

Two independent routes:

* ``solve`` walks the pattern to the all-plus orthant: repeatedly pick the
  shortest negative chord of the current chart's pattern, swap the two labels
  sitting just inside it, and transport the pattern through that chart
  change. For consistent input the walk terminates and the accumulated word
  is the ordering whose component carries the input pattern.

* ``reconstruct_sign_matrix`` + ``ordering_from_sign_matrix`` instead rebuild
  the pairwise order of the underlying points directly from the pattern by a
  double recursion, then sort.

Each solve call is pure and independent; transposition chart changes are
memoized per (n, p, q).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ngon import Polygon, canonicalize, compose_transposition
from .monomial import map_for_transposition
from .patterns import SignPattern, stats
from .relations import is_consistent
from .signs import _transport_bits


class InconsistentPatternError(ValueError):
    """The input pattern contradicts an extended u-relation."""


class IntransitiveOrderError(ValueError):
    """The reconstructed pairwise signs do not form a strict total order."""


@dataclass(frozen=True)
class TraceStep:
    chord: tuple[int, int]  # oriented (a, b), positions in the chart before the swap
    swap: tuple[int, int]  # the two labels exchanged
    pattern: SignPattern  # pattern after the swap, in the new chart
    negatives: int
    min_length: int | None

    def render(self) -> str:
        a, b = self.chord
        x, y = self.swap
        length = "-" if self.min_length is None else str(self.min_length)
        return (
            f"chord=({a},{b}) swap=({x},{y}) N={self.negatives} "
            f"l={length} pattern={self.pattern}"
        )


@dataclass(frozen=True)
class SolverTrace:
    initial: SignPattern
    steps: tuple[TraceStep, ...]

    @property
    def iterations(self) -> int:
        return len(self.steps)

    def state_stats(self) -> tuple[tuple[int, int | None], ...]:
        """(negatives, shortest length) for the initial and every later state."""
        return (stats(self.initial),) + tuple(
            (s.negatives, s.min_length) for s in self.steps
        )

    def render(self) -> str:
        return "\n".join(step.render() for step in self.steps)


class IterationLimitError(RuntimeError):
    """Safety net tripped; for consistent input this signals a bug."""

    def __init__(self, message: str, trace: SolverTrace):
        super().__init__(message)
        self.trace = trace


@lru_cache(maxsize=None)
def _transposition_table(n: int, p: int, q: int) -> tuple[tuple[int, int], ...]:
    return map_for_transposition(Polygon(n), p, q).transport_table()


def _pick_negative(pattern: SignPattern, largest: bool) -> tuple[int, int]:
    """Oriented shortest negative chord; ties broken lexicographically
    (or reverse-lexicographically, to probe tie-break independence)."""
    poly = Polygon(pattern.n)
    best: tuple[int, int, int] | None = None
    for c in pattern.negatives():
        i, j = c
        d = poly.chord_length(c)
        if j - i == d:
            a, b = i, j
        else:
            a, b = j, poly.wrap(j + d)
        key = (d, -a, -b) if largest else (d, a, b)
        if best is None or key < best:
            best = key
    assert best is not None
    return abs(best[1]), abs(best[2])


def default_iteration_bound(n: int) -> int:
    return 4 * n**3


def solve(
    poly: Polygon,
    pattern: SignPattern,
    *,
    max_iterations: int | None = None,
    largest_tie_break: bool = False,
) -> tuple[tuple[int, ...], SolverTrace]:
    """Canonical dihedral ordering whose component carries ``pattern``.

    The input must be consistent (checked up front); the returned trace
    records every transposition. The iteration bound is a safety net only,
    termination for consistent input is guaranteed.
    """
    if pattern.n != poly.n:
        raise ValueError(f"pattern is for n={pattern.n}, polygon has n={poly.n}")
    if not is_consistent(poly, pattern):
        raise InconsistentPatternError(
            f"pattern {pattern} contradicts an extended u-relation"
        )
    bound = default_iteration_bound(poly.n) if max_iterations is None else max_iterations
    word = poly.identity_word
    current = pattern
    steps: list[TraceStep] = []
    while not current.is_all_plus():
        if len(steps) >= bound:
            raise IterationLimitError(
                f"no all-plus pattern within {bound} iterations",
                SolverTrace(pattern, tuple(steps)),
            )
        a, b = _pick_negative(current, largest_tie_break)
        p = poly.wrap(a + 1)
        q = b
        x, y = word[p - 1], word[q - 1]
        word = compose_transposition(word, x, y)
        current = SignPattern(
            poly.n, _transport_bits(current.bits, _transposition_table(poly.n, p, q))
        )
        negatives, min_length = stats(current)
        steps.append(TraceStep((a, b), (x, y), current, negatives, min_length))
    return canonicalize(word), SolverTrace(pattern, tuple(steps))


@dataclass(frozen=True)
class SignMatrix:
    """Signs of z_i - z_j for 1 <= i < j <= n under the 0/1/infinity gauge.

    The last column is forced negative (z_n plays infinity) and (1,2) is
    forced negative (z_1 = 0 < 1 = z_2).
    """

    n: int
    entries: tuple[int, ...]  # row-major over pairs i < j

    @staticmethod
    def _pair_index(n: int, i: int, j: int) -> int:
        # pairs (i, j), i < j, ordered lexicographically
        return (i - 1) * n - i * (i - 1) // 2 + j - i - 1

    def sign(self, i: int, j: int) -> int:
        """sgn(z_i - z_j); antisymmetric in its arguments."""
        if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"need two distinct labels in 1..{self.n}")
        if i < j:
            return self.entries[self._pair_index(self.n, i, j)]
        return -self.entries[self._pair_index(self.n, j, i)]


def reconstruct_sign_matrix(poly: Polygon, pattern: SignPattern) -> SignMatrix:
    """Pairwise point-order signs recovered from a chord sign pattern.

    Row 1 walks forward along chords into the infinite point; each later row
    is filled downward in j from the known boundary column, using the chord
    {i-1, j} whose sign couples four matrix entries. Always produces a
    matrix; whether it is a strict total order is the caller's check.
    """
    if pattern.n != poly.n:
        raise ValueError(f"pattern is for n={pattern.n}, polygon has n={poly.n}")
    n = poly.n
    P: dict[tuple[int, int], int] = {(1, 2): -1}
    for k in range(1, n):
        P[(k, n)] = -1
    for j in range(3, n):
        P[(1, j)] = P[(1, j - 1)] * pattern.sign((j - 1, n))
    for i in range(2, n - 1):
        for j in range(n - 1, i, -1):
            P[(i, j)] = (
                pattern.sign(poly.chord(i - 1, j))
                * P[(i - 1, j + 1)]
                * P[(i - 1, j)]
                * P[(i, j + 1)]
            )
    entries = tuple(
        P[(i, j)] for i in range(1, n + 1) for j in range(i + 1, n + 1)
    )
    return SignMatrix(n, entries)


def ordering_from_sign_matrix(poly: Polygon, matrix: SignMatrix) -> tuple[int, ...]:
    """Sort labels 1..n-1 by the matrix comparison, append n, canonicalize.

    Raises IntransitiveOrderError unless the matrix is a strict total order
    on 1..n-1 (it always is when the pattern was realizable).
    """
    if matrix.n != poly.n:
        raise ValueError(f"matrix is for n={matrix.n}, polygon has n={poly.n}")
    n = poly.n
    labels = range(1, n)
    rank = {
        i: sum(1 for j in labels if j != i and matrix.sign(j, i) < 0) for i in labels
    }
    if sorted(rank.values()) != list(range(n - 1)):
        raise IntransitiveOrderError(f"comparison ranks {rank} are not a total order")
    order = sorted(labels, key=rank.__getitem__)
    for a in range(n - 1):
        for b in range(a + 1, n - 1):
            if matrix.sign(order[a], order[b]) != -1:
                raise IntransitiveOrderError(
                    f"labels {order[a]} and {order[b]} violate transitivity"
                )
    return canonicalize(tuple(order) + (n,))
