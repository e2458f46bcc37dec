"""Sign patterns over the chords of an n-gon.

A sign pattern assigns + or - to every chord, i.e. it picks an orthant of the
ambient space of the dihedral embedding. Patterns are backed by an integer
bitmask in the canonical chord order (bit set = negative), which keeps the
brute-force enumeration and the solver's sign transports cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .ngon import Chord, Polygon


@dataclass(frozen=True)
class SignPattern:
    """Signs over chords(n) in canonical order; bit set means negative."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        m = Polygon(self.n).chord_count
        if not 0 <= self.bits < (1 << m):
            raise ValueError(f"bits out of range for {m} chords")

    @classmethod
    def all_plus(cls, n: int) -> "SignPattern":
        return cls(n, 0)

    @classmethod
    def all_minus(cls, n: int) -> "SignPattern":
        return cls(n, (1 << Polygon(n).chord_count) - 1)

    @classmethod
    def from_string(cls, n: int, s: str) -> "SignPattern":
        """Parse '+'/'-' characters in canonical chord order."""
        m = Polygon(n).chord_count
        if len(s) != m or set(s) - {"+", "-"}:
            raise ValueError(
                f"pattern must be {m} characters over '+'/'-', got {s!r}"
            )
        bits = 0
        for k, ch in enumerate(s):
            if ch == "-":
                bits |= 1 << k
        return cls(n, bits)

    @classmethod
    def from_signs(cls, n: int, signs: Iterable[int]) -> "SignPattern":
        """Build from an iterable of +1/-1 in canonical chord order."""
        return cls.from_string(n, "".join("+" if s > 0 else "-" for s in signs))

    @classmethod
    def from_negative_chords(cls, n: int, negatives: Iterable[Chord]) -> "SignPattern":
        poly = Polygon(n)
        bits = 0
        for c in negatives:
            bits |= 1 << poly.chord_index[poly.chord(*c)]
        return cls(n, bits)

    def __len__(self) -> int:
        return Polygon(self.n).chord_count

    def __str__(self) -> str:
        m = Polygon(self.n).chord_count
        return "".join("-" if self.bits >> k & 1 else "+" for k in range(m))

    def is_negative(self, c: Chord) -> bool:
        poly = Polygon(self.n)
        return bool(self.bits >> poly.chord_index[poly.chord(*c)] & 1)

    def sign(self, c: Chord) -> int:
        """+1 or -1 for one chord."""
        return -1 if self.is_negative(c) else 1

    def negatives(self) -> tuple[Chord, ...]:
        poly = Polygon(self.n)
        return tuple(c for k, c in enumerate(poly.chords) if self.bits >> k & 1)

    def negative_count(self) -> int:
        return self.bits.bit_count()

    def is_all_plus(self) -> bool:
        return self.bits == 0


def stats(pattern: SignPattern) -> tuple[int, int | None]:
    """(number of negative chords, length of the shortest one or None).

    This is the invariant pair the ordering solver drives down.
    """
    poly = Polygon(pattern.n)
    negatives = pattern.negatives()
    if not negatives:
        return 0, None
    return len(negatives), min(poly.chord_length(c) for c in negatives)


def shortest_negative(pattern: SignPattern) -> tuple[int, int]:
    """Oriented shortest negative chord (a, b) with b == a + length mod n.

    The orientation runs along the short arc a -> a+1 -> ... -> b; when both
    arcs tie (length n/2) the orientation with the smaller first endpoint is
    used. Ties between chords are broken lexicographically on (a, b).
    """
    poly = Polygon(pattern.n)
    n = pattern.n
    best: tuple[int, int, int] | None = None
    for c in pattern.negatives():
        i, j = c
        d = poly.chord_length(c)
        if j - i == d:
            a, b = i, j
        else:
            a, b = j, poly.wrap(j + d)
        key = (d, a, b)
        if best is None or key < best:
            best = key
    if best is None:
        raise ValueError("pattern has no negative chord")
    return best[1], best[2]
