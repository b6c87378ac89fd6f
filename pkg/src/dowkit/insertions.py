"""Repeat and return insertions at 1-based split positions.

An insertion adds a fresh block u of nu new symbols twice into a DOW w,
once before position k and once (forward for repeat, reversed for return)
before position ell of the original word.  Writing w = z1 z2 z3 with
|z1| = k - 1 and |z1 z2| = ell - 1, the results are z1 u z2 u z3 and
z1 u z2 reversed(u) z3.  With k == ell the blocks land adjacent.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .words import Word, format_word, is_ascending, is_dow, normalize, reverse


class InsertionKind(Enum):
    REPEAT = "rho"
    RETURN = "tau"


@dataclass(frozen=True)
class InsertionSpec:
    """One insertion: kind, inserted length nu >= 1, positions 1 <= k <= ell."""

    kind: InsertionKind
    nu: int
    k: int
    ell: int

    def __post_init__(self) -> None:
        if self.nu < 1:
            raise ValueError("nu must be >= 1")
        if not 1 <= self.k <= self.ell:
            raise ValueError(f"need 1 <= k <= ell, got k={self.k}, ell={self.ell}")

    @property
    def trivial(self) -> bool:
        """Insertions of a single symbol; repeat and return coincide there."""
        return self.nu == 1

    def __str__(self) -> str:
        return f"{self.kind.value}({self.nu},{self.k},{self.ell})"


def rho(nu: int, k: int, ell: int) -> InsertionSpec:
    return InsertionSpec(InsertionKind.REPEAT, nu, k, ell)


def tau(nu: int, k: int, ell: int) -> InsertionSpec:
    return InsertionSpec(InsertionKind.RETURN, nu, k, ell)


_SPEC_RE = re.compile(r"(rho|tau)\((\d+),(\d+),(\d+)\)\Z")


def parse_spec(text: str) -> InsertionSpec:
    """Parse 'rho(NU,K,L)' or 'tau(NU,K,L)'."""
    m = _SPEC_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed insertion spec: {text!r}")
    kind = InsertionKind.REPEAT if m.group(1) == "rho" else InsertionKind.RETURN
    return InsertionSpec(kind, int(m.group(2)), int(m.group(3)), int(m.group(4)))


def inserted_sow(w: Word, nu: int) -> Word:
    """The fresh ascending block of nu symbols following the largest in w."""
    if nu < 1:
        raise ValueError("nu must be >= 1")
    top = max(w, default=0)
    return tuple(range(top + 1, top + nu + 1))


def insert(w: Word, spec: InsertionSpec) -> Word:
    """Perform one insertion into a DOW given in ascending order.

    Strict about its input: w must be a DOW, must be in ascending order, and
    spec.ell can be at most len(w) + 1.  The result is a DOW again but is
    generally not in ascending order.
    """
    if not is_dow(w):
        raise ValueError(f"not a double occurrence word: {format_word(w)!r}")
    if not is_ascending(w):
        raise ValueError(f"word not in ascending order: {format_word(w)!r}")
    if spec.ell > len(w) + 1:
        raise ValueError(f"spec {spec} out of range for word of length {len(w)}")
    u = inserted_sow(w, spec.nu)
    second = u if spec.kind is InsertionKind.REPEAT else reverse(u)
    k, ell = spec.k, spec.ell
    return w[: k - 1] + u + w[k - 1 : ell - 1] + second + w[ell - 1 :]


def insert_normalized(w: Word, spec: InsertionSpec) -> Word:
    """Convenience wrapper: canonicalize w first, then insert."""
    return insert(normalize(w), spec)


def insertions_equal(w: Word, s1: InsertionSpec, s2: InsertionSpec) -> bool:
    """Equality of two nontrivial insertions for w.

    Two insertions are equal when their results are equivalent and they use
    identical positions (k, ell); equivalent results at different positions
    make a pair of distinct equivalent insertions, not equal ones.
    """
    if s1.trivial or s2.trivial:
        raise ValueError("insertion equality is defined for nontrivial insertions")
    return (s1.k, s1.ell) == (s2.k, s2.ell) and normalize(insert(w, s1)) == normalize(
        insert(w, s2)
    )


def reverse_spec(spec: InsertionSpec, n: int) -> InsertionSpec:
    """The spec realizing the mirrored insertion on the reversed word.

    For a word of length n, reversing w and inserting at (n - ell + 2,
    n - k + 2) yields a word equivalent to the reversal of inserting at
    (k, ell) into w.
    """
    if spec.ell > n + 1:
        raise ValueError(f"spec {spec} out of range for word of length {n}")
    return InsertionSpec(spec.kind, spec.nu, n - spec.ell + 2, n - spec.k + 2)


class PairPositionType(Enum):
    INTERLEAVING = "Interleaving"
    NESTED = "Nested"
    SEQUENTIAL = "Sequential"


def classify_positions(s1: InsertionSpec, s2: InsertionSpec) -> PairPositionType:
    """Relative index pattern of an ordered spec pair (requires s1.k < s2.k).

    Interleaving: k1 < k2 <= ell1 < ell2.  Nested: k1 < k2 <= ell2 < ell1.
    Sequential: k1 <= ell1 < k2 <= ell2.  The leftover arrangement
    k1 < k2 <= ell1 = ell2 belongs to no named class and is rejected, as are
    unordered pairs.
    """
    if s1.k >= s2.k:
        raise ValueError(f"pair must be ordered with k1 < k2, got {s1} and {s2}")
    if s1.ell < s2.k:
        return PairPositionType.SEQUENTIAL
    if s1.ell < s2.ell:
        return PairPositionType.INTERLEAVING
    if s2.ell < s1.ell:
        return PairPositionType.NESTED
    raise ValueError(
        f"unclassifiable index pattern for {s1} and {s2}: k1 < k2 <= ell1 = ell2"
    )
