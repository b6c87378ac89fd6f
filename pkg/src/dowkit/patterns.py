"""Repeat and return pattern instances, palindromes, and word-equation tools."""
from __future__ import annotations

from dataclasses import dataclass

from .insertions import InsertionKind
from .words import (
    Word,
    apply_map,
    equivalent,
    format_word,
    is_dow,
    is_equivalence_map,
    is_sow,
    reverse,
)

_KIND_TAGS = {InsertionKind.REPEAT: "rep", InsertionKind.RETURN: "ret"}


@dataclass(frozen=True)
class PatternInstance:
    """A factor u at first_start and u (repeat) or reversed(u) (return) at
    second_start, both 1-based, blocks disjoint."""

    kind: InsertionKind
    u: Word
    first_start: int
    second_start: int

    def __str__(self) -> str:
        return (
            f"{_KIND_TAGS[self.kind]}:{format_word(self.u)}"
            f"@{self.first_start},{self.second_start}"
        )


def _find_instances(w: Word, kind: InsertionKind) -> list[PatternInstance]:
    # brute force over block starts; a non-SOW prefix never becomes one, so
    # the length loop can stop early
    n = len(w)
    found = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for length in range(1, min(j - i, n - j + 1) + 1):
                u = w[i - 1 : i - 1 + length]
                if not is_sow(u):
                    break
                second = u if kind is InsertionKind.REPEAT else reverse(u)
                if w[j - 1 : j - 1 + length] == second:
                    found.append(PatternInstance(kind, u, i, j))
    found.sort(key=lambda inst: (inst.first_start, -len(inst.u), inst.second_start))
    return found


def find_repeat_words(w: Word) -> list[PatternInstance]:
    """All disjoint factor pairs u...u in a DOW, sorted by (i, -|u|, j)."""
    if not is_dow(w):
        raise ValueError(f"not a double occurrence word: {format_word(w)!r}")
    return _find_instances(w, InsertionKind.REPEAT)


def find_return_words(w: Word) -> list[PatternInstance]:
    """All disjoint factor pairs u...reversed(u) in a DOW, sorted by (i, -|u|, j)."""
    if not is_dow(w):
        raise ValueError(f"not a double occurrence word: {format_word(w)!r}")
    return _find_instances(w, InsertionKind.RETURN)


def _is_factor(u: Word, v: Word) -> bool:
    if not u:
        return True
    return any(v[i : i + len(u)] == u for i in range(len(v) - len(u) + 1))


def maximal_instances(w: Word, kind: InsertionKind) -> list[PatternInstance]:
    """Instances whose u-component is a factor of no longer component of the
    same kind in w."""
    instances = (
        find_repeat_words(w) if kind is InsertionKind.REPEAT else find_return_words(w)
    )
    components = {inst.u for inst in instances}
    maximal = {
        u
        for u in components
        if not any(u != v and _is_factor(u, v) for v in components)
    }
    return [inst for inst in instances if inst.u in maximal]


def is_palindrome(w: Word) -> bool:
    """True iff the DOW w is equivalent to its own reversal."""
    if not is_dow(w):
        raise ValueError(f"not a double occurrence word: {format_word(w)!r}")
    return equivalent(w, reverse(w))


@dataclass(frozen=True)
class LsDecomposition:
    """Split s = s1 s2 with z = f(s) ... f^(h-1)(s) f^h(s1) and
    t = f^h(s2) f^(h+1)(s1)."""

    s1: Word
    s2: Word
    h: int
    t: Word


def _iterate(f: dict[int, int], w: Word, times: int) -> Word:
    for _ in range(times):
        w = apply_map(f, w)
    return w


def ls_verify(f: dict[int, int], s: Word, z: Word) -> LsDecomposition:
    """Conjugacy-style decomposition of f(s z) = z t, checked symbol by symbol.

    Requires f injective and f(s z) to extend z; the tail t then has the
    length of s.  For h = ceil(|z| / |s|) the split point of s is
    |z| - (h - 1) |s|, and both defining equations are recomputed before the
    decomposition is returned.  Empty z degenerates to h = 0, s1 = s,
    t = f(s).
    """
    if not s:
        raise ValueError("s must be nonempty")
    if not is_equivalence_map(f):
        raise ValueError("f is not injective on its support")
    image = apply_map(f, s + z)
    if image[: len(z)] != z:
        raise ValueError("hypothesis violated: f(s z) does not extend z")
    t = image[len(z) :]
    if not z:
        return LsDecomposition(s, (), 0, t)
    h = -(-len(z) // len(s))
    split = len(z) - (h - 1) * len(s)
    s1, s2 = s[:split], s[split:]
    z_check: Word = ()
    power = s
    for _ in range(h - 1):
        power = apply_map(f, power)
        z_check += power
    z_check += _iterate(f, s1, h)
    t_check = _iterate(f, s2, h) + _iterate(f, s1, h + 1)
    if z_check != z or t_check != t:
        raise RuntimeError("decomposition recomputation failed")
    return LsDecomposition(s1, s2, h, t)


def _occurs_in(w: Word, inst: PatternInstance) -> bool:
    length = len(inst.u)
    i, j = inst.first_start, inst.second_start
    if length == 0 or j < i + length or j + length - 1 > len(w):
        return False
    second = inst.u if inst.kind is InsertionKind.REPEAT else reverse(inst.u)
    return (
        is_sow(inst.u)
        and w[i - 1 : i - 1 + length] == inst.u
        and w[j - 1 : j - 1 + length] == second
    )


def _remove_first_factor(v: Word, u: Word) -> Word:
    for i in range(len(v) - len(u) + 1):
        if v[i : i + len(u)] == u:
            return v[:i] + v[i + len(u) :]
    raise ValueError(f"{format_word(u)!r} is not a factor of {format_word(v)!r}")


def strip_common_factor(
    x_inst: PatternInstance,
    y_inst: PatternInstance,
    u: Word,
    w: Word,
) -> tuple[PatternInstance, PatternInstance]:
    """Drop a common factor u from two same-kind instances and relocate the
    reduced components in w.

    This is a checked transformation: the reduced components must reoccur as
    genuine instances of the same kind, and their absence raises rather than
    returning a fabricated instance.  A repeat instance can never be paired
    with a return instance here; beyond single symbols the two kinds share
    no nonempty component factor.
    """
    if x_inst.kind is not y_inst.kind:
        raise ValueError(
            "instances must share a kind; repeat and return components with "
            "more than one symbol have no nonempty common factor"
        )
    for inst in (x_inst, y_inst):
        if not _occurs_in(w, inst):
            raise ValueError(f"instance {inst} does not occur in {format_word(w)!r}")
    if not u:
        return (x_inst, y_inst)
    reduced = []
    for inst in (x_inst, y_inst):
        if not _is_factor(u, inst.u):
            raise ValueError(
                f"{format_word(u)!r} is not a common factor of both components"
            )
        rest = _remove_first_factor(inst.u, u)
        if not rest:
            raise ValueError("reduction would empty the instance")
        reduced.append(rest)
    pool = _find_instances(w, x_inst.kind)
    out = []
    for rest in reduced:
        match = next((inst for inst in pool if inst.u == rest), None)
        if match is None:
            raise ValueError(
                f"reduced component {format_word(rest)!r} does not occur as a "
                f"{_KIND_TAGS[x_inst.kind]} instance in {format_word(w)!r}"
            )
        out.append(match)
    return (out[0], out[1])
