"""Words over the positive-integer alphabet and their canonical forms.

A word is a tuple of symbols from {1, 2, ...}.  A double occurrence word
(DOW) uses every symbol it mentions exactly twice; a single occurrence word
(SOW) is nonempty with pairwise distinct symbols.  Two words are equivalent
when some symbol bijection carries one to the other, and each class has a
unique representative in ascending order: scanning left to right, every
first appearance is one more than everything seen so far.
"""
from __future__ import annotations

from collections import Counter

Word = tuple[int, ...]

EMPTY_WORD: Word = ()


def is_dow(w: Word) -> bool:
    """True iff every symbol occurring in w occurs exactly twice."""
    return all(c == 2 for c in Counter(w).values())


def is_sow(w: Word) -> bool:
    """True iff w is nonempty and its symbols are pairwise distinct."""
    return len(w) > 0 and len(set(w)) == len(w)


def is_ascending(w: Word) -> bool:
    """True iff each first appearance exceeds all earlier symbols by one."""
    nxt = 1
    seen = set()
    for a in w:
        if a in seen:
            continue
        if a != nxt:
            return False
        seen.add(a)
        nxt += 1
    return True


def normalize(w: Word) -> Word:
    """Relabel symbols by order of first appearance, giving ascending order.

    Works on arbitrary words, not only DOWs.  The result is equivalent to w,
    and normalize is idempotent; two words are equivalent exactly when they
    normalize to the same tuple.
    """
    relabel: dict[int, int] = {}
    out = []
    for a in w:
        if a not in relabel:
            relabel[a] = len(relabel) + 1
        out.append(relabel[a])
    return tuple(out)


def equivalent(w1: Word, w2: Word) -> bool:
    """True iff some symbol bijection maps w1 onto w2."""
    return normalize(w1) == normalize(w2)


def reverse(w: Word) -> Word:
    return w[::-1]


def dow_size(w: Word) -> int:
    """Half the length of a DOW.  Rejects words that are not DOWs."""
    if not is_dow(w):
        raise ValueError(f"not a double occurrence word: {format_word(w)!r}")
    return len(w) // 2


def apply_map(mapping: dict[int, int], w: Word) -> Word:
    """Apply a symbol map position by position, identity off its support."""
    return tuple(mapping.get(a, a) for a in w)


def is_equivalence_map(mapping: dict[int, int]) -> bool:
    """True iff mapping is injective on its support with positive symbols.

    An injective finite map always extends to a bijection of the full
    alphabet, so this is the whole requirement.
    """
    if any(a < 1 or b < 1 for a, b in mapping.items()):
        return False
    return len(set(mapping.values())) == len(mapping)


def map_between(w1: Word, w2: Word) -> dict[int, int] | None:
    """The position-wise symbol bijection sending w1 to w2, or None."""
    if len(w1) != len(w2):
        return None
    mapping: dict[int, int] = {}
    for a, b in zip(w1, w2):
        if mapping.setdefault(a, b) != b:
            return None
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping


_COMPACT_DIGITS = frozenset("123456789")


def parse_word(text: str) -> Word:
    """Parse word text.

    Accepted forms: "" or "-" for the empty word, a compact run of digits
    1-9 (one symbol per digit), or dot-separated decimal integers such as
    "1.2.10.1.2.10".  A dotless all-digit string is read compactly whenever
    every digit is in 1-9, else as a single general-form integer.  The two
    grammars genuinely overlap on that token shape, so a one-symbol word
    like (11,) does not survive a print/parse round trip; the compact
    reading wins.
    """
    if text in ("", "-"):
        return EMPTY_WORD
    if "." in text:
        parts = text.split(".")
        if any(not p.isdigit() for p in parts):
            raise ValueError(f"malformed word text: {text!r}")
        symbols = tuple(int(p) for p in parts)
        if any(a < 1 for a in symbols):
            raise ValueError(f"symbols must be positive: {text!r}")
        return symbols
    if set(text) <= _COMPACT_DIGITS:
        return tuple(int(c) for c in text)
    if text.isdigit():
        value = int(text)
        if value < 1:
            raise ValueError(f"symbols must be positive: {text!r}")
        return (value,)
    raise ValueError(f"malformed word text: {text!r}")


def format_word(w: Word) -> str:
    """Serialize a word: compact digits when the largest symbol is at most 9,
    else dot-separated integers.  The empty word becomes the empty string."""
    if not w:
        return ""
    if max(w) <= 9:
        return "".join(str(a) for a in w)
    return ".".join(str(a) for a in w)


def all_canonical_dows(n: int) -> list[Word]:
    """All canonical DOWs of size n, sorted.  There are (2n-1)!! of them.

    Canonical DOWs of size n correspond one to one with perfect matchings
    of 2n positions: pair up positions, then label the pairs in order of
    first position, which lands exactly on ascending order.
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    words: list[Word] = []

    def fill(slots: list[int], free: list[int], label: int) -> None:
        if not free:
            words.append(tuple(slots))
            return
        first, rest = free[0], free[1:]
        for idx, partner in enumerate(rest):
            slots[first] = slots[partner] = label
            fill(slots, rest[:idx] + rest[idx + 1 :], label + 1)

    fill([0] * (2 * n), list(range(2 * n)), 1)
    words.sort()
    return words
