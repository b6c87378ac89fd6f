"""Constructors for the structured word families.

gen_int(h, nu) interleaves h return blocks: x1 .. xh x1R .. xhR.
gen_nes(h, nu) nests h repeat blocks: x1 .. xh xh .. x1.
gen_tangled grows a cord by repeated insertions near the end of the word.
All three produce canonical DOWs.
"""
from __future__ import annotations

from functools import lru_cache

from .insertions import InsertionKind, InsertionSpec, insert
from .words import Word, normalize


@lru_cache(maxsize=None)
def gen_int(h: int, nu: int) -> Word:
    if h < 1 or nu < 1:
        raise ValueError("need h >= 1 and nu >= 1")
    blocks = [tuple(range(i * nu + 1, (i + 1) * nu + 1)) for i in range(h)]
    head = tuple(a for block in blocks for a in block)
    tail = tuple(a for block in blocks for a in reversed(block))
    return head + tail


@lru_cache(maxsize=None)
def gen_nes(h: int, nu: int) -> Word:
    if h < 1 or nu < 1:
        raise ValueError("need h >= 1 and nu >= 1")
    blocks = [tuple(range(i * nu + 1, (i + 1) * nu + 1)) for i in range(h)]
    head = tuple(a for block in blocks for a in block)
    tail = tuple(a for block in reversed(blocks) for a in block)
    return head + tail


@lru_cache(maxsize=None)
def gen_tangled(sigma: InsertionKind, nu: int, m: int, level: int) -> Word:
    """Tangled cord: a seed plus `level` insertions pinned m symbols from the end.

    The repeat flavor seeds with 1..m 1..m and iterates repeat insertions at
    positions (len - m + 1, len + 1); the return flavor needs nu to divide m,
    seeds with gen_int(m // nu, nu), and iterates return insertions at the
    same positions.  m = 0 seeds from the empty word, and level 0 returns
    the seed itself.  Each step is renormalized, which is a no-op on these
    words but keeps the insertion precondition explicit.
    """
    if nu < 1:
        raise ValueError("nu must be >= 1")
    if m < 0 or level < 0:
        raise ValueError("m and level must be nonnegative")
    if sigma is InsertionKind.RETURN and m % nu != 0:
        raise ValueError("return-flavor tangled cords need nu to divide m")
    if m == 0:
        w: Word = ()
    elif sigma is InsertionKind.REPEAT:
        w = tuple(range(1, m + 1)) * 2
    else:
        w = gen_int(m // nu, nu)
    for _ in range(level):
        w = normalize(w)
        w = insert(w, InsertionSpec(sigma, nu, len(w) - m + 1, len(w) + 1))
    return normalize(w)
