"""Pattern search, maximality, the palindrome test, the conjugacy-style
decomposition of a prefix equivalence, and common-factor stripping.

The find_* functions are checked against a deliberately naive position scan
written here, so the two implementations only agree if both are right.
"""
import pytest
from hypothesis import given, strategies as st

from dowkit.insertions import InsertionKind
from dowkit.patterns import (
    LsDecomposition,
    PatternInstance,
    find_repeat_words,
    find_return_words,
    is_palindrome,
    ls_verify,
    maximal_instances,
    strip_common_factor,
)
from dowkit.words import (
    all_canonical_dows,
    apply_map,
    equivalent,
    normalize,
    parse_word,
    reverse,
)

from conftest import canonical_dows

REP = InsertionKind.REPEAT
RET = InsertionKind.RETURN


def _scan_oracle(w, kind):
    # naive reference: try every (i, j, length) triple directly
    found = []
    n = len(w)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for length in range(1, min(j - i, n - j + 1) + 1):
                u = w[i - 1 : i - 1 + length]
                if len(set(u)) != length:
                    continue
                second = u if kind is REP else tuple(reversed(u))
                if w[j - 1 : j - 1 + length] == second:
                    found.append(PatternInstance(kind, u, i, j))
    found.sort(key=lambda inst: (inst.first_start, -len(inst.u), inst.second_start))
    return found


def _maximal_oracle(w, kind):
    pool = _scan_oracle(w, kind)
    out = []
    for inst in pool:
        longer = [
            other.u
            for other in pool
            if len(other.u) > len(inst.u)
        ]
        if not any(
            inst.u in (v[s : s + len(inst.u)] for s in range(len(v) - len(inst.u) + 1))
            for v in longer
        ):
            out.append(inst)
    return out


def test_find_repeat_words_examples():
    assert [str(i) for i in find_repeat_words(parse_word("1212"))] == [
        "rep:12@1,3",
        "rep:1@1,3",
        "rep:2@2,4",
    ]
    insts = find_repeat_words(parse_word("123456214365"))
    assert [len(i.u) for i in insts] == [1] * 6
    assert find_repeat_words(()) == []


def test_find_return_words_examples():
    assert [str(i) for i in find_return_words(parse_word("1221"))] == [
        "ret:12@1,3",
        "ret:1@1,4",
        "ret:2@2,3",
    ]
    big = {str(i) for i in find_return_words(parse_word("123456214365"))}
    assert {"ret:12@1,7", "ret:34@3,9", "ret:56@5,11"} <= big
    assert find_return_words(()) == []


def test_find_rejects_non_dow():
    with pytest.raises(ValueError):
        find_repeat_words(parse_word("123"))
    with pytest.raises(ValueError):
        find_return_words(parse_word("121"))


@given(canonical_dows(max_size=4))
def test_find_matches_naive_scan(w):
    assert find_repeat_words(w) == _scan_oracle(w, REP)
    assert find_return_words(w) == _scan_oracle(w, RET)


@given(canonical_dows(max_size=4))
def test_instances_reconstruct(w):
    for inst in find_repeat_words(w) + find_return_words(w):
        L = len(inst.u)
        assert w[inst.first_start - 1 : inst.first_start - 1 + L] == inst.u
        second = inst.u if inst.kind is REP else reverse(inst.u)
        assert w[inst.second_start - 1 : inst.second_start - 1 + L] == second


@given(canonical_dows(max_size=4))
def test_trivial_instances_shared(w):
    reps = {(i.u, i.first_start, i.second_start) for i in find_repeat_words(w) if len(i.u) == 1}
    rets = {(i.u, i.first_start, i.second_start) for i in find_return_words(w) if len(i.u) == 1}
    assert reps == rets


def test_maximal_instances_examples():
    assert {i.u for i in maximal_instances(parse_word("123456214365"), RET)} == {
        (1, 2),
        (3, 4),
        (5, 6),
    }
    assert {i.u for i in maximal_instances(parse_word("1122"), REP)} == {(1,), (2,)}
    assert {i.u for i in maximal_instances(parse_word("12345126734567"), REP)} == {
        (1, 2),
        (3, 4, 5),
        (6, 7),
    }


@given(canonical_dows(max_size=4), st.sampled_from([REP, RET]))
def test_maximal_matches_oracle(w, kind):
    assert maximal_instances(w, kind) == _maximal_oracle(w, kind)


@given(canonical_dows(max_size=4), st.sampled_from([REP, RET]))
def test_maximal_covers_all_instances(w, kind):
    tops = [i.u for i in maximal_instances(w, kind)]
    for inst in (find_repeat_words if kind is REP else find_return_words)(w):
        assert any(
            inst.u == v[s : s + len(inst.u)]
            for v in tops
            for s in range(len(v) - len(inst.u) + 1)
        )


def test_is_palindrome_examples():
    assert is_palindrome(parse_word("12324143"))
    assert is_palindrome(parse_word("12342143"))
    assert not is_palindrome(parse_word("123132"))
    assert is_palindrome(())
    with pytest.raises(ValueError):
        is_palindrome(parse_word("123"))


@given(canonical_dows(max_size=4))
def test_is_palindrome_is_reverse_equivalence(w):
    assert is_palindrome(w) == equivalent(w, reverse(w))


def test_mixed_components_share_no_long_factor():
    # a repeat component and a return component overlap only when one of
    # them is a single symbol
    for n in range(5):
        for w in all_canonical_dows(n):
            reps = [i.u for i in find_repeat_words(w) if len(i.u) >= 2]
            rets = [i.u for i in find_return_words(w) if len(i.u) >= 2]
            for x in reps:
                for y in rets:
                    common = set(x) & set(y)
                    assert not common, (w, x, y)


def _f_image(f, w):
    return apply_map(f, w)


def _check_decomposition(f, s, z, dec):
    # recompute both sides of the stated equations symbol by symbol
    assert dec.s1 + dec.s2 == s
    if dec.h == 0:
        # the degenerate convention: nothing of s lands inside z
        assert z == () and dec.s1 == s and dec.s2 == ()
    else:
        built_z = ()
        piece = s
        for _ in range(dec.h - 1):
            piece = _f_image(f, piece)
            built_z += piece
        head = dec.s1
        for _ in range(dec.h):
            head = _f_image(f, head)
        assert built_z + head == z
    tail = dec.s2
    for _ in range(dec.h):
        tail = _f_image(f, tail)
    tip = dec.s1
    for _ in range(dec.h + 1):
        tip = _f_image(f, tip)
    assert dec.t == tail + tip


def test_ls_verify_worked_example():
    f = {8: 1, 9: 2, 1: 3, 2: 4, 3: 5, 4: 8, 5: 9, 6: 6, 7: 7}
    s = parse_word("89")
    z = parse_word("12345")
    dec = ls_verify(f, s, z)
    assert dec == LsDecomposition((8,), (9,), 3, (8, 9))
    _check_decomposition(f, s, z, dec)


def test_ls_verify_empty_z():
    dec = ls_verify({1: 2, 2: 1}, parse_word("12"), ())
    assert dec == LsDecomposition((1, 2), (), 0, (2, 1))


def test_ls_verify_identity():
    dec = ls_verify({1: 1, 2: 2}, parse_word("12"), parse_word("12"))
    assert dec == LsDecomposition((1, 2), (), 1, (1, 2))


def test_ls_verify_rejects_bad_hypothesis():
    with pytest.raises(ValueError):
        ls_verify({1: 2, 2: 1}, parse_word("12"), parse_word("11"))
    with pytest.raises(ValueError):
        ls_verify({1: 2, 2: 1}, (), parse_word("12"))
    with pytest.raises(ValueError):
        ls_verify({1: 3, 2: 3}, parse_word("12"), parse_word("33"))


@given(st.data())
def test_ls_verify_on_constructed_instances(data):
    # build (f, s, z) that satisfy the hypothesis by construction, then
    # check the returned decomposition re-derives z and t exactly
    size = data.draw(st.integers(2, 6))
    perm = data.draw(st.permutations(list(range(1, size + 1))))
    f = {i + 1: perm[i] for i in range(size)}
    s_len = data.draw(st.integers(1, size))
    s = tuple(data.draw(st.permutations(list(range(1, size + 1))))[:s_len])
    z_len = data.draw(st.integers(0, 3 * s_len))
    image = s
    stream = ()
    while len(stream) < z_len:
        image = _f_image(f, image)
        stream += image
    z = stream[:z_len]
    dec = ls_verify(f, s, z)
    assert dec.h == -(-len(z) // len(s))
    _check_decomposition(f, s, z, dec)


def test_strip_common_factor_paths():
    w = parse_word("1231245345")
    inst = PatternInstance(REP, (1, 2), 1, 4)
    other = PatternInstance(REP, (4, 5), 6, 9)

    assert strip_common_factor(inst, other, (), w) == (inst, other)

    reduced = strip_common_factor(inst, inst, (1,), w)
    assert reduced == (PatternInstance(REP, (2,), 2, 5), PatternInstance(REP, (2,), 2, 5))

    with pytest.raises(ValueError):
        strip_common_factor(inst, other, (1,), w)  # not common to both
    with pytest.raises(ValueError):
        strip_common_factor(inst, inst, (1, 2), w)  # reduction would be empty
    with pytest.raises(ValueError):
        strip_common_factor(
            PatternInstance(REP, (1, 2, 3), 1, 4), inst, (1,), w
        )  # claimed instance does not occur
    with pytest.raises(ValueError):
        strip_common_factor(
            inst, PatternInstance(RET, (1, 2), 1, 4), (1,), w
        )  # mixed kinds


def test_strip_common_factor_requires_reduced_presence():
    w = parse_word("123123")
    inst = PatternInstance(REP, (1, 2, 3), 1, 4)
    with pytest.raises(ValueError):
        # dropping the middle symbol leaves 13, which never recurs in w
        strip_common_factor(inst, inst, (2,), w)
