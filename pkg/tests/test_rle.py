import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rlematch.oracle import naive_search
from rlematch.rle import (
    ExpansionLimitError,
    NonPositiveRunLength,
    PatternSet,
    RleString,
    Run,
    canonicalize,
    decode,
    decode_str,
    encode,
    is_canonical,
    rank_reduce,
    rle,
)

A, B, C = ord("a"), ord("b"), ord("c")


def test_encode_reference_example():
    s = encode("aaaabbbaaaccbaa")
    assert s.runs == (Run(A, 4), Run(B, 3), Run(A, 3), Run(C, 2), Run(B, 1), Run(A, 2))
    assert s.total_len == 15


def test_encode_edge_cases():
    assert encode("") == RleString(())
    assert encode("").total_len == 0
    assert encode("aaaa").runs == (Run(A, 4),)
    assert encode([7, 7, 300]).runs == (Run(7, 2), Run(300, 1))


def test_decode():
    assert decode_str(rle("a4 b3 a3 c2 b1 a2")) == "aaaabbbaaaccbaa"
    assert decode(RleString(())) == []
    assert decode_str(rle("b2 a1")) == "bba"


def test_decode_limit():
    huge = RleString((Run(A, 10**12),))
    with pytest.raises(ExpansionLimitError):
        decode(huge)
    assert len(decode(rle("a5"), limit=5)) == 5


def test_canonicalize():
    assert canonicalize([(A, 2), (A, 3), (B, 1)]).runs == (Run(A, 5), Run(B, 1))
    with pytest.raises(NonPositiveRunLength):
        canonicalize([(A, 2), (B, 0)])
    runs = [(A, 1), (B, 1), (A, 1)]
    assert canonicalize(runs).runs == tuple(Run(*r) for r in runs)


raw_text = st.lists(st.integers(0, 3), max_size=30)
raw_runs = st.lists(st.tuples(st.integers(0, 3), st.integers(1, 5)), max_size=12)


@given(raw_text)
def test_roundtrip_raw(x):
    assert decode(encode(x)) == x


@given(raw_runs)
def test_roundtrip_canonical_and_idempotent(runs):
    s = canonicalize(runs)
    assert is_canonical(s)
    assert encode(decode(s)) == s
    assert canonicalize(s.runs) == s
    assert s.total_len == sum(n for _, n in runs)


def test_pattern_meta():
    ps = PatternSet.from_strings([rle("a5 b3 a2"), rle("b2")])
    p1, p2 = ps[1], ps[2]
    assert (p1.full_len, p1.last_char, p1.last_len, p1.run_count) == (10, A, 2, 3)
    assert p1.truncated.runs + (Run(p1.last_char, p1.last_len),) == p1.rle.runs
    assert p2.truncated.runs == () and p2.run_count == 1
    assert ps.total_runs == 4


def _cross_equal(patterns, text):
    t = decode(text)
    return {
        (i, p.id, z)
        for p in patterns
        for i, z in itertools.product(range(len(t)), range(p.full_len))
        if t[i] == decode(p.rle)[z]
    }


def test_rank_reduce_three_cases():
    c, x, y, z = map(ord, "cxyz")
    pats = PatternSet.from_strings([RleString((Run(c, 2), Run(x, 1)))])
    text = RleString((Run(y, 3), Run(c, 2), Run(z, 1)))
    new_pats, new_text, amap = rank_reduce(pats, text)
    assert new_pats[1].rle.runs == (Run(3, 2), Run(2, 1))
    assert new_text.runs == (Run(1, 3), Run(3, 2), Run(1, 1))
    assert amap.text == {y: 1, z: 1, c: 3}
    assert amap.patterns == {c: 3, x: 2}


def test_rank_reduce_single_shared_and_disjoint():
    new_pats, new_text, _ = rank_reduce(PatternSet.from_strings(["a"]), encode("a"))
    assert new_pats[1].rle.runs == (Run(3, 1),) and new_text.runs == (Run(3, 1),)

    pats = PatternSet.from_strings(["a"])
    new_pats, new_text, _ = rank_reduce(pats, encode("b"))
    assert new_pats[1].rle.runs == (Run(2, 1),) and new_text.runs == (Run(1, 1),)
    assert _cross_equal(pats, encode("b")) == set()
    assert _cross_equal(new_pats, new_text) == set()


def test_rank_reduce_preserves_cross_equality_and_occurrences():
    rng = random.Random(11)
    for _ in range(300):
        text = canonicalize((rng.randrange(97, 103), rng.randint(1, 3)) for _ in range(rng.randint(0, 6)))
        pats = PatternSet.from_strings(
            canonicalize((rng.randrange(97, 103), rng.randint(1, 3)) for _ in range(rng.randint(1, 3)))
            for _ in range(rng.randint(1, 4))
        )
        new_pats, new_text, amap = rank_reduce(pats, text)
        assert _cross_equal(pats, text) == _cross_equal(new_pats, new_text)
        assert naive_search(pats, text) == naive_search(new_pats, new_text)
        assert amap.size <= min(len(text), pats.total_runs) + 2
