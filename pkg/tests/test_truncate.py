import random

import pytest

from rlematch.oracle import naive_truncate
from rlematch.rle import PatternSet, canonicalize, rle
from rlematch.truncate import UnknownPatternId, build_truncate_index

A, B = ord("a"), ord("b")


def _node(ix, shorthand):
    target = rle(shorthand)
    (u,) = [u for u in range(len(ix.nodes)) if ix.reversed_string(u) == target]
    return u


def test_reference_structure(ref_patterns):
    ix = build_truncate_index(ref_patterns)
    assert 6 not in ix.locus  # the single-run pattern b2 is handled elsewhere
    a5, b2, b3a3, b3a5 = (_node(ix, s) for s in ("a5", "b2", "b3 a3", "b3 a5"))
    assert ix.locus == {1: a5, 2: b3a5, 3: b3a5, 4: b3a3, 5: b2}
    assert ix.colors[a5] == {B: 1}
    assert ix.colors[b2] == {A: 1}
    assert ix.colors[b3a3] == {A: 1}
    assert ix.colors[b3a5] == {A: 1}
    assert ix.lists[b3a5][A] == [(1, 3), (2, 2)]
    # induced trees: T_a is the chain b2 -> b3a3 -> b3a5, T_b is the lone a5
    assert ix.catr.induced_parent(A) == {b2: None, b3a3: b2, b3a5: b3a3}
    assert ix.catr.induced_parent(B) == {a5: None}


def test_reference_queries(ref_patterns):
    ix = build_truncate_index(ref_patterns)
    assert sorted(ix.query(3, A, 2)) == [2, 3, 4, 5]
    assert ix.query(1, B, 1) == [1]
    assert ix.query(5, A, 5) == [5]
    for i, a, w in [(3, A, 2), (1, B, 1), (5, A, 5)]:
        assert set(ix.query(i, a, w)) == naive_truncate(ref_patterns, i, a, w)


def test_small_cases():
    ix = build_truncate_index(PatternSet.from_strings(["ab"]))
    assert len(ix.nodes) == 2
    assert ix.colors[ix.locus[1]] == {B: 1}
    ix = build_truncate_index(PatternSet.from_strings(["ab", "ab"]))
    assert ix.locus[1] == ix.locus[2]
    assert ix.lists[ix.locus[1]][B] == [(1, 1), (1, 2)]
    with pytest.raises(UnknownPatternId):
        ix.query(9, B, 1)


def test_oracle_self_match_and_absent_color(ref_patterns):
    for p in ref_patterns:
        if p.run_count > 1:
            assert p.id in naive_truncate(ref_patterns, p.id, p.last_char, p.last_len)
            assert naive_truncate(ref_patterns, p.id, ord("z"), 99) == set()


def _random_patterns(rng):
    return PatternSet.from_strings(
        canonicalize((97 + rng.randrange(3), rng.randint(1, 6)) for _ in range(rng.randint(1, 4)))
        for _ in range(rng.randint(1, 10))
    )


def test_matches_brute_force():
    rng = random.Random(12)
    trials = 0
    while trials < 10_000:
        pats = _random_patterns(rng)
        multi = [p.id for p in pats if p.run_count > 1]
        if not multi:
            continue
        ix = build_truncate_index(pats)
        for _ in range(5):
            i, a, w = rng.choice(multi), 97 + rng.randrange(3), rng.randint(0, 7)
            stats = {}
            got = ix.query(i, a, w, stats)
            assert len(got) == len(set(got))
            assert set(got) == naive_truncate(pats, i, a, w)
            assert stats["list_steps"] <= len(got) + stats["catr_nodes"]
            bigger = set(ix.query(i, a, w + rng.randint(0, 3)))
            assert set(got) <= bigger
            trials += 1
