from pathlib import Path

import pytest

from rlematch.oracle import GenConfig, generate, longest_suffix, naive_catr, naive_search
from rlematch.rle import ExpansionLimitError, PatternSet, Run, RleString, decode, encode, rle
from rlematch.textfmt import format_rle

DATA = Path(__file__).parent / "data"


def test_naive_search_examples(ref_patterns):
    found = naive_search(ref_patterns, rle("a3 b3 a2"))
    assert sorted(found.elements()) == [(4, 0), (5, 4), (6, 3), (6, 4)]
    assert not naive_search(ref_patterns, RleString(()))
    pats = PatternSet.from_strings(["abba"])
    assert sorted(naive_search(pats, encode("abba")).elements()) == [(1, 0)]


def test_naive_search_limit():
    with pytest.raises(ExpansionLimitError):
        naive_search(PatternSet.from_strings(["a"]), RleString((Run(97, 10**7),)))


def test_naive_catr_trivial():
    assert naive_catr([-1], [{}], 0, "c", 5) == set()
    parent = [-1, 0, 1]
    colors = [{"c": 3}, {}, {"c": 9}]
    assert naive_catr(parent, colors, 2, "c", 9) == {0, 2}


def test_longest_suffix():
    assert longest_suffix(["ab", "b", "xab"], "aab") == 0
    assert longest_suffix(["q"], "aab") is None


def test_generate_is_deterministic():
    cfg = GenConfig(seed=42)
    assert generate(cfg) == generate(cfg)
    assert generate(cfg) != generate(GenConfig(seed=43))


def test_generate_golden_seed0():
    pats, text = generate(GenConfig(seed=0))
    golden_p = (DATA / "golden_seed0_patterns.txt").read_text().splitlines()
    golden_t = (DATA / "golden_seed0_text.txt").read_text().splitlines()
    assert [format_rle(s) for s in pats.strings()] == golden_p
    assert [format_rle(text)] == golden_t


def test_generate_bounds_and_degenerate_configs():
    for seed in range(200):
        pats, text = generate(GenConfig(seed=seed))
        assert len(text) <= 40 and all(r.length <= 8 for r in text)
        assert 1 <= len(pats) <= 10
        assert all(r.length <= 6 for p in pats for r in p.rle.runs)

        pats, text = generate(GenConfig(seed=seed, alphabet=1))
        assert len(text) <= 1 and all(p.run_count == 1 for p in pats)

        pats, text = generate(GenConfig(seed=seed, max_run_length=1, max_pattern_run_length=1))
        assert len(text) == text.total_len == len(decode(text))
    with pytest.raises(ValueError):
        GenConfig(alphabet=0)
