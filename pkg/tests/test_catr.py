import random

import pytest

from rlematch.catr import CatrIndex, WeightMissing
from rlematch.oracle import naive_catr
from rlematch.treekit import StaticTree

from test_treekit import random_tree


def _index(parent, colored):
    colors = [list(c) for c in colored]
    return CatrIndex(StaticTree(parent), colors, colored)


def chain():
    # r(c:5) -> x -> y(c:2) -> z
    parent = [-1, 0, 1, 2]
    colored = [{"c": 5}, {}, {"c": 2}, {}]
    return parent, colored


def test_chain_examples():
    parent, colored = chain()
    ix = _index(parent, colored)
    assert set(ix.query(3, "c", 3)) == {2} == naive_catr(parent, colored, 3, "c", 3)
    assert set(ix.query(3, "c", 5)) == {0, 2} == naive_catr(parent, colored, 3, "c", 5)
    assert ix.query(3, "other", 9) == []
    assert ix.query(3, "c", 0) == []


def test_build_edge_cases():
    ix = _index([-1, 0], [{}, {}])
    assert ix.induced == {}
    ix = _index([-1], [{"c": 7}])
    assert ix.induced_parent("c") == {0: None}
    assert ix.query(0, "c", 7) == [0]
    with pytest.raises(WeightMissing):
        CatrIndex(StaticTree([-1]), [["c"]], [{}])


def test_induced_tree_preserves_ancestry():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(1, 40)
        parent = random_tree(rng, n)
        colored = [{c: 1 for c in "ab" if rng.random() < 0.4} for _ in range(n)]
        ix = _index(parent, colored)
        for c in "ab":
            members = {v for v in range(n) if c in colored[v]}
            induced = ix.induced_parent(c)
            assert set(induced) == members
            for v, p in induced.items():
                up = parent[v]
                while up >= 0 and up not in members:
                    up = parent[up]
                assert p == (up if up >= 0 else None)


def test_matches_ancestor_scan_with_work_bound():
    rng = random.Random(10)
    for _ in range(10_000):
        n = rng.randint(1, 64)
        parent = random_tree(rng, n)
        colored = [
            {c: rng.randint(1, 16) for c in range(4) if rng.random() < 0.3} for _ in range(n)
        ]
        ix = _index(parent, colored)
        v, c, w = rng.randrange(n), rng.randrange(4), rng.randint(0, 17)
        stats = {}
        got = ix.query(v, c, w, stats)
        assert len(got) == len(set(got))
        assert set(got) == naive_catr(parent, colored, v, c, w)
        assert stats.get("path_min_calls", 0) <= 2 * len(got) + 1
