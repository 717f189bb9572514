"""Colored ancestor threshold reporting.

Given a node ``v``, a color ``c`` and a threshold ``w``, report every
inclusive ancestor ``u`` of ``v`` that has color ``c`` with weight
``<= w``. Each color gets an induced forest over its nodes; a query finds
the nearest colored ancestor, then splits the path up to its induced root
at path minima until every remaining segment's minimum exceeds ``w``.
"""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence

from .treekit import ColoredAncestorIndex, PathMinIndex, StaticTree


class WeightMissing(ValueError):
    pass


class _Induced:
    __slots__ = ("nodes", "tree", "pathmin")

    def __init__(self, nodes: list[int], parent: list[int], weights: list[int]) -> None:
        self.nodes = nodes
        self.tree = StaticTree(parent)
        self.pathmin = PathMinIndex(self.tree, weights)


class CatrIndex:
    def __init__(
        self,
        tree: StaticTree,
        colors: Sequence[Sequence[Hashable]],
        weights: Sequence[Mapping[Hashable, int]],
    ) -> None:
        for v, cs in enumerate(colors):
            for c in cs:
                if c not in weights[v]:
                    raise WeightMissing(f"node {v} has color {c!r} but no weight")
                if weights[v][c] < 1:
                    raise ValueError(f"weight of ({v}, {c!r}) must be >= 1")
        self.tree = tree
        self.fca = ColoredAncestorIndex(tree, colors)
        above = self.fca.above

        members: dict[Hashable, list[int]] = {}
        for v in tree.order:
            for c in self.fca.colors[v]:
                members.setdefault(c, []).append(v)
        # slot[v][c] = index of v inside the induced forest of c
        self.slot: list[dict[Hashable, int]] = [{} for _ in range(len(tree))]
        for c, nodes in members.items():
            for i, v in enumerate(nodes):
                self.slot[v][c] = i
        self.induced: dict[Hashable, _Induced] = {}
        for c, nodes in members.items():
            parent = [self.slot[above[v][c]][c] if c in above[v] else -1 for v in nodes]
            self.induced[c] = _Induced(nodes, parent, [weights[v][c] for v in nodes])

    def induced_parent(self, c: Hashable) -> dict[int, int | None]:
        """Induced forest of ``c`` as base-tree ``node -> parent`` (``None`` at roots)."""
        ind = self.induced.get(c)
        if ind is None:
            return {}
        return {
            v: (ind.nodes[p] if p >= 0 else None)
            for v, p in zip(ind.nodes, ind.tree.parent)
        }

    def query(self, v: int, c: Hashable, w: int, stats: dict | None = None) -> list[int]:
        """Qualifying ancestors, in discovery order."""
        top = self.fca.query(v, c)
        if top is None:
            return []
        ind = self.induced[c]
        t, pm = ind.tree, ind.pathmin
        weights = pm.weights
        out: list[int] = []
        calls = 0
        # segments: (depth of upper end, lower end) inside the induced forest
        low = self.slot[top][c]
        segments = [(0, low)]
        while segments:
            d, b = segments.pop()
            calls += 1
            x = pm.query(t.level_ancestor(b, d), b)
            if weights[x] > w:
                continue
            out.append(ind.nodes[x])
            dx = t.depth[x]
            if dx > d:
                segments.append((d, t.parent[x]))
            if dx < t.depth[b]:
                segments.append((dx + 1, b))
        if stats is not None:
            stats["path_min_calls"] = stats.get("path_min_calls", 0) + calls
        return out


def build_catr(tree, colors, weights) -> CatrIndex:
    return CatrIndex(tree, colors, weights)

