"""Multigraphs with indexed edges, quotients, and connected partitions.

A ``MultiGraph`` is a vertex count plus an ordered tuple of undirected
edges; loops and parallel edges are first-class.  Edge subsets are
bitmasks over the edge index, so edge identity survives restriction and
quotient.  Quotients re-label vertices densely and keep the surviving
edges in their original relative order, which is what lets matroid minors
built from quotients line up element-by-element with bitmask views.
"""

from __future__ import annotations

import json
import os

from .errors import BadParams


class MultiGraph:
    """Undirected multigraph on vertices 0..n-1 with an ordered edge list."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise BadParams("vertex count must be >= 0")
        es = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise BadParams(f"edge ({u},{v}) out of range for {n} vertices")
            es.append((u, v))
        self.n = n
        self.edges = tuple(es)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_edge_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"MultiGraph({self.n}, {self.edges!r})"


def complete_graph(n: int) -> MultiGraph:
    """K_n with edges (i, j), i < j, in lexicographic order."""
    if n < 0:
        raise BadParams("vertex count must be >= 0")
    return MultiGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _check_edge_mask(g: MultiGraph, mask: int):
    if not 0 <= mask <= g.full_edge_mask:
        raise BadParams(f"edge mask {mask:#x} outside the graph's edge list")


def _roots_over(g: MultiGraph, mask: int):
    """Union-find roots over the edges in mask; returns (parent, support)."""
    _check_edge_mask(g, mask)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    support = set()
    m = mask
    i = 0
    edges = g.edges
    while m:
        if m & 1:
            u, v = edges[i]
            support.add(u)
            support.add(v)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        m >>= 1
        i += 1
    return find, support


def components(g: MultiGraph, mask: int) -> tuple[int, int]:
    """(number of components, number of vertices) of the edge-induced
    subgraph on mask; isolated vertices outside the support do not count.
    The empty mask gives (0, 0)."""
    find, support = _roots_over(g, mask)
    roots = {find(v) for v in support}
    return len(roots), len(support)


def component_count(g: MultiGraph) -> int:
    """Components of g over all vertices, counting isolated ones."""
    find, _ = _roots_over(g, g.full_edge_mask)
    return len({find(v) for v in range(g.n)})


def subgraph(g: MultiGraph, mask: int) -> MultiGraph:
    """Edge-induced subgraph: support vertices re-labeled ascending,
    edges of mask kept in ascending index order."""
    _, support = _roots_over(g, mask)
    relab = {v: i for i, v in enumerate(sorted(support))}
    es = [
        (relab[u], relab[v])
        for i, (u, v) in enumerate(g.edges)
        if mask >> i & 1
    ]
    return MultiGraph(len(support), es)


def quotient(g: MultiGraph, mask: int) -> MultiGraph:
    """Contract every edge in mask; keep the other edges (loops and
    parallels may appear).  New vertex labels are dense, assigned in
    order of first appearance of each merged class along 0..n-1."""
    find, _ = _roots_over(g, mask)
    relab = {}
    for v in range(g.n):
        r = find(v)
        if r not in relab:
            relab[r] = len(relab)
    es = [
        (relab[find(u)], relab[find(v)])
        for i, (u, v) in enumerate(g.edges)
        if not (mask >> i & 1)
    ]
    return MultiGraph(len(relab), es)


def _block_connected(g: MultiGraph, block: tuple) -> bool:
    if len(block) <= 1:
        return True
    bs = set(block)
    parent = {v: v for v in bs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if u in bs and v in bs:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return len({find(v) for v in bs}) == 1


def connected_partitions(g: MultiGraph):
    """Yield (blocks, mask) for every partition of the vertex set whose
    blocks all induce connected subgraphs.

    ``blocks`` is a tuple of vertex tuples and ``mask`` collects every
    edge with both endpoints in the same block.  Partitions are
    enumerated by restricted-growth strings; connectivity is a filter at
    the leaves, with no pruning attempted.
    """
    n = g.n
    if n == 0:
        yield ((), 0)
        return
    assign = [0] * n

    def emit():
        k = max(assign) + 1
        blocks = [[] for _ in range(k)]
        for v, b in enumerate(assign):
            blocks[b].append(v)
        blocks = tuple(tuple(b) for b in blocks)
        for b in blocks:
            if not _block_connected(g, b):
                return None
        mask = 0
        for i, (u, v) in enumerate(g.edges):
            if assign[u] == assign[v]:
                mask |= 1 << i
        return blocks, mask

    def rec(i, top):
        if i == n:
            res = emit()
            if res is not None:
                yield res
            return
        for b in range(top + 2):
            assign[i] = b
            yield from rec(i + 1, max(top, b))

    assign[0] = 0
    yield from rec(1, 0)


def graph_to_json(g: MultiGraph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


def graph_from_json(obj) -> MultiGraph:
    """Build a MultiGraph from {"n": int, "edges": [[u,v], ...]} given as
    a dict, a JSON string, or a path to a JSON file."""
    if isinstance(obj, (str, os.PathLike)):
        text = os.fspath(obj)
        if not text.lstrip().startswith("{"):
            with open(text, "r", encoding="utf-8") as fh:
                text = fh.read()
        obj = json.loads(text)
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise BadParams('graph JSON needs keys "n" and "edges"')
    edges = obj["edges"]
    if not isinstance(edges, list) or any(len(e) != 2 for e in edges):
        raise BadParams("edges must be a list of [u, v] pairs")
    return MultiGraph(int(obj["n"]), [(int(u), int(v)) for u, v in edges])
