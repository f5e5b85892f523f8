"""Matroids as rank oracles over bitmask subsets.

Every matroid exposes ``rank(mask)`` for subsets of a ground set
0..n-1 encoded as bitmasks.  Duals, restrictions, and contractions are
lazy views that rewrite rank queries through the standard identities

    r*(A)      = r(E - A) + |A| - r(E)
    r_{M|S}(A) = r(A)                      (A within S, re-indexed)
    r_{M.S}(A) = r((E - S) + A) - r(E - S) (contract everything off S)

so view stacks of any depth stay exact.  ``contract(M, S)`` keeps S as
the ground set and contracts the complement away.

Rank values are memoized per matroid instance.  The cache is a plain
dict: under CPython's GIL each get/set is atomic and racing writers
can only store the identical deterministic value, so concurrent readers
are safe without locks.

Graphic matroids override rank with union-find on the edge support and
override the rank-size census with a backtracking scan that rolls back
union operations, visiting each edge subset once.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, product
from time import monotonic

from .errors import BadParams, BudgetExceeded, TooLarge
from .graphs import MultiGraph, quotient, subgraph

ENUM_GUARD = 20  # hard cap for circuit/flat enumeration


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class Matroid:
    """Base rank-oracle matroid; subclasses implement ``_rank_impl``."""

    def __init__(self, ground_size: int, label: str):
        if ground_size < 0:
            raise BadParams("ground size must be >= 0")
        self.ground_size = ground_size
        self.label = label
        self._rank_cache: dict[int, int] = {}

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    def rank(self, mask: int) -> int:
        if not 0 <= mask <= self.full_mask:
            raise BadParams(f"mask {mask:#x} outside ground set of {self.label}")
        cached = self._rank_cache.get(mask)
        if cached is None:
            cached = self._rank_impl(mask)
            self._rank_cache[mask] = cached
        return cached

    def _rank_impl(self, mask: int) -> int:
        raise NotImplementedError

    def full_rank(self) -> int:
        return self.rank(self.full_mask)

    def dual(self) -> "Matroid":
        return DualView(self)

    def restrict(self, mask: int) -> "Matroid":
        return RestrictView(self, mask)

    def contract(self, mask: int) -> "Matroid":
        return ContractView(self, mask)

    def is_loop(self, e: int) -> bool:
        return self.rank(1 << e) == 0

    def is_coloop(self, e: int) -> bool:
        return self.rank(self.full_mask & ~(1 << e)) == self.full_rank() - 1

    def loops_mask(self) -> int:
        m = 0
        for e in range(self.ground_size):
            if self.is_loop(e):
                m |= 1 << e
        return m

    def coloops_mask(self) -> int:
        m = 0
        for e in range(self.ground_size):
            if self.is_coloop(e):
                m |= 1 << e
        return m

    def rank_size_counts(self, deadline: float | None = None) -> Counter:
        """Census {(|A|, r(A)): count} over all 2^n subsets."""
        counts: Counter = Counter()
        rank = self.rank
        for mask in range(1 << self.ground_size):
            if deadline is not None and mask & 0xFFF == 0 and monotonic() > deadline:
                raise BudgetExceeded("rank-size census ran past its deadline")
            counts[(mask.bit_count(), rank(mask))] += 1
        return counts

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label} on {self.ground_size} elements>"


class DualView(Matroid):
    def __init__(self, base: Matroid):
        super().__init__(base.ground_size, f"dual({base.label})")
        self.base = base

    def _rank_impl(self, mask: int) -> int:
        b = self.base
        return b.rank(b.full_mask & ~mask) + mask.bit_count() - b.full_rank()

    def dual(self) -> Matroid:
        return self.base

    def rank_size_counts(self, deadline: float | None = None) -> Counter:
        n, r = self.ground_size, self.base.full_rank()
        out: Counter = Counter()
        for (a, rho), c in self.base.rank_size_counts(deadline).items():
            out[(n - a, rho + n - a - r)] += c
        return out


class RestrictView(Matroid):
    def __init__(self, base: Matroid, mask: int):
        if not 0 <= mask <= base.full_mask:
            raise BadParams("restriction mask outside ground set")
        elements = tuple(_bits(mask))
        super().__init__(len(elements), f"restrict({base.label},{mask:#x})")
        self.base = base
        self.elements = elements

    def _map(self, mask: int) -> int:
        out = 0
        for i, e in enumerate(self.elements):
            if mask >> i & 1:
                out |= 1 << e
        return out

    def _rank_impl(self, mask: int) -> int:
        return self.base.rank(self._map(mask))


class ContractView(Matroid):
    """Ground set = mask's elements; everything outside is contracted."""

    def __init__(self, base: Matroid, mask: int):
        if not 0 <= mask <= base.full_mask:
            raise BadParams("contraction mask outside ground set")
        elements = tuple(_bits(mask))
        super().__init__(len(elements), f"contract({base.label},{mask:#x})")
        self.base = base
        self.elements = elements
        self._off = base.full_mask & ~mask
        self._off_rank = base.rank(self._off)

    def _map(self, mask: int) -> int:
        out = 0
        for i, e in enumerate(self.elements):
            if mask >> i & 1:
                out |= 1 << e
        return out

    def _rank_impl(self, mask: int) -> int:
        return self.base.rank(self._off | self._map(mask)) - self._off_rank


class UniformMatroid(Matroid):
    def __init__(self, m: int, n: int):
        if not 0 <= m <= n:
            raise BadParams(f"uniform matroid wants 0 <= m <= n, got ({m},{n})")
        super().__init__(n, f"uniform:{m},{n}")
        self.m = m

    def _rank_impl(self, mask: int) -> int:
        return min(self.m, mask.bit_count())


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; elements are the graph's edges."""

    def __init__(self, graph: MultiGraph, label: str | None = None):
        if label is None:
            label = f"graphic:{graph.n}v{len(graph.edges)}e"
        super().__init__(len(graph.edges), label)
        self.graph = graph

    def _rank_impl(self, mask: int) -> int:
        parent = list(range(self.graph.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rank = 0
        edges = self.graph.edges
        m = mask
        i = 0
        while m:
            if m & 1:
                ru, rv = find(edges[i][0]), find(edges[i][1])
                if ru != rv:
                    parent[ru] = rv
                    rank += 1
            m >>= 1
            i += 1
        return rank

    def restrict(self, mask: int) -> "GraphicMatroid":
        return GraphicMatroid(
            subgraph(self.graph, mask), f"restrict({self.label},{mask:#x})"
        )

    def contract(self, mask: int) -> "GraphicMatroid":
        away = self.full_mask & ~mask
        return GraphicMatroid(
            quotient(self.graph, away), f"contract({self.label},{mask:#x})"
        )

    def rank_size_counts(self, deadline: float | None = None) -> Counter:
        """Subset census by depth-first scan over edges with union-find
        rollback; union by size, no path compression, so undo is O(1)."""
        g = self.graph
        edges = g.edges
        m = len(edges)
        parent = list(range(g.n))
        size = [1] * g.n
        counts: Counter = Counter()
        calls = [0]

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        def rec(i, sz, rk):
            calls[0] += 1
            if deadline is not None and calls[0] & 0x3FFF == 0:
                if monotonic() > deadline:
                    raise BudgetExceeded("rank-size census ran past its deadline")
            if i == m - 1:
                u, v = edges[i]
                counts[(sz, rk)] += 1
                if find(u) == find(v):
                    counts[(sz + 1, rk)] += 1
                else:
                    counts[(sz + 1, rk + 1)] += 1
                return
            rec(i + 1, sz, rk)
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                rec(i + 1, sz + 1, rk)
            else:
                if size[ru] > size[rv]:
                    ru, rv = rv, ru
                parent[ru] = rv
                size[rv] += size[ru]
                rec(i + 1, sz + 1, rk + 1)
                size[rv] -= size[ru]
                parent[ru] = ru

        if m == 0:
            counts[(0, 0)] = 1
        else:
            rec(0, 0, 0)
        return counts


class LinearMatroidFp(Matroid):
    """Column matroid of vectors over the prime field F_p."""

    def __init__(self, vectors, p: int, label: str):
        vectors = tuple(tuple(int(c) % p for c in v) for v in vectors)
        if vectors and len({len(v) for v in vectors}) != 1:
            raise BadParams("vectors must share one dimension")
        super().__init__(len(vectors), label)
        self.vectors = vectors
        self.p = p

    def _rank_impl(self, mask: int) -> int:
        rows = [list(self.vectors[i]) for i in _bits(mask)]
        p = self.p
        rank = 0
        col = 0
        dim = len(rows[0]) if rows else 0
        while rank < len(rows) and col < dim:
            piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
            if piv is None:
                col += 1
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = pow(rows[rank][col], -1, p)
            rows[rank] = [(c * inv) % p for c in rows[rank]]
            for r in range(len(rows)):
                if r != rank and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
            rank += 1
            col += 1
        return rank


class TableMatroid(Matroid):
    """Explicit rank table, mainly for tests.

    For ground sets of at most 6 elements the three rank axioms
    (normalization/bounds, monotonicity, submodularity) are checked
    exhaustively on construction.
    """

    def __init__(self, ground_size: int, table, label: str = "table"):
        super().__init__(ground_size, label)
        n_masks = 1 << ground_size
        if len(table) != n_masks:
            raise BadParams("rank table must list every subset")
        self.table = [int(table[m]) for m in range(n_masks)]
        if ground_size <= 6:
            self._check_axioms()

    def _check_axioms(self):
        t = self.table
        full = self.full_mask
        if t[0] != 0:
            raise BadParams("rank of the empty set must be 0")
        for a in range(full + 1):
            if not 0 <= t[a] <= a.bit_count():
                raise BadParams(f"rank out of bounds on {a:#x}")
            for e in range(self.ground_size):
                if not a >> e & 1 and t[a] > t[a | 1 << e]:
                    raise BadParams("rank not monotone")
        for a in range(full + 1):
            for b in range(full + 1):
                if t[a | b] + t[a & b] > t[a] + t[b]:
                    raise BadParams("rank not submodular")

    def _rank_impl(self, mask: int) -> int:
        return self.table[mask]


def make_uniform(m: int, n: int) -> UniformMatroid:
    """U_{m,n}: rank of A is min(m, |A|)."""
    return UniformMatroid(m, n)


def make_graphic(g: MultiGraph, label: str | None = None) -> GraphicMatroid:
    return GraphicMatroid(g, label)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def make_pg(n: int, p: int) -> LinearMatroidFp:
    """Projective geometry PG(n-1, p) over a prime field: one point per
    1-dimensional subspace of F_p^n, normalized so the first nonzero
    coordinate is 1, listed in lexicographic order."""
    if n < 1:
        raise BadParams("pg wants n >= 1")
    if not is_prime(p):
        raise BadParams(f"pg wants a prime field order, got {p}")
    points = []
    for vec in product(range(p), repeat=n):
        nz = next((c for c in vec if c), None)
        if nz == 1:
            points.append(vec)
    expect = (p**n - 1) // (p - 1)
    if len(points) != expect:
        raise AssertionError("point count disagrees with (p^n-1)/(p-1)")
    return LinearMatroidFp(points, p, f"pg:{n},{p}")


def circuits(m: Matroid) -> list[int]:
    """All circuits (minimal dependent sets) as bitmasks, by increasing
    size then mask value.  Guarded to ground sets of at most 20."""
    n = m.ground_size
    if n > ENUM_GUARD:
        raise TooLarge(f"circuit enumeration on {n} > {ENUM_GUARD} elements")
    found: list[int] = []
    elems = range(n)
    for k in range(1, n + 1):
        for combo in combinations(elems, k):
            mask = 0
            for e in combo:
                mask |= 1 << e
            if any(c & mask == c for c in found):
                continue
            if m.rank(mask) < k:
                found.append(mask)
    return sorted(found, key=lambda c: (c.bit_count(), c))


def flats_of_rank(m: Matroid, k: int) -> list[int]:
    """All flats (closed sets) of rank k, as bitmasks.  A set A is closed
    when adding any outside element raises the rank."""
    n = m.ground_size
    if n > ENUM_GUARD:
        raise TooLarge(f"flat enumeration on {n} > {ENUM_GUARD} elements")
    if not 0 <= k <= m.full_rank():
        return []
    out = []
    for mask in range(1 << n):
        if m.rank(mask) != k:
            continue
        closed = True
        for e in range(n):
            if not mask >> e & 1 and m.rank(mask | 1 << e) == k:
                closed = False
                break
        if closed:
            out.append(mask)
    return out
