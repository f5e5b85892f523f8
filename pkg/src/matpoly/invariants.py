"""Subset-expansion invariants of a matroid and their graph specializations.

All of these are different marginals of the same census: the number of
subsets A of the ground set with a given (|A|, r(A)) pair.  With E the
ground set, n = |E| and R = r(E):

    characteristic  chi(x)   = sum_A (-1)^|A| x^(R - r(A))
    Tutte           T(x, y)  = sum_A (x-1)^(R - r(A)) (y-1)^(|A| - r(A))
    Whitney rank    R(u, v)  = sum_A u^(R - r(A)) v^(|A| - r(A))

and the graph polynomials are substitutions into these for the cycle
matroid: chromatic P = x^c(G) * chi, flow F = chi of the dual,
dichromatic Q = u^c(G) * R.  Everything is exact integer arithmetic.

The census costs 2^n, so each entry point is guarded at n <= 24.
``chi_delcon`` is the independent recursive route (delete/contract) used
to cross-check ``chi_subset``; for graphic matroids it memoizes on a
densely re-labeled copy of the graph, which is sound because equal
labeled graphs have equal cycle matroids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .algebra import BiPoly, IntPoly, poly_pow
from .errors import BadParams, TooLarge
from .graphs import MultiGraph, component_count, quotient
from .matroids import GraphicMatroid, Matroid, make_graphic

SUBSET_GUARD = 24


def _guard(m: Matroid):
    if m.ground_size > SUBSET_GUARD:
        raise TooLarge(
            f"{m.label} has {m.ground_size} elements; subset expansion is "
            f"guarded at {SUBSET_GUARD}"
        )


def chi_subset(m: Matroid) -> IntPoly:
    """Characteristic polynomial by direct subset expansion."""
    _guard(m)
    counts = m.rank_size_counts()
    rfull = m.full_rank()
    coeffs = [0] * (rfull + 1)
    for (a, rho), c in counts.items():
        coeffs[rfull - rho] += c if a % 2 == 0 else -c
    return IntPoly(coeffs)


def _delcon(m: Matroid) -> IntPoly:
    n = m.ground_size
    for e in range(n):
        if m.is_loop(e):
            return IntPoly.zero()
    for e in range(n):
        if not m.is_coloop(e):
            keep = m.full_mask & ~(1 << e)
            return _delcon(m.restrict(keep)) - _delcon(m.contract(keep))
    # all coloops: chi of a direct sum of n coloops is (x-1)^n
    return poly_pow(IntPoly((-1, 1)), n)


_GRAPHIC_CHI_MEMO: dict = {}


def _graph_key(g: MultiGraph):
    support = sorted({v for e in g.edges for v in e})
    relab = {v: i for i, v in enumerate(support)}
    edges = sorted(
        (relab[u], relab[v]) if relab[u] <= relab[v] else (relab[v], relab[u])
        for u, v in g.edges
    )
    return len(support), tuple(edges)


def _delcon_graphic(g: MultiGraph) -> IntPoly:
    key = _graph_key(g)
    hit = _GRAPHIC_CHI_MEMO.get(key)
    if hit is not None:
        return hit
    edges = g.edges
    res = None
    for i, (u, v) in enumerate(edges):
        if u == v:
            res = IntPoly.zero()
            break
    if res is None:
        m = make_graphic(g)
        pick = next((i for i in range(len(edges)) if not m.is_coloop(i)), None)
        if pick is None:
            res = poly_pow(IntPoly((-1, 1)), len(edges))
        else:
            deleted = MultiGraph(g.n, edges[:pick] + edges[pick + 1 :])
            contracted = quotient(g, 1 << pick)
            res = _delcon_graphic(deleted) - _delcon_graphic(contracted)
    _GRAPHIC_CHI_MEMO[key] = res
    return res


def chi_delcon(m: Matroid) -> IntPoly:
    """Characteristic polynomial by deletion/contraction.

    Any loop forces the zero polynomial; a matroid whose n elements are
    all coloops is a direct sum of coloops with chi = (x-1)^n; otherwise
    pick an element e that is neither and use
    chi(M) = chi(M delete e) - chi(M contract e).
    """
    if isinstance(m, GraphicMatroid):
        return _delcon_graphic(m.graph)
    return _delcon(m)


def tutte(m: Matroid) -> BiPoly:
    """Tutte polynomial via the rank-size census."""
    _guard(m)
    counts = m.rank_size_counts()
    rfull = m.full_rank()
    xm1 = IntPoly((-1, 1))
    ym1 = IntPoly((-1, 1))
    xpow = [IntPoly.one()]
    ypow = [IntPoly.one()]
    terms: dict = {}
    for (a, rho), c in sorted(counts.items()):
        i, j = rfull - rho, a - rho
        while len(xpow) <= i:
            xpow.append(xpow[-1] * xm1)
        while len(ypow) <= j:
            ypow.append(ypow[-1] * ym1)
        for di, cx in enumerate(xpow[i].coeffs):
            if not cx:
                continue
            for dj, cy in enumerate(ypow[j].coeffs):
                if not cy:
                    continue
                k = (di, dj)
                terms[k] = terms.get(k, 0) + c * cx * cy
    return BiPoly(terms)


def tutte_uniform_closed(m: int, n: int) -> BiPoly:
    """Closed form for U_{m,n}:

        T = sum_{a<m} C(n,a) (x-1)^(m-a) + C(n,m)
          + sum_{a>m} C(n,a) (y-1)^(a-m)

    with the middle binomial absorbed into whichever sum applies at the
    boundary.  Equivalent to the census definition; used as a fast,
    independently coded cross-check.
    """
    if not 0 <= m <= n:
        raise BadParams(f"uniform matroid wants 0 <= m <= n, got ({m},{n})")
    acc = BiPoly.zero()
    for a in range(n + 1):
        c = comb(n, a)
        if a < m:
            p = poly_pow(IntPoly((-1, 1)), m - a).scale(c)
            acc = acc + BiPoly({(d, 0): v for d, v in enumerate(p.coeffs)})
        elif a == m:
            acc = acc + BiPoly.const(c)
        else:
            p = poly_pow(IntPoly((-1, 1)), a - m).scale(c)
            acc = acc + BiPoly({(0, d): v for d, v in enumerate(p.coeffs)})
    return acc


def whitney_R(m: Matroid) -> BiPoly:
    """Whitney rank polynomial R(u, v) = sum_A u^(R-r(A)) v^(|A|-r(A))."""
    _guard(m)
    counts = m.rank_size_counts()
    rfull = m.full_rank()
    terms: dict = {}
    for (a, rho), c in counts.items():
        k = (rfull - rho, a - rho)
        terms[k] = terms.get(k, 0) + c
    return BiPoly(terms)


def chi_from_tutte(m: Matroid) -> IntPoly:
    """chi(z) = (-1)^R T(1-z, 0), by exact substitution."""
    t = tutte(m)
    p = t.substitute(IntPoly((1, -1)), IntPoly.zero())
    return p if m.full_rank() % 2 == 0 else -p


def chi_dual_from_tutte(m: Matroid) -> IntPoly:
    """chi of the dual: (-1)^(n-R) T(0, 1-z)."""
    t = tutte(m)
    p = t.substitute(IntPoly.zero(), IntPoly((1, -1)))
    return p if (m.ground_size - m.full_rank()) % 2 == 0 else -p


def _dedup_parallel(g: MultiGraph) -> MultiGraph:
    """Drop repeated parallel edges and repeated loops, keeping the first
    of each class.  Proper colorings cannot tell the difference, and the
    characteristic polynomial of the cycle matroid is unchanged (deleting
    an element parallel to another adds a loop to the contraction, whose
    chi vanishes)."""
    seen = set()
    out = []
    for u, v in g.edges:
        key = (u, v) if u <= v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        out.append((u, v))
    return MultiGraph(g.n, out)


def chromatic_poly(g: MultiGraph) -> IntPoly:
    """Chromatic polynomial P(x) = x^c(G) * chi of the cycle matroid."""
    gs = _dedup_parallel(g)
    m = make_graphic(gs)
    if m.ground_size <= SUBSET_GUARD:
        chi = chi_from_tutte(m)
    else:
        chi = chi_delcon(m)
    return chi.shift(component_count(g))


def flow_poly(g: MultiGraph) -> IntPoly:
    """Flow polynomial F(x) = chi of the dual of the cycle matroid."""
    return chi_dual_from_tutte(make_graphic(g))


def dichromatic_Q(g: MultiGraph) -> BiPoly:
    """Dichromatic polynomial Q(u, v) = u^c(G) * R(u, v) of the cycle
    matroid; loops and parallel edges all contribute."""
    r = whitney_R(make_graphic(g))
    c = component_count(g)
    return BiPoly({(i + c, j): v for (i, j), v in r.terms.items()})


@dataclass
class InvariantResult:
    """A computed invariant bundled with how it was obtained."""

    name: str
    target: str
    method: str
    poly: object
    meta: dict = field(default_factory=dict)
