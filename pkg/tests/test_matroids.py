"""Unit tests for matroid rank oracles, views, and enumeration."""

import random
from collections import Counter
from time import monotonic

import pytest

from matpoly import BadParams, BudgetExceeded, TooLarge
from matpoly.graphs import MultiGraph, complete_graph
from matpoly.matroids import (
    ContractView,
    DualView,
    RestrictView,
    TableMatroid,
    circuits,
    flats_of_rank,
    is_prime,
    make_graphic,
    make_pg,
    make_uniform,
)

from corpus import GRAPHS, all_matroids, small_matroids


def brute_census(m):
    c = Counter()
    for mask in range(1 << m.ground_size):
        c[(mask.bit_count(), m.rank(mask))] += 1
    return c


def test_uniform_rank_and_validation():
    u = make_uniform(2, 5)
    assert u.full_rank() == 2
    assert u.rank(0) == 0
    assert u.rank(0b10001) == 2
    assert u.rank(0b00001) == 1
    with pytest.raises(BadParams):
        make_uniform(3, 2)
    with pytest.raises(BadParams):
        make_uniform(-1, 2)


def test_rank_rejects_masks_outside_ground_set():
    u = make_uniform(1, 3)
    with pytest.raises(BadParams):
        u.rank(1 << 3)
    with pytest.raises(BadParams):
        u.rank(-1)


def test_graphic_rank_known_values():
    k4 = make_graphic(complete_graph(4))
    assert k4.full_rank() == 3
    assert k4.rank(0b001011) == 2  # triangle on vertices {0,1,2}
    assert k4.rank(0b000111) == 3  # star at vertex 0
    loop = make_graphic(MultiGraph(1, ((0, 0),)))
    assert loop.full_rank() == 0
    par = make_graphic(MultiGraph(2, ((0, 1), (0, 1), (0, 1))))
    assert par.full_rank() == 1
    assert par.rank(0b110) == 1


def test_loops_and_coloops():
    g = make_graphic(MultiGraph(2, ((0, 0), (0, 1))))
    assert g.is_loop(0) and not g.is_loop(1)
    assert g.is_coloop(1) and not g.is_coloop(0)
    assert g.loops_mask() == 0b01
    assert g.coloops_mask() == 0b10
    # duality swaps the two notions
    d = g.dual()
    assert d.loops_mask() == 0b10
    assert d.coloops_mask() == 0b01


def test_rank_axioms_on_corpus():
    rng = random.Random(616001)
    for m in small_matroids(10):
        full = m.full_mask
        for _ in range(40):
            a = rng.randrange(full + 1)
            b = rng.randrange(full + 1)
            ra, rb = m.rank(a), m.rank(b)
            assert 0 <= ra <= a.bit_count()
            assert m.rank(a | b) >= max(ra, rb)  # monotone
            assert m.rank(a | b) + m.rank(a & b) <= ra + rb  # submodular


def test_dual_rank_formula_and_involution():
    rng = random.Random(616002)
    for m in small_matroids(10):
        d = m.dual()
        dd = d.dual()
        full = m.full_mask
        r_full = m.full_rank()
        for _ in range(30):
            a = rng.randrange(full + 1)
            assert d.rank(a) == m.rank(full & ~a) + a.bit_count() - r_full
            assert dd.rank(a) == m.rank(a)
        assert d.full_rank() == m.ground_size - r_full


def test_dual_of_uniform_is_complementary_uniform():
    for m in range(0, 5):
        for n in range(m, 6):
            d = make_uniform(m, n).dual()
            u = make_uniform(n - m, n)
            for mask in range(1 << n):
                assert d.rank(mask) == u.rank(mask)


def test_restrict_and_contract_views():
    m = make_graphic(complete_graph(4))
    keep = 0b011011
    sub = m.restrict(keep)
    con = m.contract(keep)
    elems = [e for e in range(6) if keep >> e & 1]
    off = m.full_mask & ~keep
    assert sub.ground_size == len(elems) == con.ground_size
    for mask in range(1 << len(elems)):
        lifted = 0
        for i, e in enumerate(elems):
            if mask >> i & 1:
                lifted |= 1 << e
        assert sub.rank(mask) == m.rank(lifted)
        assert con.rank(mask) == m.rank(off | lifted) - m.rank(off)
    with pytest.raises(BadParams):
        m.restrict(1 << 6)
    with pytest.raises(BadParams):
        ContractView(m, 1 << 6)


def test_minor_duality_laws():
    """(M|A)* has the ranks of M*.A, and (M.A)* those of M*|A."""
    rng = random.Random(616003)
    for m in small_matroids(9):
        for _ in range(6):
            a = rng.randrange(m.full_mask + 1)
            k = a.bit_count()
            pairs = [
                (m.restrict(a).dual(), m.dual().contract(a)),
                (m.contract(a).dual(), m.dual().restrict(a)),
            ]
            for left, right in pairs:
                assert left.ground_size == k == right.ground_size
                for mask in range(1 << k):
                    assert left.rank(mask) == right.rank(mask)


def test_graphic_minors_match_generic_views():
    rng = random.Random(616004)
    for name, g in GRAPHS:
        m = make_graphic(g)
        if m.ground_size > 8:
            continue
        for _ in range(5):
            a = rng.randrange(m.full_mask + 1)
            k = a.bit_count()
            fast_r, slow_r = m.restrict(a), RestrictView(m, a)
            fast_c, slow_c = m.contract(a), ContractView(m, a)
            for mask in range(1 << k):
                assert fast_r.rank(mask) == slow_r.rank(mask), name
                assert fast_c.rank(mask) == slow_c.rank(mask), name


def test_pg_construction():
    fano = make_pg(3, 2)
    assert fano.ground_size == 7
    assert fano.full_rank() == 3
    assert make_pg(2, 3).ground_size == 4
    assert make_pg(2, 2).ground_size == 3
    with pytest.raises(BadParams):
        make_pg(3, 4)  # field order must be prime
    with pytest.raises(BadParams):
        make_pg(0, 2)


def test_is_prime():
    assert [p for p in range(2, 20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1)
    assert not is_prime(0)


def test_fano_independent_triples():
    fano = make_pg(3, 2)
    from itertools import combinations

    indep = 0
    for combo in combinations(range(7), 3):
        mask = sum(1 << e for e in combo)
        if fano.rank(mask) == 3:
            indep += 1
    assert indep == 28  # 35 triples minus the 7 lines


def test_census_matches_brute_force():
    for m in small_matroids(9):
        assert m.rank_size_counts() == brute_census(m)
        assert m.dual().rank_size_counts() == brute_census(m.dual())


def test_census_deadline_base_class():
    u = make_uniform(3, 16)
    with pytest.raises(BudgetExceeded):
        u.rank_size_counts(deadline=monotonic() - 1.0)


def test_census_deadline_graphic_scan():
    k7 = make_graphic(complete_graph(7))
    with pytest.raises(BudgetExceeded):
        k7.rank_size_counts(deadline=monotonic() - 1.0)


def test_table_matroid_accepts_valid_and_rejects_invalid():
    u12 = TableMatroid(2, [0, 1, 1, 1])
    assert u12.rank(0b11) == 1
    with pytest.raises(BadParams):
        TableMatroid(2, [0, 1, 1])  # wrong length
    with pytest.raises(BadParams):
        TableMatroid(1, [1, 1])  # rank(empty) != 0
    with pytest.raises(BadParams):
        TableMatroid(2, [0, 1, 1, 3])  # exceeds cardinality bound
    with pytest.raises(BadParams):
        TableMatroid(2, [0, 1, 1, 0])  # not monotone
    with pytest.raises(BadParams):
        TableMatroid(2, [0, 0, 0, 1])  # fails submodularity on {e0},{e1}
    # the free matroid on 2 elements is fine
    assert TableMatroid(2, [0, 1, 1, 2]).full_rank() == 2


def test_circuits_known_matroids():
    assert circuits(make_uniform(2, 3)) == [0b111]
    assert circuits(make_uniform(3, 3)) == []
    par = make_graphic(MultiGraph(2, ((0, 1), (0, 1), (0, 1))))
    assert circuits(par) == [0b011, 0b101, 0b110]
    loop = make_graphic(MultiGraph(2, ((0, 0), (0, 1))))
    assert circuits(loop) == [0b01]
    k3 = make_graphic(complete_graph(3))
    assert circuits(k3) == [0b111]
    fano_sizes = Counter(c.bit_count() for c in circuits(make_pg(3, 2)))
    assert fano_sizes == Counter({3: 7, 4: 7})
    with pytest.raises(TooLarge):
        circuits(make_uniform(1, 21))


def test_flats_of_rank():
    fano = make_pg(3, 2)
    assert [len(flats_of_rank(fano, k)) for k in range(4)] == [1, 7, 7, 1]
    assert all(m.bit_count() == 3 for m in flats_of_rank(fano, 2))
    u23 = make_uniform(2, 3)
    assert flats_of_rank(u23, 0) == [0]
    assert len(flats_of_rank(u23, 1)) == 3
    assert flats_of_rank(u23, 2) == [0b111]
    assert flats_of_rank(u23, 5) == []
    # a loop sits inside every flat
    loopy = make_graphic(MultiGraph(2, ((0, 0), (0, 1))))
    assert flats_of_rank(loopy, 0) == [0b01]
