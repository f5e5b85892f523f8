"""Unit tests for the duality formulas and the identity checker."""

import random
from fractions import Fraction

import pytest

from corpus import GRAPHS
from matpoly import BadParams, TooLarge
from matpoly.algebra import IntPoly, poly_pow
from matpoly.duality import (
    GRAPH_KINDS,
    IdentityKind,
    _finaltwo_sum,
    chi_contract_table,
    chi_dual_restrict_table,
    chi_dual_via_finaltwo,
    chi_restrict_table,
    flow_via_connected_partitions,
    rank_table,
    subset_zeta,
    superset_zeta,
    verify_identity,
    zeta_q,
)
from matpoly.graphs import MultiGraph, complete_graph
from matpoly.invariants import chi_subset, flow_poly
from matpoly.matroids import make_graphic, make_pg, make_uniform

K3 = complete_graph(3)
K4 = complete_graph(4)


def test_zeta_q_values():
    assert zeta_q(2, 1) == Fraction(2)
    assert zeta_q(2, -1) == Fraction(-1)
    assert zeta_q(3, 1) == Fraction(3, 2)
    assert zeta_q(3, -1) == Fraction(-1, 2)
    assert zeta_q(Fraction(1, 2), 1) == Fraction(-1)
    for q in (2, 3, 5, Fraction(7, 2)):
        assert zeta_q(q, 1) == Fraction(q) / (Fraction(q) - 1)
        assert zeta_q(q, -1) == 1 / (1 - Fraction(q))
    with pytest.raises(BadParams):
        zeta_q(1, 1)
    with pytest.raises(BadParams):
        zeta_q(0, -1)
    with pytest.raises(BadParams):
        zeta_q(2, 2)


def test_zeta_q_functional_equations():
    # zeta_q(z) = -q^z zeta_q(-z) and zeta_q(z) - 1 = -zeta_q(-z),
    # checked at 50 random rationals q outside {0, 1}.
    rng = random.Random(717002)
    seen = set()
    while len(seen) < 50:
        q = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        if q in (0, 1):
            continue
        seen.add(q)
    for q in seen:
        for z in (1, -1):
            assert zeta_q(q, z) == -(q**z) * zeta_q(q, -z)
            assert zeta_q(q, z) - 1 == -zeta_q(q, -z)


def test_zeta_transforms_match_brute_force():
    rng = random.Random(717001)
    for n in (3, 4, 5):
        vals = [rng.randint(-9, 9) for _ in range(1 << n)]
        sub = subset_zeta(list(vals), n)
        sup = superset_zeta(list(vals), n)
        for mask in range(1 << n):
            want_sub = sum(vals[b] for b in range(1 << n) if b & mask == b)
            want_sup = sum(vals[b] for b in range(1 << n) if b & mask == mask)
            assert sub[mask] == want_sub
            assert sup[mask] == want_sup


def test_rank_table():
    m = make_uniform(2, 4)
    t = rank_table(m)
    assert len(t) == 16
    assert all(t[mask] == min(2, mask.bit_count()) for mask in range(16))
    with pytest.raises(TooLarge):
        rank_table(make_uniform(1, 25))


def test_minor_chi_tables_match_direct_computation():
    for m in (make_uniform(2, 4), make_graphic(K3), make_pg(2, 2)):
        n = m.ground_size
        full = m.full_mask
        rt = chi_restrict_table(m)
        ct = chi_contract_table(m)
        dt = chi_dual_restrict_table(m)
        d = m.dual()
        for mask in range(1 << n):
            # rt and dt are indexed by the kept set A; ct by the set
            # contracted away (its ground set is E - A)
            assert rt[mask] == chi_subset(m.restrict(mask)), (m.label, mask)
            assert ct[mask] == chi_subset(m.contract(full & ~mask)), (m.label, mask)
            assert dt[mask] == chi_subset(m.restrict(mask).dual()), (m.label, mask)
            assert dt[mask] == chi_subset(d.contract(mask)), (m.label, mask)


def test_chi_dual_via_finaltwo_matches_subset_expansion():
    targets = [
        make_uniform(2, 4),
        make_uniform(0, 2),
        make_uniform(3, 3),
        make_graphic(K4),
        make_graphic(MultiGraph(2, ((0, 0), (0, 1)))),
        make_pg(2, 3),
    ]
    for m in targets:
        assert chi_dual_via_finaltwo(m) == chi_subset(m.dual()), m.label


def test_chi_dual_via_finaltwo_fano_golden():
    got = chi_dual_via_finaltwo(make_pg(3, 2))
    assert got == IntPoly((13, -28, 21, -7, 1))


def test_finaltwo_mutated_weights_break_the_identity():
    """Replacing the (1-x)^|A| weights by 1 must not reproduce the dual
    characteristic polynomial (guards against a silently wrong weight)."""
    m = make_graphic(K3)
    n = m.ground_size
    ones = [IntPoly.one()] * (n + 1)
    acc = _finaltwo_sum(m, size_weights=ones)
    if n % 2:
        acc = -acc
    want = chi_subset(m.dual())
    # the true weights make acc = x^r * chi(dual); the mutated sum must not
    assert acc != want.shift(m.full_rank())


def test_flow_via_connected_partitions_known_values():
    assert flow_via_connected_partitions(K4) == IntPoly((-6, 11, -6, 1))
    assert flow_via_connected_partitions(K4) == flow_poly(K4)
    loopy = MultiGraph(2, ((0, 0), (0, 1)))
    assert flow_via_connected_partitions(loopy) == flow_poly(loopy)
    disc = MultiGraph(5, ((0, 1), (1, 2), (0, 2), (3, 4)))
    assert flow_via_connected_partitions(disc) == flow_poly(disc)
    with pytest.raises(TooLarge):
        flow_via_connected_partitions(MultiGraph(13, ()))


def test_flow_via_connected_partitions_matches_flow_poly_on_corpus():
    for name, g in GRAPHS:
        assert flow_via_connected_partitions(g) == flow_poly(g), name


def test_verify_identity_passes_on_samples():
    m = make_graphic(K4)
    for kind in IdentityKind:
        target = K4 if kind in GRAPH_KINDS else m
        if kind is IdentityKind.UNIFORM_SPLIT:
            target = make_uniform(2, 4)
        rep = verify_identity(kind, target)
        assert rep.passed, (kind, rep.first_mismatch)
        assert rep.first_mismatch is None
        assert rep.mode in ("exact-polynomial", "sampled-points")
        j = rep.to_json()
        assert j["kind"] == kind.value and j["passed"] is True


def test_verify_identity_accepts_string_kind_and_custom_samples():
    rep = verify_identity("thm1-one", make_uniform(2, 4), samples=[2, 3])
    assert rep.passed and rep.samples == ["q=2", "q=3"]
    rep = verify_identity("kung", make_uniform(1, 2), samples=[2, 3, 2, 3])
    assert rep.passed and len(rep.samples) == 1


def test_verify_identity_failure_is_reported_not_raised():
    rep = verify_identity(IdentityKind.UNIFORM_SPLIT, make_graphic(K4))
    assert not rep.passed
    assert rep.first_mismatch


def test_verify_identity_bad_inputs():
    with pytest.raises(BadParams):
        verify_identity("no-such-identity", make_uniform(1, 2))
    with pytest.raises(BadParams):
        verify_identity(IdentityKind.MATIYASEVICH, make_uniform(1, 2))
    with pytest.raises(BadParams):
        verify_identity(IdentityKind.THM1_ONE, make_uniform(1, 2), samples=[1])
    with pytest.raises(BadParams):
        verify_identity(IdentityKind.KUNG, make_uniform(1, 2), samples=[2, 3])
    with pytest.raises(BadParams):
        verify_identity(IdentityKind.THM1_ONE, "not a matroid")


def test_graph_kinds_accept_multigraphs_only():
    for kind in GRAPH_KINDS:
        rep = verify_identity(kind, K3)
        assert rep.passed, (kind, rep.first_mismatch)


def test_matroid_kinds_wrap_multigraph_targets():
    rep = verify_identity(IdentityKind.CONVOLUTION, K3)
    assert rep.passed
    assert "graphic" in rep.target


def test_uniform_split_holds_only_for_uniforms():
    for m, n in ((0, 1), (1, 1), (2, 3), (3, 5), (4, 4)):
        rep = verify_identity(IdentityKind.UNIFORM_SPLIT, make_uniform(m, n))
        assert rep.passed, (m, n)
    # fails on a rank-preserving non-uniform matroid
    rep = verify_identity(IdentityKind.UNIFORM_SPLIT, make_pg(3, 2))
    assert not rep.passed
