import pytest

import modorder as mo
from modorder.orders import EQUIVALENT_FAMILY

from oracles import brute_minus_dual


# -- regularity ---------------------------------------------------------------


def test_zero_is_always_regular(z6_over_z30, z4_over_z4):
    for ctx in (z6_over_z30, z4_over_z4):
        v = mo.is_regular_element(ctx, 0)
        assert v.holds


def test_regular_element_paper_witness(z6_over_z30):
    v = mo.is_regular_element(z6_over_z30, 2)
    assert v.holds
    m = z6_over_z30.module
    t = v.witness.table
    assert m.act(2, t[2]) == 2


def test_non_regular_element(z4_over_z4):
    assert not mo.is_regular_element(z4_over_z4, 2).holds
    ok, first_bad = mo.is_regular_module(z4_over_z4)
    assert not ok and first_bad == 2
    assert mo.regular_set(z4_over_z4) == {0, 1, 3}


def test_regular_module_corpus(corpus):
    for ctx in corpus.values():
        ok, bad = mo.is_regular_module(ctx)
        assert ok, (ctx.name, bad)


def test_regular_decomposition_paper_example(z6_over_z30):
    phi = next(p for p in z6_over_z30.dual if p.table[1] == 5)
    e, n_set = mo.regular_decomposition(z6_over_z30, 2, phi)
    assert e == 10
    assert n_set.members == {0, 3}


def test_regular_decomposition_zero(z6_over_z30):
    phi = z6_over_z30.dual[0]  # zero functional
    e, n_set = mo.regular_decomposition(z6_over_z30, 0, phi)
    assert e == 0
    assert n_set.members == frozenset(range(6))


def test_regular_decomposition_rejects_non_witness(z6_over_z30):
    phi = z6_over_z30.dual[0]
    with pytest.raises(ValueError):
        mo.regular_decomposition(z6_over_z30, 2, phi)


# -- the minus order, each characterization on its worked examples ------------------


def test_minus_dual_examples(z6_over_z30, z10_over_z10):
    for m2 in range(6):
        assert mo.minus_le_dual(z6_over_z30, 0, m2).holds
    v = mo.minus_le_dual(z6_over_z30, 2, 5)
    assert v.holds and v.witness.table[1] == 20
    assert not mo.minus_le_dual(z10_over_z10, 2, 6).holds


def test_minus_idem_examples(z6_over_z30, z6_over_z6):
    v = mo.minus_le_idem(z6_over_z30, 2, 5)
    assert v.holds and (v.witness.f, v.witness.a) == (4, 10)
    s = z6_over_z30.endos
    assert s.maps[4].table == tuple(4 * x % 6 for x in range(6))
    assert not mo.minus_le_idem(z6_over_z6, 1, 5).holds


def test_minus_idem_reflexive_on_regular(z6_over_z30):
    for m in range(6):
        assert mo.minus_le_idem(z6_over_z30, m, m).holds


def test_minus_idem_flags_non_regular_operand(z4_over_z4):
    v = mo.minus_le_idem(z4_over_z4, 2, 2)
    assert not v.hypothesis_ok          # still decided, just outside the theorem
    assert not v.holds
    v = mo.minus_le_idem(z4_over_z4, 0, 2)
    assert v.hypothesis_ok and v.holds


def test_minus_relaxed_examples(z6_over_z30, z10_over_z10):
    for m2 in range(6):
        v = mo.minus_le_relaxed(z6_over_z30, 0, m2)
        assert v.holds and (v.witness.f, v.witness.a) == (0, 0)
    assert mo.minus_le_relaxed(z6_over_z30, 2, 5).holds
    assert not mo.minus_le_relaxed(z10_over_z10, 2, 6).holds


def test_minus_image_examples(z6_over_z30, z6_over_z6):
    assert mo.minus_le_image(z6_over_z30, 2, 5).holds
    for m in range(6):
        assert mo.minus_le_image(z6_over_z30, m, m).holds
    assert not mo.minus_le_image(z6_over_z6, 3, 4).holds


def test_jones_examples(z6_over_z30, z10_over_z10):
    v = mo.jones_le(z6_over_z30, 2, 5)
    assert v.holds and (v.witness.f, v.witness.a) == (4, 10)
    assert not mo.jones_le(z10_over_z10, 2, 6).holds
    for m in range(6):
        assert mo.jones_le(z6_over_z30, m, m).holds


def test_mitsch_examples(z6_over_z30, z10_over_z10):
    for ctx in (z6_over_z30, z10_over_z10):
        for m in range(ctx.module.size):
            assert mo.mitsch_le(ctx, m, m).holds
    assert mo.mitsch_le(z6_over_z30, 2, 5).holds
    assert not mo.mitsch_le(z10_over_z10, 2, 6).holds


def test_mitsch_sym_agrees_with_mitsch(z6_over_z6, z4_over_z4):
    """The strengthened clause set defines the same relation, on any module."""
    for ctx in (z6_over_z6, z4_over_z4):
        n = ctx.module.size
        for i in range(n):
            for j in range(n):
                assert mo.mitsch_le(ctx, i, j).holds == mo.mitsch_le_sym(ctx, i, j).holds


def test_gb_examples(z6_over_z30, z10_over_z10):
    for m in range(6):
        assert mo.corollary_gb_le(z6_over_z30, m, m).holds
    assert mo.corollary_gb_le(z6_over_z30, 2, 5).holds
    assert not mo.corollary_gb_le(z10_over_z10, 2, 6).holds


def test_direct_sum_examples(z6_over_z30, z10_over_z10):
    v = mo.direct_sum_le(z6_over_z30, 2, 5)
    assert v.holds
    assert v.witness.first == (0, 2, 4) and v.witness.second == (0, 3)
    assert mo.cyclic_submodule(z6_over_z30.module, 5).members == frozenset(range(6))
    for m in range(6):
        assert mo.direct_sum_le(z6_over_z30, m, m).holds
    assert not mo.direct_sum_le(z10_over_z10, 2, 6).holds


def test_dsum_equals_minus_on_regular_pairs_of_nonregular_module(z4_over_z4):
    """Even when the module is not regular, both-regular pairs agree."""
    reg = mo.regular_set(z4_over_z4)
    disagreements = []
    for i in range(4):
        for j in range(4):
            d = mo.direct_sum_le(z4_over_z4, i, j).holds
            m = mo.minus_le_dual(z4_over_z4, i, j).holds
            if i in reg and j in reg:
                assert d == m, (i, j)
            elif d != m:
                disagreements.append((i, j))
    assert (2, 2) in disagreements  # dsum is reflexive there, minus is not


def test_subset_cyclic(z6_over_z30):
    assert mo.subset_cyclic(z6_over_z30, 2, 5)
    assert mo.subset_cyclic(z6_over_z30, 0, 3)
    assert not mo.subset_cyclic(z6_over_z30, 2, 0)


def test_minus_implies_subset_cyclic(corpus):
    for ctx in corpus.values():
        n = ctx.module.size
        for i in range(n):
            for j in range(n):
                if mo.minus_le_dual(ctx, i, j).holds:
                    assert mo.subset_cyclic(ctx, i, j)


def test_cyclic_inclusion_strictly_weaker(z6_over_z6):
    assert mo.subset_cyclic(z6_over_z6, 1, 5)
    assert not mo.minus_le_dual(z6_over_z6, 1, 5).holds


# -- star family ---------------------------------------------------------------


def test_star_matches_minus_under_identity_involutions(z6_over_z6):
    """With identity involutions, projections are exactly the idempotents."""
    for i in range(6):
        for j in range(6):
            expected = mo.minus_le_idem(z6_over_z6, i, j).holds
            for rel in (mo.star_le, mo.left_star_le, mo.right_star_le):
                v = rel(z6_over_z6, i, j)
                assert v.applicable and v.holds == expected


def test_star_witness_flags(z6_over_z30):
    v = mo.star_le(z6_over_z30, 2, 5)
    assert v.holds and v.witness.f_projection and v.witness.a_projection
    assert (v.witness.f, v.witness.a) == (4, 10)


def test_star_trivial_pairs(z6_over_z30):
    for m2 in range(6):
        assert mo.star_le(z6_over_z30, 0, m2).holds


def test_star_implication_chain(z6_over_z30, z10_over_z10, z6_over_z6):
    """star => left-star and right-star; right-star => idempotent form."""
    for ctx in (z6_over_z30, z10_over_z10, z6_over_z6):
        n = ctx.module.size
        for i in range(n):
            for j in range(n):
                if mo.star_le(ctx, i, j).holds:
                    assert mo.left_star_le(ctx, i, j).holds
                    assert mo.right_star_le(ctx, i, j).holds
                if mo.right_star_le(ctx, i, j).holds:
                    assert mo.minus_le_idem(ctx, i, j).holds
                if mo.left_star_le(ctx, i, j).holds:
                    assert mo.minus_le_relaxed(ctx, i, j).holds


def test_star_not_applicable_without_involution(klein_four):
    assert klein_four.endos.involution is None
    for rel, tag in ((mo.star_le, "star"), (mo.left_star_le, "lstar")):
        v = rel(klein_four, 1, 1)
        assert not v.applicable and not v.holds
    # right-star only needs the ring involution, which Z2 has
    assert mo.right_star_le(klein_four, 1, 1).applicable


def test_explicit_involution_on_noncommutative_endo_ring(klein_four):
    """Supplying transpose as the involution on End(F2^2) unlocks the left-star order."""
    import modorder as mo2
    s = klein_four.endos
    inv = []
    for h in s.maps:
        a, c = h.table[1] & 1, h.table[1] >> 1
        b, d = h.table[2] & 1, h.table[2] >> 1
        table = [((a * (x & 1) + c * (x >> 1)) % 2)
                 + 2 * ((b * (x & 1) + d * (x >> 1)) % 2) for x in range(4)]
        inv.append(s.index_of(table))
    ctx = mo2.ModuleContext(klein_four.module, "F2^2-star", endo_involution=inv)
    assert ctx.endos.involution == inv  # ring-core validated it on construction
    for m in range(4):
        v = mo2.left_star_le(ctx, 0, m)
        assert v.applicable and v.holds and v.witness.f_projection
        assert mo2.revalidate(ctx, v)
    assert mo2.star_le(ctx, 1, 1).applicable


def test_vector_space_minus_is_identity_on_nonzero(klein_four):
    """Over a field the minus order collapses to equality away from zero."""
    for i in range(4):
        for j in range(4):
            expected = i == j or i == 0
            assert mo.minus_le_dual(klein_four, i, j).holds == expected


# -- witness replay ------------------------------------------------------------


def test_every_positive_verdict_revalidates(corpus, z4_over_z4, klein_four):
    contexts = list(corpus.values()) + [z4_over_z4, klein_four]
    for ctx in contexts:
        n = ctx.module.size
        for tag in mo.RELATIONS:
            for i in range(n):
                for j in range(n):
                    v = mo.evaluate(ctx, tag, i, j)
                    if v.applicable:
                        assert mo.revalidate(ctx, v), (ctx.name, tag, i, j)


def test_minus_dual_matches_independent_replay(z10_over_z10):
    """Replay the definitional clauses against the enumerated dual, independently."""
    functionals = [phi.table for phi in z10_over_z10.dual]
    m = z10_over_z10.module
    for i in range(10):
        for j in range(10):
            assert (mo.minus_le_dual(z10_over_z10, i, j).holds
                    == brute_minus_dual(m, functionals, i, j))


from hypothesis import given, settings, strategies as st


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=1, max_value=12))
def test_minus_is_partial_order_on_any_zn_over_zn(n):
    """Poset axioms hold on the regular domain of every small Zn over itself."""
    ctx = mo.ModuleContext(mo.build_zm_over_zn(n, n))
    report = mo.check_partial_order(mo.relation_matrix(ctx, "minus-dual"),
                                    mo.regular_set(ctx))
    assert report.outcome == "pass", report.counterexample


def test_evaluate_rejects_bad_input(z6_over_z6):
    with pytest.raises(ValueError):
        mo.evaluate(z6_over_z6, "minus-dual", 0, 6)
    with pytest.raises(ValueError):
        mo.evaluate(z6_over_z6, "nope", 0, 1)


def test_equivalent_family_is_nine():
    assert len(EQUIVALENT_FAMILY) == 9
