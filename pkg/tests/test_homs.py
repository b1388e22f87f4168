import pytest

import modorder as mo
from modorder.homs import ModHom

from oracles import brute_homs, klein_four_tables, zm_over_zn_tables


def test_generating_set_cyclic():
    m = mo.build_zm_over_zn(6, 30)
    assert mo.generating_set(m) == [1]
    r_r = mo.build_ring_as_module(mo.build_zn(10))
    assert mo.generating_set(r_r) == [1]
    assert mo.generating_set(mo.build_zm_over_zn(1, 5)) == []


def test_generating_set_two_generators(klein_four):
    gens = mo.generating_set(klein_four.module)
    assert len(gens) == 2


def test_dual_of_paper_module(z6_over_z30):
    functionals = z6_over_z30.dual
    assert len(functionals) == 6
    assert sorted(phi.table[1] for phi in functionals) == [0, 5, 10, 15, 20, 25]
    for phi in functionals:
        assert phi.is_valid()


def test_dual_of_z10(z10_over_z10):
    assert len(z10_over_z10.dual) == 10
    assert sorted(phi.table[1] for phi in z10_over_z10.dual) == list(range(10))


def test_dual_of_trivial_module():
    ctx = mo.ModuleContext(mo.build_zm_over_zn(1, 5))
    assert len(ctx.dual) == 1


def test_hom_group_contains_zero_and_identity(z6_over_z30):
    m = z6_over_z30.module
    endos = mo.hom_group(m, m)
    tables = [h.table for h in endos]
    assert (0,) * 6 in tables
    assert tuple(range(6)) in tables


def test_hom_from_ring_module_is_module_sized():
    """Hom(R_R, M) has |M| elements, h -> h(1) bijectively."""
    r_r = mo.build_ring_as_module(mo.build_zn(30))
    m = mo.build_zm_over_zn(6, 30)
    homs = mo.hom_group(r_r, m)
    assert len(homs) == m.size
    assert sorted(h.table[1] for h in homs) == list(range(m.size))


def test_hom_rejects_mixed_rings():
    with pytest.raises(ValueError):
        mo.hom_group(mo.build_zm_over_zn(6, 30), mo.build_zm_over_zn(6, 6))


def test_hom_into_trivial_module():
    m = mo.build_zm_over_zn(6, 30)
    out = mo.hom_group(m, mo.build_zm_over_zn(1, 30))
    assert len(out) == 1


def test_endo_ring_of_paper_module(z6_over_z30):
    s = z6_over_z30.endos
    assert s.size == 6
    assert s.maps[s.one].table == (0, 1, 2, 3, 4, 5)
    s.validate(force=True)  # full ring-axiom pass


def test_endo_ring_of_z10_model(z10_over_z10):
    s = z10_over_z10.endos
    assert s.size == 10
    # multiplication maps sorted by table: index d is x -> d*x
    assert all(s.maps[d].table == tuple(d * x % 10 for x in range(10)) for d in range(10))
    assert s.idempotents() == {0, 1, 5, 6}
    # under that indexing S literally carries the Z10 tables
    z10 = mo.build_zn(10)
    assert s.add == z10.add and s.mul == z10.mul


def test_endo_ring_trivial_module():
    s = mo.endo_ring(mo.build_zm_over_zn(1, 5))
    assert s.size == 1 and s.zero == s.one


def test_endo_ring_noncommutative(klein_four):
    s = klein_four.endos
    assert s.size == 16
    assert not s.is_commutative()
    assert s.involution is None  # no automatic involution off the commutative case
    s.validate(force=True)


def test_smash_examples(z6_over_z30):
    m, s = z6_over_z30.module, z6_over_z30.endos
    phi = next(p for p in z6_over_z30.dual if p.table[1] == 5)
    idx = mo.smash(m, s, 2, phi)
    assert s.maps[idx].table == tuple(4 * x % 6 for x in range(6))
    assert mo.smash(m, s, 0, phi) == s.zero


def test_smash_idempotent_on_regular_witness(z6_over_z30):
    m, s = z6_over_z30.module, z6_over_z30.endos
    for x in range(m.size):
        for phi in z6_over_z30.dual:
            if m.act(x, phi.table[x]) == x:
                f = mo.smash(m, s, x, phi)
                assert s.mul[f][f] == f


def test_smash_square_law(z6_over_z30, z10_over_z10):
    """smash(m, phi)^2 = smash(m.phi(m), phi) for every pair."""
    for ctx in (z6_over_z30, z10_over_z10):
        m, s = ctx.module, ctx.endos
        for x in range(m.size):
            for phi in ctx.dual:
                f = mo.smash(m, s, x, phi)
                g = mo.smash(m, s, m.act(x, phi.table[x]), phi)
                assert s.mul[f][f] == g


def test_eval_pair(z6_over_z30):
    phi = next(p for p in z6_over_z30.dual if p.table[1] == 5)
    assert mo.eval_pair(phi, 2) == 10
    assert mo.eval_pair(phi, 0) == 0


def test_left_ann_S(z10_over_z10):
    s = z10_over_z10.endos
    assert mo.left_ann_S(z10_over_z10.module, s, 2) == {0, 5}
    assert mo.left_ann_S(z10_over_z10.module, s, 0) == frozenset(range(10))
    # l_S(m) is a left ideal: closed under post-composition
    for m in range(10):
        ann = mo.left_ann_S(z10_over_z10.module, s, m)
        for f in ann:
            for g in range(s.size):
                assert s.mul[g][f] in ann


def test_image_orbit_and_times(z6_over_z30):
    m, s = z6_over_z30.module, z6_over_z30.endos
    assert mo.image_set(s, s.one).members == frozenset(range(6))
    assert mo.s_orbit(s, 1) == frozenset(range(6))
    assert mo.m_times(m, 0) == {0}


def test_modhom_validation():
    m = mo.build_zm_over_zn(6, 30)
    good = ModHom(m, m, tuple(2 * x % 6 for x in range(6)))
    assert good.is_valid()
    bad = ModHom(m, m, (0, 1, 1, 3, 4, 5))
    assert not bad.is_valid()


# -- dumping S and the dual to the definition-file formats --------------------------


def test_endo_ring_dumps_as_ring_spec(z6_over_z30):
    spec = mo.ring_to_spec(z6_over_z30.endos)
    rebuilt = mo.ring_from_spec(spec)
    assert rebuilt.add == z6_over_z30.endos.add
    assert rebuilt.mul == z6_over_z30.endos.mul


def test_dual_dumps_as_module_spec(z6_over_z30):
    dual_mod = mo.dual_as_module(z6_over_z30.module, z6_over_z30.dual)
    assert dual_mod.size == 6
    rebuilt = mo.module_from_spec(mo.module_to_spec(dual_mod))
    assert rebuilt.add == dual_mod.add and rebuilt.action == dual_mod.action


def test_dual_as_module_rejects_noncommutative_base():
    m = mo.build_ring_as_module(mo.build_matrix_ring(2))
    ctx = mo.ModuleContext(m)
    with pytest.raises(ValueError):
        mo.dual_as_module(m, ctx.dual)


# -- enumeration completeness against the brute-force oracle ------------------------


@pytest.mark.parametrize("m,n", [(1, 5), (2, 2), (4, 4), (6, 6), (6, 30)])
def test_endos_match_brute_force_zmzn(m, n):
    add, action = zm_over_zn_tables(m, n)
    expected = brute_homs(add, action, add, action, m)
    module = mo.build_zm_over_zn(m, n)
    assert [h.table for h in mo.hom_group(module, module)] == expected


def test_endos_match_brute_force_klein(klein_four):
    add, action = klein_four_tables()
    expected = brute_homs(add, action, add, action, 4)
    assert len(expected) == 16
    assert [h.table for h in mo.hom_group(klein_four.module, klein_four.module)] == expected


def test_dual_matches_brute_force_klein(klein_four):
    add, action = klein_four_tables()
    radd = [[0, 1], [1, 0]]
    rmul = [[0, 0], [0, 1]]
    expected = brute_homs(add, action, radd, rmul, 2)
    assert [h.table for h in klein_four.dual] == expected
