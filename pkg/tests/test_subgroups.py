from itertools import combinations

import pytest

from modrep.partitions import Partition, partition
from modrep.perms import compose, cycle_type, from_cycles, identity_perm, order
from modrep.specht import apply_to_tabloid, tabloids
from modrep.subgroups import (ElabSubgroup, OrbitStats, count_fixed_tabloids, k_f_subgroup,
                              maximal_elab_classes, orbit_stats, r_subgroup, standard_E)


def test_standard_e_examples():
    e1 = standard_E(1, 5, 5)
    assert e1.rank == 1 and cycle_type(e1.gens[0]) == [5]
    e3 = standard_E(3, 2, 6)
    assert e3.rank == 3
    assert all(cycle_type(g) == [2, 1, 1, 1, 1] for g in e3.gens)
    e0 = standard_E(0, 3, 6)
    assert e0.rank == 0
    with pytest.raises(ValueError):
        standard_E(4, 2, 6)


def test_k_f_subgroup_examples():
    kf0 = k_f_subgroup(0, 6)
    e3 = standard_E(3, 2, 6)
    assert kf0.gens == e3.gens  # F_0 = E_{n/2}
    kf1 = k_f_subgroup(1, 6)
    assert kf1.rank == 3
    assert orbit_stats(kf1).orbit_sizes == (4, 2)
    k1 = k_f_subgroup(1, 4)
    assert k1.rank == 2 and orbit_stats(k1).orbit_sizes == (4,)
    with pytest.raises(ValueError):
        k_f_subgroup(1, 5)


def test_r_subgroup_is_regular():
    for m, p in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2)]:
        g = r_subgroup(m, p, p**m)
        assert g.rank == m
        st = orbit_stats(g)
        assert st.orbit_sizes == (p**m,)
        # free action: no generator fixes a letter
        for gen in g.gens:
            assert all(gen[i] != i for i in range(p**m))


def test_maximal_classes_examples():
    cls6 = maximal_elab_classes(6, 2)
    assert len(cls6) == 2
    assert sorted(c.rank for c in cls6) == [3, 3]
    assert {tuple(orbit_stats(c).orbit_sizes) for c in cls6} == {(2, 2, 2), (4, 2)}

    cls7 = maximal_elab_classes(7, 3)
    assert len(cls7) == 1
    assert cls7[0].rank == 2
    assert orbit_stats(cls7[0]).a0 == 1

    for p in (2, 3, 5):
        cls = maximal_elab_classes(p, p)
        assert len(cls) == 1 and cls[0].rank == 1

    # n < p: only the trivial group
    cls = maximal_elab_classes(2, 3)
    assert len(cls) == 1 and cls[0].rank == 0


def test_rank_bound_up_to_40():
    for p in (2, 3, 5):
        for n in range(1, 41):
            for cls in maximal_elab_classes(n, p):
                assert cls.rank <= n // p


def test_rank_n_half_classes_are_kf():
    for n in range(2, 17, 2):
        classes = [c for c in maximal_elab_classes(n, 2) if c.rank == n // 2]
        kfs = [k_f_subgroup(ell, n) for ell in range(0, n // 4 + 1)]
        assert len(classes) == len(kfs)
        key = lambda g: tuple(orbit_stats(g).orbit_sizes)
        assert sorted(map(key, classes)) == sorted(map(key, kfs))


def test_generator_validation():
    with pytest.raises(ValueError):
        ElabSubgroup(4, 2, (from_cycles(4, [(1, 2, 3)]),), "bad-order")
    with pytest.raises(ValueError):
        ElabSubgroup(4, 2, (from_cycles(4, [(1, 2)]), from_cycles(4, [(2, 3)])), "non-commuting")
    with pytest.raises(ValueError):
        g = from_cycles(4, [(1, 2)])
        ElabSubgroup(4, 2, (g, g), "dependent")


def test_orbit_stats_examples():
    e2 = standard_E(2, 2, 5)
    st = orbit_stats(e2)
    assert (st.a0, st.a1) == (1, 2)
    k1 = k_f_subgroup(1, 4)
    st = orbit_stats(k1)
    assert (st.a0, st.a1, st.orbit_sizes) == (0, 0, (4,))


def test_count_fixed_tabloids_examples():
    st = OrbitStats(0, 2, (2, 2))
    assert count_fixed_tabloids(partition(2, 2), st) == 2
    assert count_fixed_tabloids(partition(3, 1), st) == 0
    # two-row formula: inserting orbits of E_{(n-p-r)/p} into (n-s, s), s < p
    p, r, a = 5, 3, 5
    n = p * a + p + r
    st = OrbitStats(p + r, a, tuple([p] * a + [1] * (p + r)))
    from math import comb
    for s in range(1, p):
        want = comb(p + r, s)
        assert count_fixed_tabloids(partition(n - s, s), st) == want


def test_fixed_count_formula_p5_instance():
    # m_lambda = C(p+r, p+s) + ((n-p-r)/p) * C(p+r, s) at p=5, s=2, n=33
    p, s, n = 5, 2, 33
    r = n % p
    a = (n - p - r) // p
    st = OrbitStats(p + r, a, tuple([p] * a + [1] * (p + r)))
    got = count_fixed_tabloids(partition(n - p - s, p + s), st)
    assert got == 8 + 5 * 28 == 148


def test_count_fixed_tabloids_vs_brute_force():
    groups = {}
    for n in range(4, 11):
        gs = []
        for p in (2, 3, 5):
            for a in range(1, n // p + 1):
                gs.append(standard_E(a, p, n))
        if n % 2 == 0:
            for ell in range(0, n // 4 + 1):
                gs.append(k_f_subgroup(ell, n))
        for p in (2, 3):
            gs.extend(maximal_elab_classes(n, p))
        groups[n] = gs
    for n, gs in groups.items():
        for g in gs:
            if not g.gens:
                continue
            st = orbit_stats(g)
            for second in range(0, n // 2 + 1):
                lam = partition(n - second, second)
                brute = sum(
                    1 for t in tabloids(lam.parts, n)
                    if all(apply_to_tabloid(gen, t) == t for gen in g.gens)
                )
                assert count_fixed_tabloids(lam, st) == brute, (n, second, g.class_tag)
