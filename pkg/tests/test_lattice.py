import pytest

from permchar import groups
from permchar import groups as groupmod
from permchar.errors import NotChiefFactor
from permchar.lattice import (
    CoverAvoid,
    all_subgroup_classes,
    chief_series,
    core,
    cover_or_avoid,
    is_p_solvable,
    is_solvable,
    lattice,
    maximal_subgroup_classes,
    normal_subgroups,
)

from conftest import brute_subgroups


def _class_orders(G):
    return sorted(c.order for c in all_subgroup_classes(G))


# -- enumeration --------------------------------------------------------------


def test_cyclic6_subgroup_classes():
    G = groups.cyclic(6)
    assert _class_orders(G) == [1, 2, 3, 6]


def test_dihedral6_subgroup_classes_against_brute_force(dih6):
    # oracle: brute-force closure over all subsets of at most 2 generators
    subs = brute_subgroups(dih6)
    assert len(subs) == 6  # 1, three C2's, C3, G
    assert _class_orders(dih6) == [1, 2, 3, 6]
    c2 = next(c for c in all_subgroup_classes(dih6) if c.order == 2)
    assert c2.size == 3


def test_frobenius73_subgroup_classes(frob73):
    assert _class_orders(frob73) == [1, 3, 7, 21]


def test_lattice_covers_all_subgroups_small():
    # oracle at tiny orders: every brute-force subgroup appears as a conjugate
    for name in ["cyclic(12)", "dihedral(10)", "abelian(2,2,3)", "gl23"]:
        G = groups.by_name(name)
        brute = brute_subgroups(G)
        lat = lattice(G)
        listed = {conj for c in lat.classes for conj in c.conjugates}
        assert listed == {
            frozenset(G.index_of(p) for p in sub) for sub in brute
        }


def test_class_size_is_normalizer_index(fr53):
    lat = lattice(fr53)
    for cls in lat.classes:
        assert cls.size == fr53.order // cls.normalizer.order
        assert all(len(conj) == cls.order for conj in cls.conjugates)


def test_lagrange(fr53):
    for cls in all_subgroup_classes(fr53):
        assert fr53.order % cls.order == 0


# -- maximal subgroups --------------------------------------------------------


def test_cyclic12_maximal_classes():
    G = groups.cyclic(12)
    assert sorted(c.order for c in maximal_subgroup_classes(G)) == [4, 6]


def test_dihedral6_maximal_classes(dih6):
    assert sorted(c.order for c in maximal_subgroup_classes(dih6)) == [2, 3]


def test_fullyramified_maximal_classes(fr53):
    orders = sorted(c.order for c in maximal_subgroup_classes(fr53))
    assert orders == [15, 125]


# -- normal subgroups ---------------------------------------------------------


def test_normals_of_prime_cyclic():
    G = groups.cyclic(5)
    assert [N.order for N in normal_subgroups(G)] == [1, 5]


def test_normals_of_dihedral6(dih6):
    assert [N.order for N in normal_subgroups(dih6)] == [1, 3, 6]


def test_normals_of_fullyramified(fr53):
    assert [N.order for N in normal_subgroups(fr53)] == [1, 5, 125, 375]


def test_normals_against_brute_force(gl23):
    brute = {
        frozenset(gl23.index_of(p) for p in sub)
        for sub in brute_subgroups(gl23)
        if gl23.is_normal_set(frozenset(gl23.index_of(p) for p in sub))
    }
    assert {N.members for N in normal_subgroups(gl23)} == brute
    assert [N.order for N in normal_subgroups(gl23)] == [1, 2, 8, 24, 48]


# -- core ----------------------------------------------------------------------


def test_core_of_normal_is_itself(dih6):
    N = next(n for n in normal_subgroups(dih6) if n.order == 3)
    assert core(dih6, N).members == N.members


def test_core_of_reflection_subgroup_is_trivial(dih6):
    c2 = next(c for c in all_subgroup_classes(dih6) if c.order == 2)
    assert core(dih6, c2.rep).order == 1


def test_core_of_complement_in_fullyramified(fr53):
    u15 = next(c for c in all_subgroup_classes(fr53) if c.order == 15)
    N = core(fr53, u15.rep)
    assert N.order == 5
    assert N.members == frozenset(fr53.center_indices())


# -- chief series ---------------------------------------------------------------


def test_chief_series_cyclic12():
    G = groups.cyclic(12)
    assert sorted(chief_series(G).factor_orders()) == [2, 2, 3]


def test_chief_series_dihedral6(dih6):
    assert [s.order for s in chief_series(dih6).chain] == [1, 3, 6]


def test_chief_series_fullyramified(fr53):
    series = chief_series(fr53)
    assert [s.order for s in series.chain] == [1, 5, 125, 375]
    assert series.factor_orders() == [5, 25, 3]


def test_chief_factors_elementary_abelian(fr53):
    from permchar.perm import prime_factors

    lat = lattice(fr53)
    for L, K in lat.chief.factors():
        assert lat.factor_is_abelian(L, K)
        size = K.order // L.order
        (p,) = prime_factors(size)
        powp = fr53.pow_map(p)
        # exponent p: every p-th power of a section element falls into L
        assert all(int(powp[k]) in L.members for k in K.members)


# -- cover / avoid ---------------------------------------------------------------


def test_cover_avoid_dihedral6(dih6):
    lat = lattice(dih6)
    triv = lat.normals[0]
    c3 = next(n for n in lat.normals if n.order == 3)
    u3 = next(c for c in all_subgroup_classes(dih6) if c.order == 3).rep
    u2 = next(c for c in all_subgroup_classes(dih6) if c.order == 2).rep
    assert cover_or_avoid(u3, c3, triv) == CoverAvoid.COVERS
    assert cover_or_avoid(u2, c3, triv) == CoverAvoid.AVOIDS


def test_cover_avoid_fullyramified(fr53):
    lat = lattice(fr53)
    z = next(n for n in lat.normals if n.order == 5)
    e = next(n for n in lat.normals if n.order == 125)
    u15 = next(c for c in all_subgroup_classes(fr53) if c.order == 15).rep
    assert cover_or_avoid(u15, e, z) == CoverAvoid.AVOIDS


def test_cover_avoid_rejects_non_chief_factor(dih6):
    lat = lattice(dih6)
    triv = lat.normals[0]
    whole = next(n for n in lat.normals if n.order == 6)
    u2 = next(c for c in all_subgroup_classes(dih6) if c.order == 2).rep
    with pytest.raises(NotChiefFactor):
        cover_or_avoid(u2, whole, triv)


# -- solvability -------------------------------------------------------------------


@pytest.mark.parametrize("name", ["abelian(2,2,3)", "cyclic(12)", "dihedral(6)"])
def test_abelian_and_small_groups_solvable(name):
    G = groups.by_name(name)
    assert is_solvable(G)
    for p in (2, 3, 5):
        assert is_p_solvable(G, p)


def test_gl23_solvable(gl23):
    assert is_solvable(gl23)
    assert is_p_solvable(gl23, 2)
    assert is_p_solvable(gl23, 3)


# -- avoid-exactly-one property (maximal subgroups vs chief series) ------------


@pytest.mark.parametrize(
    "name", ["dihedral(6)", "cyclic(12)", "frobenius(7,3)", "fullyramified(5,3)", "gl23"]
)
def test_maximal_avoids_exactly_one_chief_factor(name):
    G = groups.by_name(name)
    lat = lattice(G)
    for cls in lat.maximal_classes():
        M = cls.rep
        verdicts = [
            cover_or_avoid(M, K, L) for L, K in lat.chief.factors()
        ]
        assert verdicts.count(CoverAvoid.AVOIDS) == 1
        assert verdicts.count(CoverAvoid.COVERS) == len(verdicts) - 1


def test_alternating5_lattice_via_join_completion():
    # non-solvable input: cyclic extension reaches all solvable subgroups
    # and the join pass adds the perfect ones
    G = groupmod.from_spec(
        {
            "name": "alt5",
            "degree": 5,
            "generators": [[[1, 2, 3, 4, 5]], [[1, 2, 3]]],
        }
    )
    assert G.order == 60
    assert not is_solvable(G)
    orders = sorted(c.order for c in all_subgroup_classes(G))
    assert orders == [1, 2, 3, 4, 5, 6, 10, 12, 60]
    total = sum(c.size for c in all_subgroup_classes(G))
    assert total == 59  # classic subgroup count of the icosahedral group


def test_conjugate_maximals_have_equal_cores_iff_conjugate(fr53):
    # equal cores <=> same class, over maximal classes
    lat = lattice(fr53)
    maxcls = lat.maximal_classes()
    cores = [lat.core(c.rep.members).members for c in maxcls]
    for i, a in enumerate(cores):
        for j, b in enumerate(cores):
            assert (a == b) == (i == j)
