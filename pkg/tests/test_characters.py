import math

import numpy as np
import pytest

from permchar import groups
from permchar.characters import (
    Character,
    center_Z,
    character_table,
    induce,
    inner_product,
    inner_product_rational,
    is_monomial,
    is_primitive,
    is_quasi_primitive,
    is_strongly_irreducible,
    kernel,
    n_chi,
    norm_squared,
    permutation_character,
    regular_character,
    restrict,
    table_cache,
    trivial_character,
)
from permchar.errors import NotIrreducible
from permchar.lattice import Subgroup, all_subgroup_classes, normal_subgroups
from permchar.modlin import charpoly_mod, next_prime_congruent, poly_roots_mod


def modular_degree_multiset(G, seed):
    """Independent degree oracle: a random central element of the group
    algebra over a large prime splitting field acts as a scalar on each
    matrix block, so its eigenvalue multiplicities are the squared degrees."""
    q = next_prime_congruent(max(50000, 4 * G.order), 1, G.exponent)
    rng = np.random.default_rng(seed)
    n = G.order
    coeffs = rng.integers(1, q, size=len(G.classes))
    R = np.zeros((n, n), dtype=np.int64)
    everyone = np.arange(n, dtype=np.int32)
    for c, cls in enumerate(G.classes):
        for g in cls.member_set:
            cols = G.bulk_mul(everyone, g)
            R[everyone, cols] += int(coeffs[c])
    roots = poly_roots_mod(charpoly_mod(R % q, q), q)
    if sum(roots.values()) != n:
        return None
    degrees = []
    for _, mult in roots.items():
        d = math.isqrt(mult)
        if d * d != mult:
            return None  # eigenvalue collision between blocks; retry
        degrees.append(d)
    return sorted(degrees)


# -- table validity -------------------------------------------------------------


def test_c2_table_rows():
    G = groups.cyclic(2)
    tab = character_table(G)
    rows = [[tab.chars[s].value(c) for c in range(2)] for s in range(2)]
    assert rows[0] == [1, 1]
    assert rows[1] == [1, -1]


def test_dihedral6_degrees_against_regular_decomposition(dih6):
    tab = character_table(dih6)
    assert sorted(int(d) for d in tab.degrees) == [1, 1, 2]
    reg = regular_character(dih6)
    # oracle: the regular character decomposes with multiplicity chi(1)
    for chi in tab.chars:
        assert inner_product_rational(reg, chi) == chi.degree


def test_gl23_degrees_against_modular_oracle(gl23):
    tab = character_table(gl23)
    got = sorted(int(d) for d in tab.degrees)
    assert got == [1, 1, 2, 2, 2, 3, 3, 4]
    assert len(gl23.classes) == 8
    oracle = None
    for seed in range(5):
        oracle = modular_degree_multiset(gl23, seed)
        if oracle is not None:
            break
    assert oracle == got


@pytest.mark.parametrize(
    "name",
    ["cyclic(12)", "abelian(2,2,3)", "dihedral(10)", "frobenius(11,5)", "extraspecial(3)"],
)
def test_degree_squares_sum_and_orthogonality(name):
    G = groups.by_name(name)
    tab = character_table(G)
    assert sum(int(d) ** 2 for d in tab.degrees) == G.order
    for i, a in enumerate(tab.chars):
        for j, b in enumerate(tab.chars):
            assert inner_product_rational(a, b) == (1 if i == j else 0)
    assert all(G.order % int(d) == 0 for d in tab.degrees)


def test_first_row_trivial(frob73):
    tab = character_table(frob73)
    assert tab.chars[0] == trivial_character(frob73)


# -- inner products --------------------------------------------------------------


def test_trivial_self_inner_product(dih6):
    one = trivial_character(dih6)
    assert inner_product_rational(one, one) == 1


def test_regular_decomposition(fr53):
    tab = character_table(fr53)
    reg = regular_character(fr53)
    for chi in tab.chars[:5]:
        assert inner_product_rational(reg, chi) == chi.degree


def test_modular_decompose_matches_exact(frob73):
    cache = table_cache(frob73)
    tab = cache.root
    f = tab.chars[3] + tab.chars[1]
    mults = cache.decompose(f)
    for s, chi in enumerate(tab.chars):
        assert mults[s] == inner_product_rational(f, chi)


# -- induction and restriction ----------------------------------------------------


def test_induced_trivial_is_permutation_character(fr53):
    cache = table_cache(fr53)
    u15 = next(c for c in all_subgroup_classes(fr53) if c.order == 15).rep
    st = cache.for_subgroup(u15)
    ind = induce(trivial_character(st.H), st)
    assert ind == permutation_character(fr53, u15)


def test_linear_of_c7_induces_irreducible_of_frobenius(frob73):
    cache = table_cache(frob73)
    c7 = next(n for n in normal_subgroups(frob73) if n.order == 7)
    st = cache.for_subgroup(c7)
    lam = st.table.chars[1]
    assert lam.degree == 1 and lam != trivial_character(st.H)
    ind = induce(lam, st)
    assert ind.value(0) == 3
    assert inner_product_rational(ind, ind) == 1


def test_restrict_then_induce_whole_group_is_identity(dih6):
    cache = table_cache(dih6)
    whole = Subgroup.from_members(dih6, range(dih6.order))
    st = cache.for_subgroup(whole)
    chi = cache.root.chars[2]
    assert induce(restrict(chi, st), st) == chi


def test_frobenius_reciprocity_exact(frob73):
    cache = table_cache(frob73)
    c7 = next(n for n in normal_subgroups(frob73) if n.order == 7)
    st = cache.for_subgroup(c7)
    for theta in st.table.chars:
        for chi in cache.root.chars:
            lhs = inner_product_rational(induce(theta, st), chi)
            rhs = inner_product_rational(
                theta, restrict(chi, st).at_conductor(cache.G.exponent)
            )
            assert lhs == rhs


# -- permutation characters --------------------------------------------------------


def test_permutation_character_whole_group(dih6):
    whole = Subgroup.from_members(dih6, range(dih6.order))
    assert permutation_character(dih6, whole) == trivial_character(dih6)


def test_permutation_character_trivial_subgroup(dih6):
    triv = Subgroup.from_members(dih6, [0])
    assert permutation_character(dih6, triv) == regular_character(dih6)


def test_permutation_character_degree_is_index(fr53):
    u15 = next(c for c in all_subgroup_classes(fr53) if c.order == 15).rep
    pc = permutation_character(fr53, u15)
    assert pc.value(0) == 25
    # fixed-point counts are non-negative integers
    assert all(v.is_integer and v.int_value() >= 0 for v in pc.values())


# -- norm squared -------------------------------------------------------------------


def test_norm_squared_at_identity(gl23):
    tab = character_table(gl23)
    for chi in tab.chars:
        assert norm_squared(chi, 0).int_value() == chi.degree ** 2


def _primitive_degree2(gl23):
    cache = table_cache(gl23)
    for chi in cache.root.chars:
        if chi.degree == 2 and is_primitive(chi, cache)[0]:
            return chi
    raise AssertionError("no primitive degree-2 character found")


def test_gl23_primitive_square_of_order8_vanishes(gl23):
    chi = _primitive_degree2(gl23)
    y = next(i for i in range(gl23.order) if gl23.element_order(i) == 8)
    y2 = gl23.mul(y, y)
    assert norm_squared(chi, y).int_value() != 0
    assert norm_squared(chi, y2).int_value() == 0
    x = next(i for i in range(gl23.order) if gl23.element_order(i) == 3)
    assert norm_squared(chi, x).int_value() != 0


def test_frobenius_degree3_norm_at_order7(frob73):
    tab = character_table(frob73)
    chi = next(c for c in tab.chars if c.degree == 3)
    x = next(i for i in range(frob73.order) if frob73.element_order(i) == 7)
    # |(-1 +- sqrt(-7))/2|^2 = 2, from the brute-force table
    assert norm_squared(chi, x).int_value() == 2


# -- kernel and center ----------------------------------------------------------------


def test_kernel_center_of_trivial(dih6):
    one = trivial_character(dih6)
    assert kernel(one).order == dih6.order
    assert center_Z(one).order == dih6.order


def test_center_of_faithful_abelian_character():
    G = groups.cyclic(6)
    tab = character_table(G)
    faithful = next(
        c for c in tab.chars if kernel(c).order == 1
    )
    assert center_Z(faithful).order == G.order


def test_fullyramified_degree5_center(fr53):
    tab = character_table(fr53)
    chi = next(c for c in tab.chars if c.degree == 5)
    z = center_Z(chi)
    assert z.order == 5
    assert z.members == frozenset(fr53.center_indices())


# -- predicates ---------------------------------------------------------------------


def test_linear_characters_quasi_primitive(dih6):
    cache = table_cache(dih6)
    for chi in cache.root.chars:
        if chi.degree == 1:
            ok, witness = is_quasi_primitive(chi, cache)
            assert ok and witness is None
            assert is_primitive(chi, cache)[0]
            assert is_strongly_irreducible(chi, cache)


def test_frobenius_degree3_not_quasi_primitive(frob73):
    cache = table_cache(frob73)
    chi = next(c for c in cache.root.chars if c.degree == 3)
    ok, witness = is_quasi_primitive(chi, cache)
    assert not ok
    assert witness.order == 7
    prim, pw = is_primitive(chi, cache)
    assert not prim
    mcls, s = pw
    assert mcls.order == 7
    assert not is_strongly_irreducible(chi, cache)


def test_fullyramified_degree5_quasi_primitive(fr53):
    cache = table_cache(fr53)
    chi = next(c for c in cache.root.chars if c.degree == 5)
    assert is_quasi_primitive(chi, cache) == (True, None)
    assert is_primitive(chi, cache)[0]
    assert is_strongly_irreducible(chi, cache)


def test_gl23_degree2_primitive(gl23):
    chi = _primitive_degree2(gl23)
    cache = table_cache(gl23)
    assert is_quasi_primitive(chi, cache)[0]


def test_predicates_reject_reducible(dih6):
    cache = table_cache(dih6)
    tab = cache.root
    v = tab.chars[0].V + tab.chars[1].V
    fake = Character(dih6, v, tab.conductor, is_irreducible=False)
    with pytest.raises(NotIrreducible):
        is_quasi_primitive(fake, cache)


def test_monomial_detection(frob73):
    cache = table_cache(frob73)
    chi = next(c for c in cache.root.chars if c.degree == 3)
    ok, (sub, s) = is_monomial(chi, cache)
    assert ok and sub.order == 7


# -- n_chi -------------------------------------------------------------------------


def test_n_chi_of_trivial_is_exponent(fr53):
    assert n_chi(trivial_character(fr53)) == fr53.exponent


def test_gl23_primitive_n_chi_is_24(gl23):
    chi = _primitive_degree2(gl23)
    assert n_chi(chi) == 24


def test_frobenius_degree3_n_chi(frob73):
    tab = character_table(frob73)
    chi = next(c for c in tab.chars if c.degree == 3)
    assert n_chi(chi) == 7
    assert n_chi(chi) == frob73.order // chi.degree


# -- Berger cross-check on a sample -------------------------------------------------


@pytest.mark.parametrize("name", ["dihedral(6)", "frobenius(7,3)", "gl23", "cyclic(12)"])
def test_quasi_primitive_iff_primitive_solvable(name):
    G = groups.by_name(name)
    cache = table_cache(G)
    for chi in cache.root.chars:
        assert is_quasi_primitive(chi, cache)[0] == is_primitive(chi, cache)[0]
