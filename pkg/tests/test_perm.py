import pytest
from hypothesis import given, settings, strategies as st

from permchar import groups
from permchar.errors import (
    CapExceeded,
    ElementNotInGroup,
    InvalidPermutation,
    NotNormal,
    NotPrime,
)
from permchar.perm import (
    Group,
    Permutation,
    centralizer,
    conjugacy_classes,
    group_from_generators,
    quotient_group,
)

from conftest import brute_closure, brute_conjugacy_classes


# -- Permutation basics -------------------------------------------------------


def test_invalid_images_rejected():
    with pytest.raises(InvalidPermutation):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidPermutation):
        Permutation([0, 3, 1])


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(6))), st.permutations(list(range(6))))
def test_permutation_group_axioms(a, b):
    pa, pb = Permutation(a), Permutation(b)
    ident = Permutation.identity(6)
    assert pa * pa.inverse() == ident
    assert (pa * pb).inverse() == pb.inverse() * pa.inverse()
    assert pa * ident == pa


def test_from_cycles_one_based():
    p = Permutation.from_cycles(4, [[1, 2, 3, 4]])
    assert p.images == (1, 2, 3, 0)
    q = Permutation.from_cycles(4, [[1, 2], [3, 4]])
    assert q.images == (1, 0, 3, 2)


def test_cycle_string_roundtrip():
    p = Permutation.from_cycles(5, [[1, 3, 2]])
    assert p.cycle_string() == "(1 3 2)"
    assert p.order() == 3


# -- closure ------------------------------------------------------------------


def test_cyclic_four_from_generator():
    G = group_from_generators(4, [Permutation([1, 2, 3, 0])], cap=10)
    assert G.order == 4


def test_gl23_order_matches_paper_value(gl23):
    assert gl23.order == 48


def test_fullyramified_order_by_independent_closure(fr53):
    # oracle: breadth-first product saturation over raw permutations
    els = brute_closure(fr53.degree, list(fr53.generators))
    assert len(els) == 375
    assert fr53.order == 375


def test_cap_enforced():
    with pytest.raises(CapExceeded):
        group_from_generators(7, [Permutation([1, 2, 3, 4, 5, 6, 0])], cap=3)


def test_index_roundtrip(dih6):
    for i in range(dih6.order):
        assert dih6.index_of(dih6.permutation(i)) == i
    C4 = groups.cyclic(4)
    with pytest.raises(ElementNotInGroup):
        C4.index_of(Permutation.from_cycles(4, [[1, 2]]))


def test_mul_matches_permutation_product(dih6):
    for i in range(dih6.order):
        for j in range(dih6.order):
            expected = dih6.permutation(i) * dih6.permutation(j)
            assert dih6.permutation(dih6.mul(i, j)) == expected


def test_bulk_ops_match_scalar(fr53):
    idx = list(range(0, fr53.order, 17))
    j = 5
    bulk = fr53.bulk_mul(idx, j)
    assert [int(v) for v in bulk] == [fr53.mul(i, j) for i in idx]
    p7 = fr53.pow_map(3)
    for i in idx:
        assert int(p7[i]) == fr53.power(i, 3)


# -- conjugacy classes --------------------------------------------------------


def test_abelian_classes_are_singletons():
    G = groups.cyclic(3)
    cls = conjugacy_classes(G)
    assert len(cls) == 3
    assert all(c.size == 1 for c in cls)


def test_dihedral6_class_sizes_against_brute_force(dih6):
    oracle = brute_conjugacy_classes(
        [dih6.permutation(i) for i in range(dih6.order)]
    )
    assert sorted(len(c) for c in oracle) == [1, 2, 3]
    assert sorted(c.size for c in dih6.classes) == [1, 2, 3]


def test_gl23_has_eight_classes_against_brute_force(gl23):
    oracle = brute_conjugacy_classes([gl23.permutation(i) for i in range(48)])
    assert len(oracle) == 8
    assert len(gl23.classes) == 8


def test_class_equation(fr53):
    sizes = [c.size for c in fr53.classes]
    assert sum(sizes) == fr53.order
    assert all(fr53.order % s == 0 for s in sizes)
    for c in fr53.classes:
        assert c.size * c.centralizer_order == fr53.order
        assert c.rep in c.member_set


def test_power_map_well_defined(dih6):
    pm = dih6.power_maps()
    for cid, c in enumerate(dih6.classes):
        assert pm[cid][1 % c.element_order] == cid if c.element_order > 1 else True
        # power map computed from any member agrees with the rep
        for m in range(c.element_order):
            for member in c.member_set:
                assert dih6.class_index(dih6.power(member, m)) == pm[cid][m]


# -- p-parts ------------------------------------------------------------------


def test_p_part_crt_exponents():
    G = groups.cyclic(6)
    x = G.gen_indices[0]
    assert G.p_part(x, 2) == G.power(x, 3)
    G8 = groups.cyclic(8)
    x8 = G8.gen_indices[0]
    assert G8.p_part(x8, 2) == x8
    G15 = groups.cyclic(15)
    x15 = G15.gen_indices[0]
    assert G15.p_part(x15, 3) == G15.power(x15, 10)


def test_p_part_rejects_composite(dih6):
    with pytest.raises(NotPrime):
        dih6.p_part(1, 6)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_p_part_properties(data):
    G = data.draw(
        st.sampled_from(
            [groups.dihedral(6), groups.frobenius(7, 3), groups.cyclic(12), groups.gl23()]
        )
    )
    i = data.draw(st.integers(0, G.order - 1))
    p = data.draw(st.sampled_from([2, 3, 5, 7]))
    xp = G.p_part(i, p)
    xq = G.p_prime_part(i, p)
    # commuting factorization x = x_p * x_p'
    assert G.mul(xp, xq) == i
    assert G.mul(xq, xp) == i
    o = G.element_order(i)
    op = G.element_order(xp)
    # o(x_p) is the p-part of o(x)
    while o % p == 0:
        o //= p
    assert op * o == G.element_order(i)


# -- centralizers -------------------------------------------------------------


def test_centralizer_identity_and_center(dih6):
    assert len(centralizer(dih6, 0).members) == dih6.order


def test_centralizer_of_reflection(dih6):
    # brute force: commuting test
    refl = next(
        i for i in range(dih6.order)
        if dih6.element_order(i) == 2
    )
    brute = {
        j for j in range(dih6.order) if dih6.mul(j, refl) == dih6.mul(refl, j)
    }
    sub = centralizer(dih6, refl)
    assert sub.members == frozenset(brute)
    assert sub.order == 2


def test_central_element_centralizer_is_group(fr53):
    center = fr53.center_indices()
    assert len(center) == 5
    x = next(i for i in center if i != 0)
    assert centralizer(fr53, x).order == fr53.order


# -- quotients ----------------------------------------------------------------


def test_quotient_by_whole_group(dih6):
    Q, proj = dih6.quotient(frozenset(range(dih6.order)))
    assert Q.order == 1
    assert all(int(v) == 0 for v in proj)


def test_quotient_dihedral_by_rotations(dih6):
    from permchar.lattice import Subgroup

    rot = frozenset(
        i for i in range(dih6.order) if dih6.element_order(i) in (1, 3)
    )
    Q, proj = quotient_group(dih6, Subgroup.from_members(dih6, rot))
    assert Q.order == 2
    # projection is a homomorphism with kernel exactly rot
    for i in range(dih6.order):
        for j in range(dih6.order):
            assert proj[dih6.mul(i, j)] == Q.mul(int(proj[i]), int(proj[j]))
    assert {i for i in range(dih6.order) if proj[i] == 0} == set(rot)


def test_quotient_requires_normal(dih6):
    refl = next(i for i in range(dih6.order) if dih6.element_order(i) == 2)
    with pytest.raises(NotNormal):
        dih6.quotient(frozenset({0, refl}))


def test_fullyramified_mod_extraspecial_is_c3(fr53):
    E = frozenset(i for i in range(fr53.order) if fr53.element_order(i) in (1, 5))
    # coset enumeration oracle: count distinct cosets
    assert len(E) == 125
    Q, proj = fr53.quotient(E)
    assert Q.order == 3
    assert Q.exponent == 3


# -- builtins -----------------------------------------------------------------


@pytest.mark.parametrize(
    "name,order,exponent",
    [
        ("cyclic(12)", 12, 12),
        ("abelian(2,2,3)", 12, 6),
        ("dihedral(10)", 10, 10),
        ("frobenius(7,3)", 21, 21),
        ("frobenius(11,5)", 55, 55),
        ("extraspecial(3)", 27, 3),
        ("extraspecial(5)", 125, 5),
        ("fullyramified(5,3)", 375, 15),
        ("gl23", 48, 24),
        ("product(dihedral(6),cyclic(2))", 12, 6),
    ],
)
def test_builtin_orders(name, order, exponent):
    G = groups.by_name(name)
    assert G.order == order
    assert G.exponent == exponent


def test_fullyramified_structure(fr53):
    # center has order 5; element orders are only 1, 3, 5, 15
    assert len(fr53.center_indices()) == 5
    assert set(int(v) for v in fr53.orders) == {1, 3, 5, 15}


def test_group_file_ingestion(tmp_path):
    doc = {"name": "klein", "degree": 4, "generators": [[[1, 2]], [[3, 4]]]}
    path = tmp_path / "klein.json"
    path.write_text(__import__("json").dumps(doc))
    G = groups.load_group(str(path))
    assert G.order == 4
    assert G.name == "klein"
    assert G.exponent == 2
