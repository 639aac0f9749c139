"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the package's index/Cayley machinery:
they work on plain Permutation objects with set-based closure, so they can
cross-check the fast paths.
"""

import pytest

from permchar import groups
from permchar.perm import Permutation


def brute_closure(degree, gens, cap=100000):
    """Set-based breadth-first product saturation."""
    ident = Permutation.identity(degree)
    els = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c not in els:
                    els.add(c)
                    new.append(c)
                    assert len(els) <= cap
        frontier = new
    return els


def brute_conjugacy_classes(elements):
    """Partition a full element set into conjugation orbits."""
    elements = list(elements)
    left = set(elements)
    classes = []
    while left:
        x = next(iter(left))
        orbit = {g.inverse() * x * g for g in elements}
        classes.append(orbit)
        left -= orbit
    return classes


def brute_subgroups(G, max_order=48):
    """All subgroups of a small group: cyclic subgroups plus join closure."""
    assert G.order <= max_order
    els = [G.permutation(i) for i in range(G.order)]
    cyclics = set()
    for x in els:
        sub = frozenset(brute_closure(G.degree, [x]))
        cyclics.add(sub)
    subs = set(cyclics)
    frontier = set(cyclics)
    while frontier:
        new = set()
        for a in frontier:
            for b in cyclics:
                if b <= a:
                    continue
                join = frozenset(brute_closure(G.degree, list(a | b)))
                if join not in subs:
                    subs.add(join)
                    new.add(join)
        frontier = new
    return subs


@pytest.fixture(scope="session")
def dih6():
    return groups.dihedral(6)


@pytest.fixture(scope="session")
def frob73():
    return groups.frobenius(7, 3)


@pytest.fixture(scope="session")
def fr53():
    return groups.fullyramified(5, 3)


@pytest.fixture(scope="session")
def gl23():
    return groups.gl23()
