"""Complete and regular intersections of maximal subgroups.

A family of maximal subgroup classes is complete when the group is
transitive on the product of the coset spaces, which happens exactly when
the product of their permutation characters has inner product one with the
trivial character; that test is independent of the chosen conjugates.  A
regular intersection additionally requires the attached prime-field
modules to be pairwise non-isomorphic, duals included.
"""

from __future__ import annotations

import numpy as np

from .characters import Character, permutation_character
from .errors import NotIrreducible, SolvabilityHypothesisFailed
from .fpmod import dual_module, is_isomorphic, x_module
from .lattice import Subgroup, lattice
from .perm import Group, prime_factors


class IntersectionWitness:
    """A subgroup realized as an intersection of maximal subgroups."""

    __slots__ = ("subgroup", "family", "kind", "class_id")

    def __init__(self, subgroup: Subgroup, family: tuple, kind: str, class_id: int):
        self.subgroup = subgroup
        self.family = tuple(family)
        self.kind = kind
        self.class_id = class_id

    def __repr__(self):
        return "IntersectionWitness(order=%d, family=%s, %s)" % (
            self.subgroup.order,
            list(self.family),
            self.kind,
        )

    def as_json(self):
        return {
            "subgroup_order": self.subgroup.order,
            "subgroup_generators": self.subgroup.generator_cycle_strings(),
            "family_class_ids": list(self.family),
            "kind": self.kind,
        }


class IntersectionContext:
    """Per-group cache for the intersection calculus."""

    def __init__(self, G: Group):
        self.G = G
        self.lat = lattice(G)
        self._perm_values = {}
        self._modules = {}
        self._compatible = {}
        self._complete = None

    # permutation character value vectors per maximal class

    def perm_values(self, class_id: int) -> np.ndarray:
        if class_id not in self._perm_values:
            rep = self.lat.classes[class_id].rep
            self._perm_values[class_id] = permutation_character(self.G, rep).V[:, 0]
        return self._perm_values[class_id]

    def module(self, class_id: int):
        if class_id not in self._modules:
            self._modules[class_id] = x_module(self.G, self.lat.classes[class_id].rep)
        return self._modules[class_id]

    def modules_compatible(self, a: int, b: int) -> bool:
        """True when the two classes' modules are non-isomorphic, duals included."""
        key = (a, b) if a <= b else (b, a)
        if key not in self._compatible:
            X, Y = self.module(a), self.module(b)
            ok = not is_isomorphic(X, Y)[0] and not is_isomorphic(X, dual_module(Y))[0]
            self._compatible[key] = ok
        return self._compatible[key]

    def check_family_hypotheses(self, class_ids):
        for i in class_ids:
            cls = self.lat.classes[i]
            index = self.G.order // cls.order
            primes = prime_factors(index)
            if len(primes) != 1 or not self.lat.is_p_solvable(primes[0]):
                raise SolvabilityHypothesisFailed(
                    "maximal class %d violates the per-prime solvability condition" % i
                )

    def family_orbit_count_is_one(self, class_ids) -> bool:
        """[prod of permutation characters, trivial] == 1, exactly."""
        G = self.G
        prod = np.ones(len(G.classes), dtype=np.int64)
        for i in class_ids:
            prod = prod * self.perm_values(i)
        sizes = np.array([c.size for c in G.classes], dtype=np.int64)
        total = int((sizes * prod).sum())
        assert total % G.order == 0
        return total // G.order == 1

    def realize(self, class_ids) -> Subgroup:
        """Concrete intersection achieving the full index drop, greedily."""
        G = self.G
        members = frozenset(range(G.order))
        for i in class_ids:
            cls = self.lat.classes[i]
            index = G.order // cls.order
            target = len(members) // index
            chosen = None
            for conj in cls.conjugates:
                if len(members & conj) == target:
                    chosen = conj
                    break
            assert chosen is not None, "complete family admits a realizing conjugate"
            members = members & chosen
        return Subgroup.from_members(G, members)

    @property
    def complete(self) -> list[IntersectionWitness]:
        if self._complete is None:
            self._complete = self._enumerate_complete()
        return self._complete

    def _enumerate_complete(self) -> list[IntersectionWitness]:
        maxids = self.lat.maximal_ids
        self.check_family_hypotheses(maxids)
        found = {}

        def record(family):
            U = self.realize(family)
            cid = self.lat.class_of_subgroup(U.members)
            if cid not in found:
                found[cid] = IntersectionWitness(
                    U, family, "complete", cid
                )

        def extend(family, start):
            record(tuple(family))
            for pos in range(start, len(maxids)):
                i = maxids[pos]
                cand = family + [i]
                # subfamilies of complete families are complete, so a failed
                # prefix can never be extended
                if self.family_orbit_count_is_one(cand):
                    extend(cand, pos + 1)

        extend([], 0)
        return sorted(
            found.values(), key=lambda w: (-w.subgroup.order, w.family)
        )

    def is_complete_family(self, class_ids) -> bool:
        ids = tuple(class_ids)
        if len(set(ids)) != len(ids):
            return False
        for i in ids:
            if i not in self.lat.maximal_ids:
                raise SolvabilityHypothesisFailed("class %d is not maximal" % i)
        self.check_family_hypotheses(ids)
        return self.family_orbit_count_is_one(ids)

    def regular_witness(self, U: Subgroup):
        """A regular-intersection witness for U, or None.

        The family of a regular intersection consists of exactly one member
        of each maximal class containing a conjugate of U, so the search is
        restricted to those classes and to their conjugates above U itself.
        """
        G = self.G
        if U.is_whole_group:
            cid = self.lat.class_of_subgroup(U.members)
            return IntersectionWitness(U, (), "regular", cid)
        uclass = self.lat.class_of_subgroup(U.members)
        cand = [
            i
            for i in self.lat.maximal_ids
            if self.lat.contains_conjugate(i, uclass)
        ]
        if not cand:
            return None
        self.check_family_hypotheses(cand)
        for a in range(len(cand)):
            for b in range(a + 1, len(cand)):
                if not self.modules_compatible(cand[a], cand[b]):
                    return None
        total_index = 1
        for i in cand:
            total_index *= G.order // self.lat.classes[i].order
        if total_index != G.order // U.order:
            return None
        per_class = []
        for i in cand:
            conjs = [c for c in self.lat.classes[i].conjugates if U.members <= c]
            if not conjs:
                return None
            per_class.append(conjs)

        target = U.members

        def search(level, current):
            if level == len(cand):
                return current == target
            index = G.order // self.lat.classes[cand[level]].order
            want = len(current) // index
            for conj in per_class[level]:
                meet = current & conj
                if len(meet) == want and target <= meet:
                    if search(level + 1, meet):
                        return True
            return False

        if search(0, frozenset(range(G.order))):
            return IntersectionWitness(U, tuple(cand), "regular", uclass)
        return None


def intersections(G: Group) -> IntersectionContext:
    ctx = getattr(G, "_pc_intersections", None)
    if ctx is None:
        ctx = IntersectionContext(G)
        G._pc_intersections = ctx
    return ctx


# -- spec-level operations ----------------------------------------------------


def is_complete_family(G: Group, class_ids) -> bool:
    return intersections(G).is_complete_family(class_ids)


def complete_intersections(G: Group) -> list[IntersectionWitness]:
    return intersections(G).complete


def is_regular(G: Group, U: Subgroup):
    return intersections(G).regular_witness(U)


def zero_free_intersections(chi: Character) -> list[IntersectionWitness]:
    """Complete intersections on which chi has no zeros."""
    if not getattr(chi, "is_irreducible", False):
        raise NotIrreducible("zero-free filtering applies to irreducibles")
    ctx = intersections(chi.group)
    return [
        w
        for w in ctx.complete
        if chi.is_zero_free_on(w.subgroup.class_counts())
    ]


def maximal_zero_free(chi: Character) -> list[IntersectionWitness]:
    """Maximal elements, under inclusion up to conjugacy, of the zero-free set."""
    ctx = intersections(chi.group)
    candidates = zero_free_intersections(chi)
    ids = {w.class_id for w in candidates}
    out = []
    for w in candidates:
        dominated = any(
            other != w.class_id
            and ctx.lat.contains_conjugate(other, w.class_id)
            for other in ids
        )
        if not dominated:
            out.append(w)
    return out
