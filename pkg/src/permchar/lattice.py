"""Subgroup lattices: enumeration up to conjugacy, cores, normal subgroups,
chief series, cover/avoid tests and solvability predicates.

Subgroups are membership sets over the parent group's element indexing.
Enumeration is by cyclic extension: every known class representative is
extended by elements of prime order modulo the subgroup inside its
normalizer, which is complete for solvable groups.  A join-completion pass
covers perfect subgroups of small non-solvable inputs.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import CapExceeded, NotChiefFactor, NotSubgroup
from .perm import Group, prime_factors

DEFAULT_CLASS_CAP = 5000
_JOIN_COMPLETION_LIMIT = 500


class Subgroup:
    """A subgroup of a parent group, stored as a member-index set."""

    __slots__ = ("parent", "members", "_gens", "order", "_key", "_group", "_counts")

    def __init__(self, parent: Group, members: frozenset, gens: tuple | None = None):
        self.parent = parent
        self.members = members
        self._gens = tuple(gens) if gens is not None else None
        self.order = len(members)
        self._key = None
        self._group = None
        self._counts = None

    @staticmethod
    def from_members(parent: Group, members, gens=None) -> "Subgroup":
        fs = frozenset(int(v) for v in members)
        return Subgroup(parent, fs, gens)

    @property
    def gens(self) -> tuple:
        if self._gens is None:
            self._gens = _find_generators(self.parent, self.members)
        return self._gens

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self.members))
        return self._key

    @property
    def is_whole_group(self) -> bool:
        return self.order == self.parent.order

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def is_normal(self) -> bool:
        return self.parent.is_normal_set(self.members)

    def contains(self, other: "Subgroup") -> bool:
        return other.members <= self.members

    def class_counts(self) -> np.ndarray:
        """Member count per conjugacy class of the parent."""
        if self._counts is None:
            arr = np.fromiter(self.members, dtype=np.int32, count=self.order)
            self._counts = np.bincount(
                self.parent.class_of[arr], minlength=len(self.parent.classes)
            )
        return self._counts

    def as_group(self) -> tuple[Group, np.ndarray]:
        """Promote to a standalone Group plus the map to parent indices."""
        if self._group is None:
            parent = self.parent
            gens = [parent.permutation(g) for g in self.gens]
            H = Group(
                parent.degree,
                gens,
                name="%s|sub%d" % (parent.name, self.order),
                cap=self.order + 1,
            )
            assert H.order == self.order
            pidx = np.fromiter(
                (parent._index[H._E[i].tobytes()] for i in range(H.order)),
                dtype=np.int32,
                count=H.order,
            )
            self._group = (H, pidx)
        return self._group

    def generator_cycle_strings(self) -> list[str]:
        return [self.parent.permutation(g).cycle_string() for g in self.gens]

    def __repr__(self):
        return "Subgroup(order=%d of %s)" % (self.order, self.parent.name)


class SubgroupClass:
    """A conjugacy class of subgroups: representative plus all conjugates."""

    __slots__ = ("rep", "conjugates", "size", "id", "normalizer")

    def __init__(self, rep: Subgroup, conjugates, normalizer, cid=-1):
        self.rep = rep
        self.conjugates = conjugates
        self.size = len(conjugates)
        self.normalizer = normalizer
        self.id = cid

    @property
    def order(self) -> int:
        return self.rep.order

    def __repr__(self):
        return "SubgroupClass(order=%d, size=%d)" % (self.order, self.size)


class ChiefSeries:
    """Ascending chain of normal subgroups with chief factors."""

    def __init__(self, chain: list[Subgroup]):
        self.chain = chain

    def factors(self) -> list[tuple[Subgroup, Subgroup]]:
        """(L, K) pairs, each K/L a chief factor."""
        return list(zip(self.chain, self.chain[1:]))

    def factor_orders(self) -> list[int]:
        return [k.order // l.order for l, k in self.factors()]

    def __repr__(self):
        return "ChiefSeries(orders=%s)" % ([s.order for s in self.chain],)


class CoverAvoid(Enum):
    COVERS = "Covers"
    AVOIDS = "Avoids"
    NEITHER = "Neither"


def _find_generators(G: Group, members: frozenset) -> tuple:
    gens = []
    have = {0}
    for i in sorted(members):
        if i not in have:
            gens.append(i)
            have = _close_indices(G, gens)
            if len(have) == len(members):
                break
    return tuple(gens)


def _close_indices(G: Group, gens) -> set:
    els = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in els:
                    els.add(y)
                    new.append(y)
        frontier = new
    return els


class Lattice:
    """All subgroup-lattice data for one group, computed once and cached."""

    def __init__(self, G: Group, class_cap: int = DEFAULT_CLASS_CAP):
        self.G = G
        self.class_cap = class_cap
        self._classes = None
        self._class_of_set = None
        self._normals = None
        self._chief = None
        self._maximal_ids = None
        self._support_cache = {}
        self._contains_cache = {}

    # -- normal subgroups via class-level closure --------------------------

    def _class_support(self, c: int, d: int) -> frozenset:
        """Classes meeting the product of class c with class d."""
        key = (c, d) if c <= d else (d, c)
        if key not in self._support_cache:
            G = self.G
            members = G.classes[key[0]].members
            prods = G.bulk_mul(members, G.classes[key[1]].rep)
            self._support_cache[key] = frozenset(
                int(v) for v in np.unique(G.class_of[prods])
            )
        return self._support_cache[key]

    def _class_closure(self, closed_base: frozenset, extra) -> frozenset:
        """Extend a product-closed class set by extra classes and re-close."""
        new = [c for c in extra if c not in closed_base]
        if not new:
            return closed_base
        cur = set(closed_base)
        cur.update(new)
        queue = list(new)
        while queue:
            c = queue.pop()
            for d in list(cur):
                for e in self._class_support(c, d):
                    if e not in cur:
                        cur.add(e)
                        queue.append(e)
        return frozenset(cur)

    @property
    def normals(self) -> list[Subgroup]:
        if self._normals is None:
            G = self.G
            triv = frozenset({0})
            # normal closures of single classes generate the normal lattice
            # under joins
            principals = []
            for c in range(len(G.classes)):
                P = self._class_closure(triv, [c])
                if P not in principals:
                    principals.append(P)
            seen = {triv: True}
            queue = [triv]
            while queue:
                base = queue.pop()
                for P in principals:
                    if P <= base:
                        continue
                    joined = self._class_closure(base, P)
                    if joined not in seen:
                        seen[joined] = True
                        queue.append(joined)
            subs = []
            for classset in seen:
                members = frozenset(
                    int(v)
                    for c in classset
                    for v in G.classes[c].members
                )
                subs.append(Subgroup.from_members(G, members))
            subs.sort(key=lambda s: (s.order, s.key))
            self._normals = subs
        return self._normals

    def normal_by_members(self, members: frozenset) -> Subgroup:
        for N in self.normals:
            if N.members == members:
                return N
        raise NotSubgroup("set is not a normal subgroup here")

    # -- chief series -------------------------------------------------------

    @property
    def chief(self) -> ChiefSeries:
        if self._chief is None:
            chain = [self.normals[0]]
            while chain[-1].order < self.G.order:
                top = chain[-1]
                cands = [
                    N
                    for N in self.normals
                    if N.order > top.order and top.members < N.members
                ]
                nxt = min(cands, key=lambda N: (N.order, N.key))
                chain.append(nxt)
            self._chief = ChiefSeries(chain)
        return self._chief

    def is_chief_factor(self, K: Subgroup, L: Subgroup) -> bool:
        normal_sets = {N.members for N in self.normals}
        if K.members not in normal_sets or L.members not in normal_sets:
            return False
        if not L.members < K.members:
            return False
        return not any(
            L.members < N.members < K.members for N in self.normals
        )

    # -- solvability --------------------------------------------------------

    def factor_is_abelian(self, L: Subgroup, K: Subgroup) -> bool:
        G = self.G
        for i, a in enumerate(K.gens):
            for b in K.gens[i + 1:]:
                comm = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b))
                if comm not in L.members:
                    return False
        return True

    def is_solvable(self) -> bool:
        return all(self.factor_is_abelian(L, K) for L, K in self.chief.factors())

    def is_p_solvable(self, p: int) -> bool:
        # every chief factor is a p-group or a p'-group
        for L, K in self.chief.factors():
            size = K.order // L.order
            if size % p == 0 and any(f != p for f in prime_factors(size)):
                return False
        return True

    # -- subgroup classes by cyclic extension -------------------------------

    def _register_class(self, members: frozenset, gens: tuple) -> int:
        G = self.G
        orbit, moves, transporters = G.set_orbit(members)
        best = min(range(len(orbit)), key=lambda k: sorted(orbit[k]))
        u = transporters[best]
        if u == 0:
            rep_members, rep_gens = members, gens
        else:
            rep_members = orbit[best]
            rep_gens = tuple(G.conj(g, u) for g in gens)
        if len(orbit) == 1:
            nidx = tuple(range(G.order))
        else:
            labels = G.transport(0, moves)
            base_n = [i for i in range(G.order) if labels[i] == 0]
            if u == 0:
                nidx = tuple(base_n)
            else:
                uinv = G.inv(u)
                nidx = tuple(sorted(G.mul(G.mul(uinv, i), u) for i in base_n))
        rep = Subgroup(G, rep_members, rep_gens)
        norm = Subgroup(G, frozenset(nidx))
        cls = SubgroupClass(rep, orbit, norm)
        cid = len(self._classes)
        self._classes.append(cls)
        for conj in orbit:
            self._class_of_set[conj] = cid
        if len(self._classes) > self.class_cap:
            raise CapExceeded(
                "subgroup class count passed cap %d" % self.class_cap
            )
        return cid

    def _enumerate_classes(self):
        G = self.G
        self._classes = []
        self._class_of_set = {}
        self._register_class(frozenset({0}), ())
        queue = [0]
        while queue:
            cid = queue.pop(0)
            cls = self._classes[cid]
            H = cls.rep
            nidx = cls.normalizer.members
            quotient_order = len(nidx) // H.order
            if quotient_order == 1:
                continue
            h_arr = np.fromiter(sorted(H.members), dtype=np.int32, count=H.order)
            # one representative per coset of H inside its normalizer; the
            # extension condition z^p in H only depends on the coset since
            # H is normal there
            label, _ = G.coset_labels(H.members)
            seen, coset_reps = set(), []
            for z in sorted(nidx):
                l = int(label[z])
                if l in seen:
                    continue
                seen.add(l)
                if z not in H.members:
                    coset_reps.append(z)
            for p in prime_factors(quotient_order):
                powp = G.pow_map(p)
                for z in coset_reps:
                    if int(powp[z]) not in H.members:
                        continue
                    new = set(H.members)
                    zi = z
                    for _ in range(p - 1):
                        new.update(int(v) for v in G.bulk_mul(h_arr, zi))
                        zi = G.mul(zi, z)
                    fs = frozenset(new)
                    assert len(fs) == p * H.order
                    if fs in self._class_of_set:
                        continue
                    new_cid = self._register_class(fs, H.gens + (z,))
                    queue.append(new_cid)
        if not self.is_solvable():
            self._join_completion()
        self._classes.sort(key=lambda c: (c.order, c.rep.key))
        for i, c in enumerate(self._classes):
            c.id = i
        self._class_of_set = {
            conj: c.id for c in self._classes for conj in c.conjugates
        }

    def _join_completion(self):
        # perfect subgroups are unreachable by cyclic extension; close small
        # non-solvable groups under joins of class representatives
        G = self.G
        if G.order > _JOIN_COMPLETION_LIMIT:
            raise CapExceeded(
                "subgroup enumeration beyond cyclic extension needs order <= %d"
                % _JOIN_COMPLETION_LIMIT
            )
        changed = True
        while changed:
            changed = False
            reps = [c.rep for c in self._classes]
            for a in reps:
                for b in reps:
                    if b.order == 1 or a.order == 1:
                        continue
                    for conj in self._classes[self._class_of_set[b.members]].conjugates:
                        gens = a.gens + tuple(
                            _find_generators(G, conj)
                        )
                        join = frozenset(_close_indices(G, gens))
                        if join not in self._class_of_set:
                            self._register_class(join, gens)
                            changed = True

    @property
    def classes(self) -> list[SubgroupClass]:
        if self._classes is None:
            self._enumerate_classes()
        return self._classes

    def class_of_subgroup(self, members: frozenset) -> int:
        self.classes
        try:
            return self._class_of_set[members]
        except KeyError:
            raise NotSubgroup("set is not a subgroup of %s" % self.G.name)

    # -- containment and maximality ------------------------------------------

    def contains_conjugate(self, big: int, small: int) -> bool:
        """True when some conjugate of class `small` lies in rep(`big`)."""
        key = (big, small)
        if key not in self._contains_cache:
            a = self.classes[big]
            b = self.classes[small]
            result = False
            if b.order <= a.order and a.order % b.order == 0:
                rep = a.rep.members
                result = any(conj <= rep for conj in b.conjugates)
            self._contains_cache[key] = result
        return self._contains_cache[key]

    @property
    def maximal_ids(self) -> list[int]:
        if self._maximal_ids is None:
            n = len(self.classes)
            whole = self.class_of_subgroup(frozenset(range(self.G.order)))
            out = []
            for b in range(n):
                if b == whole:
                    continue
                if not any(
                    a != whole and a != b and self.contains_conjugate(a, b)
                    for a in range(n)
                ):
                    out.append(b)
            self._maximal_ids = out
        return self._maximal_ids

    def maximal_classes(self) -> list[SubgroupClass]:
        return [self.classes[i] for i in self.maximal_ids]

    def core(self, members: frozenset) -> Subgroup:
        orbit, _, _ = self.G.set_orbit(members)
        core = frozenset.intersection(*orbit)
        return Subgroup.from_members(self.G, core)


_LATTICES = {}


def lattice(G: Group, class_cap: int = DEFAULT_CLASS_CAP) -> Lattice:
    lat = getattr(G, "_pc_lattice", None)
    if lat is None:
        lat = Lattice(G, class_cap=class_cap)
        G._pc_lattice = lat
    return lat


# -- spec-level operation wrappers -------------------------------------------


def all_subgroup_classes(G: Group) -> list[SubgroupClass]:
    return lattice(G).classes


def maximal_subgroup_classes(G: Group) -> list[SubgroupClass]:
    return lattice(G).maximal_classes()


def normal_subgroups(G: Group) -> list[Subgroup]:
    return lattice(G).normals


def core(G: Group, H: Subgroup) -> Subgroup:
    if not H.members <= frozenset(range(G.order)):
        raise NotSubgroup("subgroup does not live in this group")
    return lattice(G).core(H.members)


def chief_series(G: Group) -> ChiefSeries:
    return lattice(G).chief


def cover_or_avoid(U: Subgroup, K: Subgroup, L: Subgroup) -> CoverAvoid:
    lat = lattice(U.parent)
    if not lat.is_chief_factor(K, L):
        raise NotChiefFactor("K/L is not a chief factor")
    meet = U.members & K.members
    if meet <= L.members:
        return CoverAvoid.AVOIDS
    inter_l = len(meet & L.members)
    if L.order * len(meet) // inter_l == K.order:
        return CoverAvoid.COVERS
    return CoverAvoid.NEITHER


def is_solvable(G: Group) -> bool:
    return lattice(G).is_solvable()


def is_p_solvable(G: Group, p: int) -> bool:
    return lattice(G).is_p_solvable(p)
