"""Finite permutation groups with exact, index-based arithmetic.

A Group stores its full element list as rows of a numpy matrix (one row of
point images per element) plus a bytes->index dictionary, so every element
is addressed by a small integer.  Per-generator Cayley maps (right, left and
conjugation) are precomputed as index arrays, which makes orbit and
labelling computations cheap pure-integer passes.

Composition convention: (g * h) means "apply g, then h", so the image row
of g * h is h_row[g_row].
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    CapExceeded,
    ElementNotInGroup,
    InvalidPermutation,
    NotNormal,
    NotPrime,
)

DEFAULT_ORDER_CAP = 5000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class Permutation:
    """An immutable bijection of {0, ..., degree-1}."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(int(v) for v in images)
        n = len(imgs)
        seen = [False] * n
        for v in imgs:
            if not 0 <= v < n or seen[v]:
                raise InvalidPermutation("images are not a bijection on %d points" % n)
            seen[v] = True
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles, one_based: bool = True) -> "Permutation":
        images = list(range(degree))
        off = 1 if one_based else 0
        for cyc in cycles:
            pts = [p - off for p in cyc]
            for p in pts:
                if not 0 <= p < degree:
                    raise InvalidPermutation("cycle point %d out of range" % (p + off))
            for a, b in zip(pts, pts[1:] + pts[:1]):
                if images[a] != a:
                    raise InvalidPermutation("point repeated across cycles")
                images[a] = b
        return Permutation(images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise InvalidPermutation("degree mismatch in product")
        return Permutation(tuple(other.images[v] for v in self.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for i, v in enumerate(self.images):
            out[v] = i
        return Permutation(out)

    def cycles(self, skip_fixed: bool = True) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            p = self.images[start]
            while p != start:
                cyc.append(p)
                seen[p] = True
                p = self.images[p]
            if len(cyc) > 1 or not skip_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(skip_fixed=False)))

    def cycle_string(self, one_based: bool = True) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        off = 1 if one_based else 0
        return "".join(
            "(" + " ".join(str(p + off) for p in c) + ")" for c in cycs
        )

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%s)" % (self.cycle_string(),)


class ConjugacyClass:
    """One conjugation orbit: representative index, members, centralizer order."""

    __slots__ = ("rep", "members", "size", "centralizer_order", "element_order", "member_set")

    def __init__(self, rep, members, group_order, element_order):
        self.rep = int(rep)
        self.members = np.asarray(members, dtype=np.int32)
        self.size = len(members)
        assert group_order % self.size == 0
        self.centralizer_order = group_order // self.size
        self.element_order = int(element_order)
        self.member_set = frozenset(int(v) for v in members)

    def __repr__(self):
        return "ConjugacyClass(rep=%d, size=%d, order=%d)" % (
            self.rep,
            self.size,
            self.element_order,
        )


class Group:
    """A finite group given by a full element enumeration of permutations."""

    def __init__(self, degree, generators, name=None, cap=DEFAULT_ORDER_CAP):
        self.degree = int(degree)
        self.name = name or "group"
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != self.degree:
                raise InvalidPermutation("generator degree %d != %d" % (g.degree, self.degree))
            gens.append(g)
        self.generators = tuple(gens)
        self._gen_rows = [np.array(g.images, dtype=np.int32) for g in gens]
        self._close(cap)
        self._build_maps()
        self._orders = None
        self._exponent = None
        self._classes = None
        self._class_of = None
        self._powmaps = None
        self._powp = {}

    # -- construction ---------------------------------------------------

    def _close(self, cap):
        deg = self.degree
        rows = [np.arange(deg, dtype=np.int32)]
        index = {rows[0].tobytes(): 0}
        parent, via = [0], [-1]
        i = 0
        while i < len(rows):
            base = rows[i]
            for t, grow in enumerate(self._gen_rows):
                new = grow[base]
                key = new.tobytes()
                if key not in index:
                    if len(rows) >= cap:
                        raise CapExceeded(
                            "closure of %s passed cap %d" % (self.name, cap)
                        )
                    index[key] = len(rows)
                    rows.append(new)
                    parent.append(i)
                    via.append(t)
            i += 1
        self._E = np.vstack(rows) if rows else np.zeros((1, deg), dtype=np.int32)
        self._index = index
        self._parent = np.array(parent, dtype=np.int32)
        self._via = np.array(via, dtype=np.int32)
        self.order = len(rows)

    def _build_maps(self):
        E = self._E
        n, deg = E.shape
        inv_rows = np.empty_like(E)
        np.put_along_axis(inv_rows, E, np.broadcast_to(np.arange(deg, dtype=np.int32), E.shape), axis=1)
        self._inv = np.fromiter(
            (self._index[inv_rows[i].tobytes()] for i in range(n)), dtype=np.int32, count=n
        )
        self._gen_right, self._gen_left, self._conj_gen = [], [], []
        for grow in self._gen_rows:
            right_rows = grow[E]  # row of (e then g)
            self._gen_right.append(self.lookup_rows(right_rows))
            left_rows = E[:, grow]  # row of (g then e)
            self._gen_left.append(self.lookup_rows(left_rows))
            ginv = np.empty(deg, dtype=np.int32)
            ginv[grow] = np.arange(deg, dtype=np.int32)
            conj_rows = grow[E[:, ginv]]  # row of (g^-1 e g)
            self._conj_gen.append(self.lookup_rows(conj_rows))
        self.gen_indices = tuple(
            int(self._index[grow.tobytes()]) for grow in self._gen_rows
        )

    # -- basic element arithmetic ---------------------------------------

    def lookup_rows(self, rows) -> np.ndarray:
        rows = np.ascontiguousarray(rows, dtype=np.int32)
        idx = self._index
        if rows.ndim == 1:
            return np.int32(idx[rows.tobytes()])
        return np.fromiter(
            (idx[rows[i].tobytes()] for i in range(rows.shape[0])),
            dtype=np.int32,
            count=rows.shape[0],
        )

    def index_of(self, perm: Permutation) -> int:
        key = np.array(perm.images, dtype=np.int32).tobytes()
        if key not in self._index:
            raise ElementNotInGroup("permutation not in %s" % self.name)
        return self._index[key]

    def permutation(self, i: int) -> Permutation:
        return Permutation(tuple(int(v) for v in self._E[i]))

    def contains(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            return False
        return np.array(perm.images, dtype=np.int32).tobytes() in self._index

    def mul(self, i: int, j: int) -> int:
        row = self._E[j][self._E[i]]
        return int(self._index[np.ascontiguousarray(row).tobytes()])

    def inv(self, i: int) -> int:
        return int(self._inv[i])

    def conj(self, i: int, g: int) -> int:
        """Index of g^-1 * e_i * g."""
        return self.mul(self.mul(self.inv(g), i), g)

    def power(self, i: int, m: int) -> int:
        o = self.element_order(i)
        m %= o
        result, base = 0, i
        while m:
            if m & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            m >>= 1
        return result

    def bulk_mul(self, indices, j: int) -> np.ndarray:
        """Indices of e_i * e_j for every i in indices."""
        arr = np.asarray(indices, dtype=np.int32)
        rows = self._E[j][self._E[arr]]
        return self.lookup_rows(rows)

    def bulk_pow(self, m: int) -> np.ndarray:
        """Index array of e_i^m over the whole group, vectorized."""
        n, deg = self._E.shape
        result = np.broadcast_to(np.arange(deg, dtype=np.int32), self._E.shape).copy()
        base = self._E
        mm = m
        while mm:
            if mm & 1:
                result = np.take_along_axis(base, result, axis=1)
            base = np.take_along_axis(base, base, axis=1)
            mm >>= 1
        return self.lookup_rows(result)

    def pow_map(self, p: int) -> np.ndarray:
        if p not in self._powp:
            self._powp[p] = self.bulk_pow(p)
        return self._powp[p]

    def conj_set(self, indices, t: int) -> np.ndarray:
        """Conjugate a set of element indices by generator t."""
        return self._conj_gen[t][np.asarray(indices, dtype=np.int32)]

    def bulk_commutator(self, x: int, indices) -> np.ndarray:
        """Indices of [x, k] = x^-1 k^-1 x k for every k in indices."""
        E = self._E
        arr = np.asarray(indices, dtype=np.int32)
        rxinv = E[self.inv(x)]
        rx = E[x]
        rkinv = E[self._inv[arr]]
        rk = E[arr]
        step = rkinv[:, rxinv]
        step = rx[step]
        step = np.take_along_axis(rk, step, axis=1)
        return self.lookup_rows(step)

    # -- element orders and exponent ------------------------------------

    @property
    def orders(self) -> np.ndarray:
        if self._orders is None:
            out = np.empty(self.order, dtype=np.int32)
            for i in range(self.order):
                row = self._E[i].tolist()
                seen = bytearray(self.degree)
                o = 1
                for start in range(self.degree):
                    if seen[start]:
                        continue
                    ln = 1
                    seen[start] = 1
                    p = row[start]
                    while p != start:
                        seen[p] = 1
                        ln += 1
                        p = row[p]
                    o = o * ln // math.gcd(o, ln)
                out[i] = o
            self._orders = out
        return self._orders

    def element_order(self, i: int) -> int:
        return int(self.orders[i])

    @property
    def exponent(self) -> int:
        if self._exponent is None:
            self._exponent = int(math.lcm(*(int(v) for v in self.orders)))
        return self._exponent

    # -- conjugacy classes -----------------------------------------------

    @property
    def classes(self) -> list[ConjugacyClass]:
        if self._classes is None:
            self._compute_classes()
        return self._classes

    @property
    def class_of(self) -> np.ndarray:
        if self._class_of is None:
            self._compute_classes()
        return self._class_of

    def _compute_classes(self):
        n = self.order
        label = np.full(n, -1, dtype=np.int32)
        classes = []
        orders = self.orders
        for start in range(n):
            if label[start] >= 0:
                continue
            cid = len(classes)
            members = [start]
            label[start] = cid
            k = 0
            while k < len(members):
                x = members[k]
                for cmap in self._conj_gen:
                    y = int(cmap[x])
                    if label[y] < 0:
                        label[y] = cid
                        members.append(y)
                k += 1
            classes.append(
                ConjugacyClass(start, sorted(members), n, orders[start])
            )
        self._classes = classes
        self._class_of = label

    def class_index(self, i: int) -> int:
        return int(self.class_of[i])

    @property
    def inverse_class(self) -> np.ndarray:
        cls = self.classes
        return np.array(
            [self.class_index(self.inv(c.rep)) for c in cls], dtype=np.int32
        )

    def power_maps(self) -> list[list[int]]:
        """For each class, the list m -> class index of rep^m, m < order(rep)."""
        if self._powmaps is None:
            maps = []
            for c in self.classes:
                e = c.element_order
                cur = 0
                pm = []
                for _ in range(e):
                    pm.append(self.class_index(cur))
                    cur = self.mul(cur, c.rep)
                maps.append(pm)
            self._powmaps = maps
        return self._powmaps

    def power_map(self, class_id: int, m: int) -> int:
        pm = self.power_maps()[class_id]
        return pm[m % len(pm)]

    # -- p-parts ----------------------------------------------------------

    def p_part(self, i: int, p: int) -> int:
        """The p-part x_p of x = e_i: x = x_p * x_p' with commuting factors."""
        if not is_prime(p):
            raise NotPrime("%d is not prime" % p)
        o = self.element_order(i)
        pe = 1
        m = o
        while m % p == 0:
            m //= p
            pe *= p
        if pe == 1:
            return 0
        if m == 1:
            return i
        a = m * pow(m, -1, pe)
        return self.power(i, a % o)

    def p_prime_part(self, i: int, p: int) -> int:
        return self.mul(self.inv(self.p_part(i, p)), i)

    # -- transported labellings -------------------------------------------

    def transport(self, seed, moves):
        """Propagate a label along the right-Cayley BFS tree.

        moves[t] maps the label of e to the label of e * g_t; returns the
        label array over all element indices.
        """
        n = self.order
        labels = [None] * n
        labels[0] = seed
        parent, via = self._parent, self._via
        for i in range(1, n):
            labels[i] = moves[via[i]][labels[parent[i]]]
        return labels

    def centralizer_indices(self, x: int) -> tuple[int, ...]:
        pos = {x: 0}
        orbit = [x]
        k = 0
        while k < len(orbit):
            e = orbit[k]
            for cmap in self._conj_gen:
                y = int(cmap[e])
                if y not in pos:
                    pos[y] = len(orbit)
                    orbit.append(y)
            k += 1
        moves = [
            [pos[int(cmap[e])] for e in orbit] for cmap in self._conj_gen
        ]
        labels = self.transport(0, moves)
        return tuple(i for i in range(self.order) if labels[i] == 0)

    def center_indices(self) -> tuple[int, ...]:
        ok = np.ones(self.order, dtype=bool)
        for right, left in zip(self._gen_right, self._gen_left):
            ok &= right == left
        return tuple(int(i) for i in np.nonzero(ok)[0])

    def set_orbit(self, members):
        """Conjugation orbit of a set of element indices.

        Returns (orbit, moves, transporters): orbit as a list of frozensets,
        per-generator position maps, and for each position an element index
        u with base^u equal to that member.
        """
        base = frozenset(int(v) for v in members)
        pos = {base: 0}
        orbit = [base]
        transporters = [0]
        moves = [[] for _ in self._conj_gen]
        k = 0
        while k < len(orbit):
            cur = orbit[k]
            arr = np.fromiter(cur, dtype=np.int32, count=len(cur))
            for t, cmap in enumerate(self._conj_gen):
                img = frozenset(int(v) for v in cmap[arr])
                if img not in pos:
                    pos[img] = len(orbit)
                    orbit.append(img)
                    transporters.append(self.mul(transporters[k], self.gen_indices[t]))
                moves[t].append(pos[img])
            k += 1
        return orbit, moves, transporters

    def normalizer_indices(self, members) -> tuple[int, ...]:
        orbit, moves, _ = self.set_orbit(members)
        if len(orbit) == 1:
            return tuple(range(self.order))
        labels = self.transport(0, moves)
        return tuple(i for i in range(self.order) if labels[i] == 0)

    # -- cosets and quotients ----------------------------------------------

    def coset_labels(self, members) -> tuple[np.ndarray, list[int]]:
        """Right-coset labelling for a subgroup member set.

        Returns (label array over elements, list of coset representative
        indices); representatives are the minimal element of each coset.
        """
        arr = np.fromiter(sorted(int(v) for v in members), dtype=np.int32)
        n = self.order
        label = np.full(n, -1, dtype=np.int32)
        reps = []
        for i in range(n):
            if label[i] >= 0:
                continue
            c = len(reps)
            reps.append(i)
            rows = self._E[i][self._E[arr]]
            label[self.lookup_rows(rows)] = c
        return label, reps

    def is_normal_set(self, members) -> bool:
        s = frozenset(int(v) for v in members)
        arr = np.fromiter(s, dtype=np.int32, count=len(s))
        return all(
            frozenset(int(v) for v in cmap[arr]) == s for cmap in self._conj_gen
        )

    def quotient(self, members, name=None):
        """Quotient by a normal subgroup given as a member set.

        Returns (Q, proj) where Q acts regularly on the cosets and proj maps
        each element index of self to an element index of Q.
        """
        if not self.is_normal_set(members):
            raise NotNormal("subgroup is not normal in %s" % self.name)
        label, reps = self.coset_labels(members)
        nc = len(reps)
        qgens = []
        for t in range(len(self._gen_rows)):
            row = [int(label[self._gen_right[t][reps[c]]]) for c in range(nc)]
            qgens.append(Permutation(row))
        qname = name or "%s/N%d" % (self.name, len(members))
        Q = Group(nc, qgens, name=qname, cap=nc + 1)
        assert Q.order == self.order // len(members)
        moves = [Q._gen_right[t] for t in range(len(qgens))]
        proj = np.array(self.transport(0, moves), dtype=np.int32)
        return Q, proj

    def section_reps(self, proj: np.ndarray, Q: "Group") -> list[int]:
        """For each element of Q, one preimage index in self."""
        reps = [-1] * Q.order
        for i in range(self.order):
            q = int(proj[i])
            if reps[q] < 0:
                reps[q] = i
        return reps

    def __repr__(self):
        return "Group(%s, order=%d, degree=%d)" % (self.name, self.order, self.degree)


# -- spec-level operation wrappers ------------------------------------------


def group_from_generators(degree, gens, cap=DEFAULT_ORDER_CAP, name=None) -> Group:
    if cap < 1:
        raise CapExceeded("cap must be at least 1")
    return Group(degree, gens, name=name, cap=cap)


def conjugacy_classes(G: Group) -> list[ConjugacyClass]:
    return G.classes


def p_part(G: Group, x: int, p: int) -> int:
    return G.p_part(x, p)


def centralizer(G: Group, x: int):
    from .lattice import Subgroup

    if not 0 <= x < G.order:
        raise ElementNotInGroup("element index %d out of range" % x)
    idx = G.centralizer_indices(x)
    return Subgroup.from_members(G, idx)


def quotient_group(G: Group, N) -> tuple[Group, np.ndarray]:
    members = N.members if hasattr(N, "members") else N
    return G.quotient(members)
