"""Exact character theory: tables, induction, restriction, products,
permutation characters, and the quasi-primitive / primitive / strongly
irreducible predicates.

Tables are computed by the classical modular method: simultaneous
eigenvectors of the class-algebra matrices over a prime field F_ell with
ell = 1 (mod exp G), followed by a discrete-Fourier lift of eigenvalue
data through the power maps into Q(zeta_exp(G)).  Character values are
algebraic integers, so every class function here carries an integer
coefficient matrix over the power basis of its conductor; all checks are
exact and tolerance-free.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

import numpy as np

from .cyclotomic import Cyc, _power_rows, totient
from .errors import (
    GroupMismatch,
    LiftFailure,
    NotIrreducible,
    NotSubgroup,
)
from .lattice import Subgroup, lattice
from .modlin import (
    charpoly_mod,
    matmul_mod,
    next_prime_congruent,
    nullspace_mod,
    poly_roots_mod,
    primitive_root,
    solve_in_basis,
)
from .perm import Group

_FLOAT_EXACT_BOUND = 2 ** 52


# -- conductor utilities ------------------------------------------------------


def _red_matrix(n: int) -> np.ndarray:
    rows = _power_rows(n)
    return np.array(rows, dtype=np.int64)


def _embed_matrix(n: int, m: int) -> np.ndarray:
    """phi(n) x phi(m) matrix sending the basis of Q(zeta_n) into Q(zeta_m)."""
    assert m % n == 0
    red = _red_matrix(m)
    step = m // n
    return np.array([red[(k * step) % m] for k in range(totient(n))], dtype=np.int64)


def _galois_matrix(n: int, g: int) -> np.ndarray:
    red = _red_matrix(n)
    return np.array([red[(k * g) % n] for k in range(totient(n))], dtype=np.int64)


def _cyc_mul_rows(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Pointwise product of batches of coefficient rows (..., phi)."""
    phi = totient(n)
    a = a.reshape(-1, phi)
    b = b.reshape(-1, phi)
    conv = np.zeros((a.shape[0], 2 * phi - 1), dtype=np.int64)
    for u in range(phi):
        conv[:, u : u + phi] += a[:, u : u + 1] * b
    red = _red_matrix(n)
    out = conv[:, :phi].copy()
    if phi > 1:
        out += conv[:, phi:] @ red[phi : 2 * phi - 1]
    return out


def _row_to_cyc(row, n: int) -> Cyc:
    return Cyc(n, [int(v) for v in row])


# -- class functions -----------------------------------------------------------


class ClassFunction:
    """An exact class function: one integer coefficient row per class."""

    def __init__(self, group: Group, V: np.ndarray, conductor: int):
        self.group = group
        self.V = np.asarray(V, dtype=np.int64)
        self.conductor = conductor
        assert self.V.shape == (len(group.classes), totient(conductor))

    def value(self, class_id: int) -> Cyc:
        return _row_to_cyc(self.V[class_id], self.conductor)

    def values(self) -> list[Cyc]:
        return [self.value(c) for c in range(self.V.shape[0])]

    def value_at_element(self, i: int) -> Cyc:
        return self.value(self.group.class_index(i))

    def at_conductor(self, m: int) -> "ClassFunction":
        if m == self.conductor:
            return self
        return ClassFunction(
            self.group, self.V @ _embed_matrix(self.conductor, m), m
        )

    def _aligned(self, other: "ClassFunction"):
        if self.group is not other.group:
            raise GroupMismatch("class functions live on different groups")
        n = math.lcm(self.conductor, other.conductor)
        return self.at_conductor(n), other.at_conductor(n), n

    def __add__(self, other):
        a, b, n = self._aligned(other)
        return ClassFunction(self.group, a.V + b.V, n)

    def __sub__(self, other):
        a, b, n = self._aligned(other)
        return ClassFunction(self.group, a.V - b.V, n)

    def __mul__(self, other):
        a, b, n = self._aligned(other)
        return ClassFunction(self.group, _cyc_mul_rows(a.V, b.V, n), n)

    def conjugate(self) -> "ClassFunction":
        n = self.conductor
        if n <= 2:
            return ClassFunction(self.group, self.V.copy(), n)
        return ClassFunction(self.group, self.V @ _galois_matrix(n, n - 1), n)

    def galois(self, g: int) -> "ClassFunction":
        return ClassFunction(self.group, self.V @ _galois_matrix(self.conductor, g), self.conductor)

    def norm_vector(self) -> np.ndarray:
        """Rows of |f(c)|^2 = f(c) * conj(f(c))."""
        return _cyc_mul_rows(self.V, self.conjugate().V, self.conductor)

    def support(self) -> list[int]:
        return [c for c in range(self.V.shape[0]) if self.V[c].any()]

    def is_zero_free_on(self, counts: np.ndarray) -> bool:
        """No zero value on any class meeting a subgroup with these counts."""
        return all(self.V[c].any() for c in np.nonzero(counts)[0])

    def __eq__(self, other):
        if not isinstance(other, ClassFunction) or self.group is not other.group:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return bool(np.array_equal(a.V, b.V))

    def __hash__(self):
        return hash((id(self.group), self.conductor, self.V.tobytes()))

    def __repr__(self):
        return "ClassFunction(%s, deg0=%s)" % (self.group.name, self.V[0])


class Character(ClassFunction):
    """A class function flagged as a character; degree is its identity value."""

    def __init__(self, group, V, conductor, is_irreducible=False, table_index=None):
        super().__init__(group, V, conductor)
        self.is_irreducible = is_irreducible
        self.table_index = table_index
        row0 = self.V[0]
        if row0[1:].any() or row0[0] < 1:
            raise LiftFailure("character has non-positive-integer degree")
        self.degree = int(row0[0])

    def __repr__(self):
        return "Character(%s, degree=%d%s)" % (
            self.group.name,
            self.degree,
            ", irreducible" if self.is_irreducible else "",
        )


def trivial_character(G: Group) -> Character:
    k = len(G.classes)
    V = np.zeros((k, 1), dtype=np.int64)
    V[:, 0] = 1
    return Character(G, V, 1, is_irreducible=True)


def regular_character(G: Group) -> Character:
    k = len(G.classes)
    V = np.zeros((k, 1), dtype=np.int64)
    V[0, 0] = G.order
    return Character(G, V, 1)


# -- inner products (exact rationals) ------------------------------------------


def inner_product(alpha: ClassFunction, beta: ClassFunction) -> Cyc:
    """(1/|G|) sum over classes of |class| * alpha(g) * beta(g^-1), exact."""
    if alpha.group is not beta.group:
        raise GroupMismatch("inner product needs one common group")
    a, b, n = alpha._aligned(beta)
    G = alpha.group
    inv = G.inverse_class
    binv = b.V[inv]
    sizes = np.array([c.size for c in G.classes], dtype=np.int64)
    rows = _cyc_mul_rows(a.V, binv, n)
    total = (sizes[:, None] * rows).sum(axis=0)
    return Cyc(n, [Fraction(int(v), G.order) for v in total])


def inner_product_rational(alpha, beta) -> Fraction:
    v = inner_product(alpha, beta)
    return v.rational_value()


# -- the table ------------------------------------------------------------------


class CharacterTable:
    """Complete exact character table with verified orthogonality."""

    def __init__(self, group: Group):
        self.group = group
        self.conductor = group.exponent
        self._modular = None
        self._build()
        self._verify()
        self.chars = [
            Character(
                group,
                self.V[s],
                self.conductor,
                is_irreducible=True,
                table_index=s,
            )
            for s in range(self.V.shape[0])
        ]

    # modular stage

    def _class_matrix(self, i: int) -> np.ndarray:
        G = self.group
        k = len(G.classes)
        members = G.classes[i].members
        invs = G._inv[members]
        B = np.zeros((k, k), dtype=np.int64)
        for m, cls in enumerate(G.classes):
            prods = G.bulk_mul(invs, cls.rep)
            B[:, m] = np.bincount(G.class_of[prods], minlength=k)
        return B

    def _build(self):
        G = self.group
        k = len(G.classes)
        n = self.conductor
        order = G.order
        ell = next_prime_congruent(order + 1, 1, n)
        self.ell = ell
        sizes = np.array([c.size for c in G.classes], dtype=np.int64)
        invclass = G.inverse_class

        spaces = [np.eye(k, dtype=np.int64)]
        matrix_order = sorted(range(1, k), key=lambda i: (G.classes[i].size, i))
        for i in matrix_order:
            if all(S.shape[1] == 1 for S in spaces):
                break
            B = self._class_matrix(i)
            new_spaces = []
            for S in spaces:
                m = S.shape[1]
                if m == 1:
                    new_spaces.append(S)
                    continue
                R = solve_in_basis(S, matmul_mod(B, S, ell), ell)
                roots = poly_roots_mod(charpoly_mod(R, ell), ell)
                if len(roots) <= 1:
                    new_spaces.append(S)
                    continue
                total = 0
                for lam in sorted(roots):
                    W = nullspace_mod((R - lam * np.eye(m, dtype=np.int64)) % ell, ell)
                    if W.shape[1] == 0:
                        raise LiftFailure("eigenvalue without eigenvector")
                    total += W.shape[1]
                    new_spaces.append(matmul_mod(S, W, ell))
                if total != m:
                    raise LiftFailure("class matrix not semisimple mod ell")
            spaces = new_spaces
        if any(S.shape[1] != 1 for S in spaces):
            raise LiftFailure("common eigenspaces did not split to dimension one")

        degrees = np.zeros(k, dtype=np.int64)
        cvals = np.zeros((k, k), dtype=np.int64)
        size_inv = np.array([pow(int(s), ell - 2, ell) for s in sizes], dtype=np.int64)
        for s, S in enumerate(spaces):
            u = S[:, 0] % ell
            if u[0] % ell == 0:
                raise LiftFailure("eigenvector vanishes on the identity class")
            u = u * pow(int(u[0]), ell - 2, ell) % ell
            t = 0
            for j in range(k):
                t = (t + int(u[j]) * int(u[invclass[j]]) % ell * int(size_inv[j])) % ell
            t = order * pow(t, ell - 2, ell) % ell
            d = math.isqrt(t)
            if d * d != t or d == 0:
                raise LiftFailure("degree is not a perfect square residue")
            degrees[s] = d
            cvals[s] = d * u % ell * size_inv % ell
        self._modular = (cvals, degrees)

        # lift to the cyclotomic field
        w = primitive_root(ell)
        phi = totient(n)
        red = _red_matrix(n)
        V = np.zeros((k, k, phi), dtype=np.int64)
        for j, cls in enumerate(G.classes):
            e = cls.element_order
            if e == 1:
                V[:, j, 0] = degrees
                continue
            pm = G.power_maps()[j]
            ze_inv = pow(pow(w, (ell - 1) // e, ell), ell - 2, ell)
            einv = pow(e, ell - 2, ell)
            Z = np.array(
                [[pow(ze_inv, (t * m) % e, ell) for t in range(e)] for m in range(e)],
                dtype=np.int64,
            )
            C = cvals[:, pm]
            MU = (C @ Z) % ell * einv % ell
            if (MU > degrees[:, None]).any():
                raise LiftFailure("eigenvalue multiplicities exceed the degree")
            EM = np.array([red[(t * (n // e)) % n] for t in range(e)], dtype=np.int64)
            V[:, j, :] = MU @ EM
        order_keys = sorted(
            range(k),
            key=lambda s: (
                not bool((V[s, :, 0] == 1).all() and not V[s, :, 1:].any()),
                int(degrees[s]),
                V[s].tobytes(),
            ),
        )
        self.V = V[order_keys]
        self.degrees = degrees[order_keys]
        self._modular = (cvals[order_keys], self.degrees)

    # verification

    def _pairwise_products(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """R[i, j, :] = reduced sum over the middle axis of A[i,c,:] * B[j,c,:]."""
        k1, kc, phi = A.shape
        k2 = B.shape[0]
        bound = kc * int(np.abs(A).max(initial=1)) * int(np.abs(B).max(initial=1))
        red = _red_matrix(self.conductor)
        if phi > 1:
            bound *= int(np.abs(red[phi : 2 * phi - 1]).max(initial=1)) * phi
        if bound < _FLOAT_EXACT_BOUND:
            # contiguous per-coefficient slices keep matmul on the fast path
            Af = np.ascontiguousarray(A.transpose(2, 0, 1).astype(np.float64))
            Bf = np.ascontiguousarray(
                B.transpose(1, 0, 2).reshape(kc, k2 * phi).astype(np.float64)
            )
            R = np.zeros((k1, k2, 2 * phi - 1), dtype=np.float64)
            for u in range(phi):
                contrib = (Af[u] @ Bf).reshape(k1, k2, phi)
                R[:, :, u : u + phi] += contrib
            out = R[:, :, :phi]
            if phi > 1:
                out = out + np.tensordot(
                    R[:, :, phi:], red[phi : 2 * phi - 1].astype(np.float64), axes=([2], [0])
                )
            return np.rint(out).astype(np.int64)
        # exact object fallback for out-of-bound sizes
        Ao = A.astype(object)
        Bo = B.astype(object)
        R = np.zeros((k1, k2, 2 * phi - 1), dtype=object)
        for u in range(phi):
            contrib = np.einsum("ic,jcv->ijv", Ao[:, :, u], Bo)
            R[:, :, u : u + phi] += contrib
        out = R[:, :, :phi]
        if phi > 1:
            out = out + R[:, :, phi:] @ red[phi : 2 * phi - 1].astype(object)
        return out.astype(np.int64)

    def _verify(self):
        G = self.group
        k = len(G.classes)
        order = G.order
        V, degrees = self.V, self.degrees
        if int((degrees.astype(object) ** 2).sum()) != order:
            raise LiftFailure("degree squares do not sum to the group order")
        if not ((V[0, :, 0] == 1).all() and not V[0, :, 1:].any()):
            raise LiftFailure("first row is not the trivial character")
        # modular consistency of the lifted values
        cvals, _ = self._modular
        ell = self.ell
        w = primitive_root(ell)
        zn = pow(w, (ell - 1) // self.conductor, ell)
        pows = np.array(
            [pow(zn, u, ell) for u in range(totient(self.conductor))], dtype=np.int64
        )
        if ((V % ell) @ pows % ell != cvals % ell).any():
            raise LiftFailure("lifted values disagree with modular values")
        # first orthogonality: sum_c |C| chi_i(c) chi_j(c^-1) = |G| delta
        inv = G.inverse_class
        sizes = np.array([c.size for c in G.classes], dtype=np.int64)
        W = V[:, inv, :] * sizes[None, :, None]
        R = self._pairwise_products(V, W)
        expected = np.zeros_like(R)
        expected[np.arange(k), np.arange(k), 0] = order
        if not np.array_equal(R, expected):
            raise LiftFailure("row orthogonality fails")
        # second orthogonality: sum_s chi_s(c) chi_s(c'^-1) = delta |C_G(c)|
        A = V.transpose(1, 0, 2)
        B = V[:, inv, :].transpose(1, 0, 2)
        D = self._pairwise_products(A, B)
        expected = np.zeros_like(D)
        cents = np.array([c.centralizer_order for c in G.classes], dtype=np.int64)
        expected[np.arange(k), np.arange(k), 0] = cents
        if not np.array_equal(D, expected):
            raise LiftFailure("column orthogonality fails")

    def as_json(self) -> dict:
        G = self.group
        return {
            "group": G.name,
            "order": G.order,
            "conductor": self.conductor,
            "classes": [
                {
                    "representative": G.permutation(c.rep).cycle_string(),
                    "size": c.size,
                    "element_order": c.element_order,
                }
                for c in G.classes
            ],
            "irreducibles": [
                [self.chars[s].value(c).as_json() for c in range(len(G.classes))]
                for s in range(len(self.chars))
            ],
        }


def character_table(G: Group) -> CharacterTable:
    table = getattr(G, "_pc_table", None)
    if table is None:
        table = CharacterTable(G)
        G._pc_table = table
    return table


# -- subgroup tables and the cache ---------------------------------------------


class SubTable:
    """A subgroup promoted to its own group, with index and class transfer."""

    def __init__(self, sub: Subgroup, parent_conductor: int):
        self.sub = sub
        parent = sub.parent
        if sub.is_whole_group:
            self.H = parent
            self.pidx = np.arange(parent.order, dtype=np.int32)
        else:
            self.H, self.pidx = sub.as_group()
        self.table = character_table(self.H)
        self.pclass = np.array(
            [
                parent.class_index(int(self.pidx[c.rep]))
                for c in self.H.classes
            ],
            dtype=np.int32,
        )
        self.parent_conductor = parent_conductor
        self._embedded = None

    @property
    def embedded_V(self) -> np.ndarray:
        """Irreducible rows of the subgroup embedded at the parent conductor."""
        if self._embedded is None:
            if self.table.conductor == self.parent_conductor:
                self._embedded = self.table.V
            else:
                emb = _embed_matrix(self.table.conductor, self.parent_conductor)
                self._embedded = self.table.V @ emb
        return self._embedded

    def irreducible(self, s: int) -> Character:
        return self.table.chars[s]


class TableCache:
    """Per-group cache of subgroup tables; one builder per subgroup at a time."""

    def __init__(self, G: Group):
        self.G = G
        self.lat = lattice(G)
        self.root = character_table(G)
        self._subs: dict = {}
        self._lock = threading.Lock()
        self._evalctx: dict = {}

    def for_subgroup(self, sub: Subgroup) -> SubTable:
        key = sub.members
        with self._lock:
            st = self._subs.get(key)
            if st is None:
                st = SubTable(sub, self.G.exponent)
                self._subs[key] = st
            return st

    # fast exact multiplicity machinery: evaluate at a root of unity mod a
    # prime q large enough that the known-integer results lift exactly

    def _context(self, n_total: int, bound: int):
        ctx = self._evalctx.get(n_total)
        if ctx is None or ctx[0] <= bound:
            q = next_prime_congruent(bound + 1, 1, n_total)
            z = pow(primitive_root(q), (q - 1) // n_total, q)
            self._evalctx[n_total] = (q, z)
        return self._evalctx[n_total]

    @staticmethod
    def _eval_rows(V: np.ndarray, conductor: int, n_total: int, q: int, z: int):
        step = n_total // conductor
        pows = np.array(
            [pow(z, u * step, q) for u in range(totient(conductor))], dtype=np.int64
        )
        return (V % q) @ pows % q

    def decompose(self, f: ClassFunction) -> np.ndarray:
        """Multiplicity of each irreducible of f's group in f (exact integers).

        Requires f to be a virtual character, so that the multiplicities are
        integers bounded by the degree of f; the modulus is chosen above
        that bound.
        """
        X = f.group
        table = character_table(X)
        n_total = math.lcm(X.exponent, f.conductor)
        f1 = abs(int(f.V[0, 0])) + 1
        bound = 4 * f1 * (int(table.degrees.max()) + X.order)
        q, z = self._context(n_total, bound)
        inv = X.inverse_class
        sizes = np.array([c.size for c in X.classes], dtype=np.int64)
        fev = self._eval_rows(f.V, f.conductor, n_total, q, z)
        rows = self._eval_rows(
            table.V.reshape(-1, table.V.shape[2]), table.conductor, n_total, q, z
        ).reshape(table.V.shape[0], table.V.shape[1])
        weighted = sizes * fev % q
        m = rows[:, inv] @ weighted % q
        m = m * pow(X.order, q - 2, q) % q
        m = np.where(m > q // 2, m - q, m)
        return m.astype(np.int64)

    def restriction_multiplicities(self, chi: ClassFunction, st: SubTable) -> np.ndarray:
        return self.decompose(restrict(chi, st))

    def squared_norm_on(self, chi: ClassFunction, sub: Subgroup) -> int:
        """[chi, chi]_L for a subgroup L of chi's group, as an exact integer."""
        X = chi.group
        n_total = math.lcm(X.exponent, chi.conductor)
        f1 = abs(int(chi.V[0, 0])) + 1
        q, z = self._context(n_total, 4 * f1 * f1)
        fev = self._eval_rows(chi.V, chi.conductor, n_total, q, z)
        nsq = fev * fev[X.inverse_class] % q
        counts = sub.class_counts().astype(np.int64)
        total = int((counts * nsq % q).sum() % q)
        total = total * pow(sub.order, q - 2, q) % q
        return total - q if total > q // 2 else total


def table_cache(G: Group) -> TableCache:
    cache = getattr(G, "_pc_table_cache", None)
    if cache is None:
        cache = TableCache(G)
        G._pc_table_cache = cache
    return cache


# -- induction / restriction / permutation characters ---------------------------


def restrict(chi: ClassFunction, st: SubTable) -> ClassFunction:
    if chi.group is not st.sub.parent:
        raise NotSubgroup("character is not on the subgroup's parent")
    return ClassFunction(st.H, chi.V[st.pclass], chi.conductor)


def induce(theta: ClassFunction, st: SubTable) -> ClassFunction:
    """Induced class function; Frobenius reciprocity holds exactly."""
    if theta.group is not st.H:
        raise NotSubgroup("class function does not live on the given subgroup")
    G = st.sub.parent
    n = math.lcm(theta.conductor, G.exponent)
    tv = theta.at_conductor(n).V
    kG = len(G.classes)
    acc = np.zeros((kG, tv.shape[1]), dtype=np.int64)
    hsizes = [c.size for c in st.H.classes]
    for d in range(len(st.H.classes)):
        acc[st.pclass[d]] += hsizes[d] * tv[d]
    cents = np.array([c.centralizer_order for c in G.classes], dtype=np.int64)
    num = acc * cents[:, None]
    if (num % st.H.order).any():
        raise LiftFailure("induction formula produced a non-integral value")
    return ClassFunction(G, num // st.H.order, n)


def product(alpha: ClassFunction, beta: ClassFunction) -> ClassFunction:
    return alpha * beta


def conjugate(alpha: ClassFunction) -> ClassFunction:
    return alpha.conjugate()


def permutation_character(G: Group, U: Subgroup) -> Character:
    """Fixed cosets of U per class: |C_G(g)| |U meet g^G| / |U|, exact."""
    if U.parent is not G:
        raise NotSubgroup("subgroup belongs to a different group")
    counts = U.class_counts().astype(np.int64)
    cents = np.array([c.centralizer_order for c in G.classes], dtype=np.int64)
    num = cents * counts
    if (num % U.order).any():
        raise LiftFailure("permutation character value is not integral")
    k = len(G.classes)
    V = np.zeros((k, 1), dtype=np.int64)
    V[:, 0] = num // U.order
    return Character(G, V, 1, is_irreducible=(U.order == G.order))


def norm_squared(chi: ClassFunction, x: int) -> Cyc:
    """chi(x) * conj(chi(x)), exact; a rational integer for characters."""
    c = chi.group.class_index(x)
    row = _cyc_mul_rows(chi.V[c], chi.conjugate().V[c], chi.conductor)[0]
    return _row_to_cyc(row, chi.conductor)


def kernel(chi: Character) -> Subgroup:
    G = chi.group
    members = set()
    d = chi.V[0].copy()
    for c, cls in enumerate(G.classes):
        if np.array_equal(chi.V[c], d):
            members.update(cls.member_set)
    return Subgroup.from_members(G, members)


def center_Z(chi: Character) -> Subgroup:
    G = chi.group
    nv = chi.norm_vector()
    target = nv[0].copy()
    members = set()
    for c, cls in enumerate(G.classes):
        if np.array_equal(nv[c], target):
            members.update(cls.member_set)
    return Subgroup.from_members(G, members)


def n_chi(chi: ClassFunction) -> int:
    """lcm of element orders over the support of chi."""
    orders = [
        chi.group.classes[c].element_order for c in chi.support()
    ]
    return math.lcm(*orders) if orders else 1


# -- predicates -----------------------------------------------------------------


def _require_irreducible(chi):
    if not getattr(chi, "is_irreducible", False):
        raise NotIrreducible("predicate requires an irreducible character")


def is_quasi_primitive(chi: Character, cache: TableCache):
    """(True, None) or (False, offending normal subgroup)."""
    _require_irreducible(chi)
    for N in cache.lat.normals:
        if N.is_trivial or N.is_whole_group:
            continue
        st = cache.for_subgroup(N)
        mults = cache.restriction_multiplicities(chi, st)
        if int((mults > 0).sum()) > 1:
            return False, N
    return True, None


def is_primitive(chi: Character, cache: TableCache):
    """(True, None) or (False, (maximal class, index of inducing character)).

    Checking maximal subgroups suffices: an inducing subgroup lies in some
    maximal M, and the intermediate induced character must be irreducible.
    """
    _require_irreducible(chi)
    G = cache.G
    for cls in cache.lat.maximal_classes():
        st = cache.for_subgroup(cls.rep)
        index = G.order // cls.order
        mults = cache.restriction_multiplicities(chi, st)
        for s, m in enumerate(mults):
            if m >= 1 and int(st.table.degrees[s]) * index == chi.degree:
                return False, (cls, s)
    return True, None


def is_strongly_irreducible(chi: Character, cache: TableCache) -> bool:
    """Every normal subgroup either central for chi or irreducible under it,
    tested via [chi, chi]_L in {1, chi(1)^2}."""
    _require_irreducible(chi)
    d2 = chi.degree ** 2
    for L in cache.lat.normals:
        ip = cache.squared_norm_on(chi, L)
        if ip not in (1, d2):
            return False
    return True


def is_monomial(chi: Character, cache: TableCache):
    """(True, (subgroup class, linear index)) when induced from a linear
    character, else (False, None)."""
    _require_irreducible(chi)
    G = cache.G
    if chi.degree == 1:
        whole = Subgroup.from_members(G, range(G.order))
        return True, (whole, chi.table_index)
    for cls in cache.lat.classes:
        if cls.order * chi.degree != G.order:
            continue
        st = cache.for_subgroup(cls.rep)
        mults = cache.restriction_multiplicities(chi, st)
        for s, m in enumerate(mults):
            if m >= 1 and int(st.table.degrees[s]) == 1:
                return True, (cls.rep, s)
    return False, None
