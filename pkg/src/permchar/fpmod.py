"""Chief-factor sections as modules over prime fields.

A section K/L with K/L elementary abelian of order p^d becomes a d-dim
right F_p-module under conjugation; the module attached to a maximal
subgroup M is the unique minimal normal subgroup of G/Core_G(M), pulled
back as a section module.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    NotElementaryAbelian,
    NotNormal,
    PrimeMismatch,
    SolvabilityHypothesisFailed,
)
from .lattice import Subgroup, lattice
from .modlin import nullspace_mod, rref_mod
from .perm import Group, prime_factors

_SIMPLICITY_POINT_LIMIT = 100000


class FpModule:
    """Generator action matrices over F_p; right action on row vectors."""

    def __init__(self, group: Group, prime: int, mats, label: str = ""):
        self.group = group
        self.prime = prime
        self.mats = tuple(np.asarray(m, dtype=np.int64) % prime for m in mats)
        self.dim = int(self.mats[0].shape[0]) if self.mats else 0
        self.label = label
        for m in self.mats:
            assert m.shape == (self.dim, self.dim)
            if _det_rank(m, prime) != self.dim:
                raise NotElementaryAbelian("action matrix is singular")

    @property
    def size(self) -> int:
        return self.prime ** self.dim

    def act(self, vec, t: int) -> np.ndarray:
        return np.asarray(vec, dtype=np.int64) @ self.mats[t] % self.prime

    def __repr__(self):
        return "FpModule(p=%d, dim=%d%s)" % (
            self.prime,
            self.dim,
            ", %s" % self.label if self.label else "",
        )


class ModuleMap:
    """An invertible intertwiner between two modules of the same group."""

    def __init__(self, source: FpModule, target: FpModule, matrix):
        self.source = source
        self.target = target
        self.matrix = np.asarray(matrix, dtype=np.int64) % source.prime
        p = source.prime
        for a, b in zip(source.mats, target.mats):
            if ((a @ self.matrix - self.matrix @ b) % p).any():
                raise ValueError("matrix does not intertwine the actions")

    def __repr__(self):
        return "ModuleMap(dim=%d)" % self.source.dim


def _det_rank(m: np.ndarray, p: int) -> int:
    _, pivots = rref_mod(m, p)
    return len(pivots)


def _mat_inv(m: np.ndarray, p: int) -> np.ndarray:
    d = m.shape[0]
    aug = np.concatenate([m, np.eye(d, dtype=np.int64)], axis=1)
    red, pivots = rref_mod(aug, p)
    assert pivots == list(range(d)), "matrix not invertible"
    return red[:, d:] % p


def section_module(G: Group, K: Subgroup, L: Subgroup) -> FpModule:
    """The conjugation module on a chief-style section K/L."""
    if not (G.is_normal_set(K.members) and G.is_normal_set(L.members)):
        raise NotNormal("section endpoints must be normal")
    if not L.members < K.members:
        raise NotElementaryAbelian("need L < K")
    size = K.order // L.order
    primes = prime_factors(size)
    if len(primes) != 1:
        raise NotElementaryAbelian("section order %d is not a prime power" % size)
    p = primes[0]
    d = 0
    while p ** d < size:
        d += 1
    label, reps = G.coset_labels(L.members)
    powp = G.pow_map(p)
    k_cosets = sorted({int(label[i]) for i in K.members})
    for c in k_cosets:
        r = reps[c]
        if int(powp[r]) not in L.members:
            raise NotElementaryAbelian("section has an element of order p^2")
    for c in k_cosets:
        for c2 in k_cosets:
            a, b = reps[c], reps[c2]
            comm = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b))
            if comm not in L.members:
                raise NotElementaryAbelian("section is not abelian")

    # discrete logs by greedy basis extension over coset representatives
    ident = int(label[0])
    vecs = {ident: tuple([0] * d)}
    rep_elem = {ident: 0}
    basis_elems = []
    for c in k_cosets:
        if c in vecs:
            continue
        i = len(basis_elems)
        b = reps[c]
        basis_elems.append(b)
        known = list(vecs.items())
        bj = b
        for j in range(1, p):
            for lab, v in known:
                r = rep_elem[lab]
                prod = G.mul(r, bj)
                lab2 = int(label[prod])
                if lab2 not in vecs:
                    nv = list(v)
                    nv[i] = j
                    vecs[lab2] = tuple(nv)
                    rep_elem[lab2] = prod
            bj = G.mul(bj, b)
    assert len(basis_elems) == d and len(vecs) == size

    mats = []
    for t, gidx in enumerate(G.gen_indices):
        rows = []
        for b in basis_elems:
            img = G.conj(b, gidx)
            rows.append(vecs[int(label[img])])
        mats.append(np.array(rows, dtype=np.int64))
    return FpModule(G, p, mats, label="section %d/%d" % (K.order, L.order))


def x_module(G: Group, M: Subgroup) -> FpModule:
    """Module of a maximal subgroup: the unique minimal normal subgroup of
    the quotient by the core, as a section module; its size is |G:M|."""
    lat = lattice(G)
    index = G.order // M.order
    primes = prime_factors(index)
    if len(primes) != 1:
        raise SolvabilityHypothesisFailed(
            "maximal subgroup index %d is not a prime power" % index
        )
    p = primes[0]
    if not lat.is_p_solvable(p):
        raise SolvabilityHypothesisFailed("group is not %d-solvable" % p)
    N = lat.core(M.members)
    above = [
        K
        for K in lat.normals
        if N.members < K.members
        and not any(
            N.members < J.members < K.members for J in lat.normals
        )
    ]
    if len(above) != 1:
        raise SolvabilityHypothesisFailed(
            "quotient by the core has %d minimal normal subgroups" % len(above)
        )
    K = above[0]
    X = section_module(G, K, N)
    assert X.size == index, "module size differs from the subgroup index"
    X.label = "x-module of order-%d maximal" % M.order
    return X


def dual_module(X: FpModule) -> FpModule:
    """Dual action: inverse transpose matrices."""
    p = X.prime
    mats = [_mat_inv(m, p).T % p for m in X.mats]
    return FpModule(X.group, p, mats, label="dual(%s)" % (X.label or "module"))


def is_isomorphic(X: FpModule, Y: FpModule):
    """(True, ModuleMap) or (False, None); inputs expected simple.

    Modules over different primes or of different dimensions are never
    isomorphic and are rejected before solving.
    """
    if X.group is not Y.group:
        raise PrimeMismatch("modules live over different groups")
    if X.prime != Y.prime or X.dim != Y.dim:
        return False, None
    p, d = X.prime, X.dim
    if d == 0:
        return True, None
    blocks = []
    eye = np.eye(d, dtype=np.int64)
    for a, b in zip(X.mats, Y.mats):
        blocks.append((np.kron(a, eye) - np.kron(eye, b.T)) % p)
    system = np.concatenate(blocks, axis=0)
    basis = nullspace_mod(system, p)
    if basis.shape[1] == 0:
        return False, None
    for k in range(basis.shape[1]):
        T = basis[:, k].reshape(d, d) % p
        if _det_rank(T, p) == d:
            return True, ModuleMap(X, Y, T)
    # simple inputs always admit an invertible solution; search a few sums
    for k in range(1, basis.shape[1]):
        T = (basis[:, 0] + basis[:, k]).reshape(d, d) % p
        if _det_rank(T, p) == d:
            return True, ModuleMap(X, Y, T)
    return False, None


def is_simple(X: FpModule) -> bool:
    """No proper nonzero invariant subspace, by spinning every projective point."""
    p, d = X.prime, X.dim
    if d <= 1:
        return d == 1
    if p ** d > _SIMPLICITY_POINT_LIMIT:
        raise SolvabilityHypothesisFailed("module too large for exhaustive spin")
    for seed in _projective_points(p, d):
        span = _spin(X, seed)
        if len(span) < d:
            return False
    return True


def _projective_points(p: int, d: int):
    for lead in range(d):
        tail = d - lead - 1
        for rest in range(p ** tail):
            v = [0] * lead + [1]
            r = rest
            for _ in range(tail):
                v.append(r % p)
                r //= p
            yield np.array(v, dtype=np.int64)


def _spin(X: FpModule, seed: np.ndarray) -> list:
    p = X.prime
    basis = []

    def reduce_add(v):
        v = v.copy() % p
        for pivot, row in basis:
            if v[pivot]:
                v = (v - v[pivot] * row) % p
        nz = np.nonzero(v)[0]
        if len(nz) == 0:
            return False
        pivot = int(nz[0])
        v = v * pow(int(v[pivot]), p - 2, p) % p
        basis.append((pivot, v))
        return True

    reduce_add(seed)
    frontier = [seed % p]
    while frontier and len(basis) < X.dim:
        new = []
        for v in frontier:
            for t in range(len(X.mats)):
                w = X.act(v, t)
                if reduce_add(w):
                    new.append(w)
        frontier = new
    return basis


def direct_sum(X: FpModule, Y: FpModule) -> FpModule:
    assert X.group is Y.group and X.prime == Y.prime
    mats = []
    for a, b in zip(X.mats, Y.mats):
        m = np.zeros((X.dim + Y.dim, X.dim + Y.dim), dtype=np.int64)
        m[: X.dim, : X.dim] = a
        m[X.dim :, X.dim :] = b
        mats.append(m)
    return FpModule(X.group, X.prime, mats, label="sum")


def module_json(X: FpModule) -> dict:
    return {
        "prime": X.prime,
        "dim": X.dim,
        "generator_matrices": [[[int(v) for v in row] for row in m] for m in X.mats],
    }
