"""Dense linear algebra over prime fields, sized for class-algebra work."""

from __future__ import annotations

import numpy as np

from .perm import is_prime


def next_prime_congruent(minimum: int, residue: int, modulus: int) -> int:
    """Smallest prime p >= minimum with p = residue mod modulus."""
    p = minimum + ((residue - minimum) % modulus)
    while True:
        if p >= minimum and is_prime(p):
            return p
        p += modulus


def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fac, m, d = [], p - 1, 2
    while d * d <= m:
        if m % d == 0:
            fac.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        fac.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in fac):
            return g
    raise ValueError("no primitive root mod %d" % p)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # int64 products stay exact: entries < p <= ~1e5 and inner dim <= ~1e3
    return (a.astype(np.int64) @ b.astype(np.int64)) % p


def rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (matrix, pivot columns)."""
    m = a.astype(np.int64).copy() % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        sel = None
        for i in range(r, rows):
            if m[i, c] % p:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            m[[r, sel]] = m[[sel, r]]
        m[r] = m[r] * pow(int(m[r, c]), p - 2, p) % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of the right nullspace of a mod p."""
    rows, cols = a.shape
    m, pivots = rref_mod(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-m[r, fc]) % p
    return basis


def solve_in_basis(s: np.ndarray, t: np.ndarray, p: int) -> np.ndarray:
    """Solve S X = T mod p for full-column-rank S (columns span T's columns)."""
    rows, cols = s.shape
    aug = np.concatenate([s, t], axis=1).astype(np.int64) % p
    m, pivots = rref_mod(aug, p)
    assert pivots[:cols] == list(range(cols)), "basis matrix is rank deficient"
    return m[:cols, cols:] % p


def charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial mod p, ascending coefficients, monic."""
    h = a.astype(np.int64).copy() % p
    m = h.shape[0]
    for j in range(m - 2):
        sel = None
        for r in range(j + 1, m):
            if h[r, j]:
                sel = r
                break
        if sel is None:
            continue
        if sel != j + 1:
            h[[j + 1, sel]] = h[[sel, j + 1]]
            h[:, [j + 1, sel]] = h[:, [sel, j + 1]]
        inv = pow(int(h[j + 1, j]), p - 2, p)
        for r in range(j + 2, m):
            f = int(h[r, j]) * inv % p
            if f:
                h[r] = (h[r] - f * h[j + 1]) % p
                h[:, j + 1] = (h[:, j + 1] + f * h[:, r]) % p
    polys = [np.array([1], dtype=np.int64)]
    for r in range(1, m + 1):
        prev = polys[r - 1]
        cur = np.zeros(r + 1, dtype=np.int64)
        cur[1:] += prev
        cur[:-1] -= int(h[r - 1, r - 1]) * prev
        cur %= p
        prod = 1
        for i in range(r - 2, -1, -1):
            prod = prod * int(h[i + 1, i]) % p
            if prod == 0:
                break
            coef = int(h[i, r - 1]) * prod % p
            if coef:
                cur[: i + 1] = (cur[: i + 1] - coef * polys[i]) % p
        polys.append(cur % p)
    return polys[m]


def poly_roots_mod(coeffs: np.ndarray, p: int) -> dict[int, int]:
    """Roots in F_p with multiplicities, by full scan plus synthetic division."""
    lam = np.arange(p, dtype=np.int64)
    val = np.zeros(p, dtype=np.int64)
    for a in np.asarray(coeffs, dtype=np.int64)[::-1] % p:
        val = (val * lam + a) % p
    out = {}
    for r in np.nonzero(val == 0)[0]:
        r = int(r)
        mult = 0
        poly = [int(v) for v in coeffs]
        while True:
            # synthetic division by (x - r), ascending coefficients
            quot = [0] * (len(poly) - 1)
            carry = 0
            for i in range(len(poly) - 1, 0, -1):
                carry = (poly[i] + carry * r) % p
                quot[i - 1] = carry
            rem = (poly[0] + carry * r) % p
            if rem != 0:
                break
            mult += 1
            poly = quot
            if len(poly) == 1:
                break
        out[r] = mult
    return out
