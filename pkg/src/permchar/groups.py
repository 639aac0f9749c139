"""Built-in group constructors, name parsing, and JSON ingestion.

Constructors return permutation groups on small point sets, never the
regular representation when a cheaper faithful action exists.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import ConfigError, NotPrime
from .perm import DEFAULT_ORDER_CAP, Group, Permutation, is_prime


def cyclic(n: int, cap=DEFAULT_ORDER_CAP) -> Group:
    if n < 1:
        raise ConfigError("cyclic(n) needs n >= 1")
    if n == 1:
        return Group(1, [], name="cyclic(1)", cap=cap)
    images = [(i + 1) % n for i in range(n)]
    return Group(n, [Permutation(images)], name="cyclic(%d)" % n, cap=cap)


def abelian(*ds: int, cap=DEFAULT_ORDER_CAP) -> Group:
    if not ds:
        raise ConfigError("abelian needs at least one factor")
    G = cyclic(ds[0], cap=cap)
    for d in ds[1:]:
        G = direct_product(G, cyclic(d, cap=cap), cap=cap)
    G.name = "abelian(%s)" % ",".join(str(d) for d in ds)
    return G


def dihedral(order: int, cap=DEFAULT_ORDER_CAP) -> Group:
    """Dihedral group of the given (even) order."""
    if order % 2 != 0 or order < 2:
        raise ConfigError("dihedral order must be even and positive")
    n = order // 2
    if n == 1:
        G = cyclic(2, cap=cap)
    elif n == 2:
        G = abelian(2, 2, cap=cap)
    else:
        r = Permutation([(i + 1) % n for i in range(n)])
        s = Permutation([(n - i) % n for i in range(n)])
        G = Group(n, [r, s], cap=cap)
    G.name = "dihedral(%d)" % order
    assert G.order == order
    return G


def frobenius(p: int, q: int, cap=DEFAULT_ORDER_CAP) -> Group:
    """C_p : C_q with faithful action on p points; requires q | p - 1."""
    if not is_prime(p):
        raise NotPrime("frobenius(p,q) needs p prime")
    if q <= 1 or (p - 1) % q != 0:
        raise ConfigError("frobenius(p,q) needs q | p-1 and q > 1")
    g = _primitive_root(p)
    r = pow(g, (p - 1) // q, p)
    trans = Permutation([(i + 1) % p for i in range(p)])
    mult = Permutation([(r * i) % p for i in range(p)])
    G = Group(p, [trans, mult], name="frobenius(%d,%d)" % (p, q), cap=cap)
    assert G.order == p * q
    return G


def extraspecial(p: int, cap=DEFAULT_ORDER_CAP) -> Group:
    """Extraspecial group of order p^3 and exponent p (p odd prime).

    Realized as the unitriangular group acting on the p^2 affine points
    (a, b); the stabilizer of a point is core-free, so the action is
    faithful.
    """
    if not is_prime(p) or p == 2:
        raise NotPrime("extraspecial(p) needs an odd prime")
    pts = p * p

    def pt(a, b):
        return a * p + b

    g1 = Permutation([pt((a + b) % p, b) for a in range(p) for b in range(p)])
    g2 = Permutation([pt(a, (b + 1) % p) for a in range(p) for b in range(p)])
    g3 = Permutation([pt((a + 1) % p, b) for a in range(p) for b in range(p)])
    G = Group(pts, [g1, g2, g3], name="extraspecial(%d)" % p, cap=cap)
    assert G.order == p ** 3
    return G


def _primitive_root(p: int) -> int:
    fac = []
    m = p - 1
    d = 2
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
    raise AssertionError("no primitive root found")


def _torus_element(p: int, q: int):
    """An order-q matrix in SL2(p) with irreducible characteristic polynomial."""
    for t in range(p):
        if pow((t * t - 4) % p, (p - 1) // 2, p) == p - 1:
            m = ((0, (p - 1) % p), (1, t % p))  # companion of x^2 - t x + 1
            cur = m
            order = 1
            while cur != ((1, 0), (0, 1)):
                cur = _mat_mul(cur, m, p)
                order += 1
                if order > p + 1:
                    break
            if order == q:
                return m
    raise ConfigError("no order-%d nonsplit torus element in SL2(%d)" % (q, p))


def _mat_mul(a, b, p):
    return (
        (
            (a[0][0] * b[0][0] + a[0][1] * b[1][0]) % p,
            (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % p,
        ),
        (
            (a[1][0] * b[0][0] + a[1][1] * b[1][0]) % p,
            (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % p,
        ),
    )


def fullyramified(p: int, q: int, cap=DEFAULT_ORDER_CAP) -> Group:
    """p^(1+2) : C_q with C_q acting irreducibly on the Frattini quotient.

    Requires q | p + 1.  The extraspecial part is the symplectic Heisenberg
    model on triples (a, b, c) with product cocycle (a b' - b a')/2, on which
    any SL2(p) element acts coordinate-wise; an order-q element with
    irreducible characteristic polynomial gives the twisting automorphism.
    """
    if not is_prime(p) or p == 2:
        raise NotPrime("fullyramified(p,q) needs an odd prime p")
    if q <= 1 or (p + 1) % q != 0:
        raise ConfigError("fullyramified(p,q) needs q | p+1 and q > 1")
    inv2 = (p + 1) // 2
    m = _torus_element(p, q)

    def pt(a, b, c):
        return (a * p + b) * p + c

    pts = []
    tx, ty, sg = [], [], []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                tx.append(pt((a + 1) % p, b, (c - b * inv2) % p))
                ty.append(pt(a, (b + 1) % p, (c + a * inv2) % p))
                aa = (m[0][0] * a + m[1][0] * b) % p
                bb = (m[0][1] * a + m[1][1] * b) % p
                sg.append(pt(aa, bb, c))
    G = Group(
        p ** 3,
        [Permutation(tx), Permutation(ty), Permutation(sg)],
        name="fullyramified(%d,%d)" % (p, q),
        cap=cap,
    )
    assert G.order == p ** 3 * q
    return G


def gl23(cap=DEFAULT_ORDER_CAP) -> Group:
    """GL2(F3) acting on the 8 nonzero vectors of F3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def act(mat):
        return Permutation(
            [
                pos[
                    (
                        (mat[0][0] * a + mat[0][1] * b) % 3,
                        (mat[1][0] * a + mat[1][1] * b) % 3,
                    )
                ]
                for (a, b) in vecs
            ]
        )

    gens = [
        act(((1, 1), (0, 1))),
        act(((1, 0), (1, 1))),
        act(((2, 0), (0, 1))),
    ]
    G = Group(8, gens, name="gl23", cap=cap)
    assert G.order == 48
    return G


def direct_product(A: Group, B: Group, cap=DEFAULT_ORDER_CAP, name=None) -> Group:
    deg = A.degree + B.degree
    gens = []
    for g in A.generators:
        gens.append(Permutation(list(g.images) + [A.degree + i for i in range(B.degree)]))
    for g in B.generators:
        gens.append(Permutation(list(range(A.degree)) + [A.degree + v for v in g.images]))
    G = Group(deg, gens, name=name or "product(%s,%s)" % (A.name, B.name), cap=cap)
    assert G.order == A.order * B.order
    return G


# -- name parsing and file ingestion -----------------------------------------

_NAME_RE = re.compile(r"^([a-zA-Z_][a-zA-Z_0-9]*)(?:\((.*)\))?$")


def _split_args(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur).strip())
    return parts


def by_name(name: str, cap=DEFAULT_ORDER_CAP) -> Group:
    """Construct a built-in group from its catalog name string."""
    name = name.strip()
    m = _NAME_RE.match(name)
    if not m:
        raise ConfigError("cannot parse group name %r" % name)
    head, body = m.group(1), m.group(2)
    args = _split_args(body) if body else []
    try:
        if head == "cyclic":
            return cyclic(int(args[0]), cap=cap)
        if head == "abelian":
            return abelian(*(int(a) for a in args), cap=cap)
        if head == "dihedral":
            return dihedral(int(args[0]), cap=cap)
        if head == "frobenius":
            return frobenius(int(args[0]), int(args[1]), cap=cap)
        if head == "extraspecial":
            return extraspecial(int(args[0]), cap=cap)
        if head == "fullyramified":
            return fullyramified(int(args[0]), int(args[1]), cap=cap)
        if head == "gl23":
            return gl23(cap=cap)
        if head in ("product", "direct_product"):
            if len(args) != 2:
                raise ConfigError("product takes two factors")
            return direct_product(
                by_name(args[0], cap=cap), by_name(args[1], cap=cap), cap=cap
            )
    except (IndexError, ValueError) as exc:
        raise ConfigError("bad arguments in group name %r" % name) from exc
    raise ConfigError("unknown group constructor %r" % head)


def from_spec(doc: dict, cap=DEFAULT_ORDER_CAP) -> Group:
    """Build a group from the ingestion schema.

    {"name": str, "degree": int, "generators": [[cycle, ...], ...]} with
    cycles given as arrays of 1-based points and fixed points omitted.
    """
    try:
        degree = int(doc["degree"])
        gens = [
            Permutation.from_cycles(degree, cycles, one_based=True)
            for cycles in doc["generators"]
        ]
        name = str(doc.get("name", "group"))
    except (KeyError, TypeError) as exc:
        raise ConfigError("malformed group document: %s" % exc) from exc
    return Group(degree, gens, name=name, cap=cap)


def load_group(spec, cap=DEFAULT_ORDER_CAP) -> Group:
    """Accept a builtin name, a path to a JSON file, or an inline document."""
    if isinstance(spec, dict):
        return from_spec(spec, cap=cap)
    spec = str(spec)
    path = Path(spec)
    if path.suffix == ".json" or path.is_file():
        try:
            doc = json.loads(path.read_text())
        except OSError as exc:
            raise ConfigError("cannot read group file %s: %s" % (spec, exc)) from exc
        return from_spec(doc, cap=cap)
    return by_name(spec, cap=cap)
