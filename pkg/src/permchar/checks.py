"""Theorem verifiers: each check runs over its qualifying instances in a
group and reports Pass, Fail, HypothesesNotSatisfied, or Vacuous, with a
re-checkable witness payload on failure.

Check ids (the CLI surface) name the statements being verified:

  A   nonvanishing transfers between an element and its p-part
  B   squared value norms are integers dividing the squared degree
  C   the maximal zero-free complete intersections form one conjugacy
      class whose permutation character is chi-bar times chi
  E   the permutation-character equation over a regular intersection
      forces quasi-primitivity
  F   the class from C is a regular intersection when |G : Z(chi)| is odd
  G   vanishing off a complete intersection's conjugates is equivalent to
      containing the distinguished subgroup, up to conjugacy
  H   regular intersections of p-power index meet normal subgroups of
      p-power index in regular intersections
  I   restriction to a normal subgroup of p-power index stays irreducible
      and quasi-primitive, with matching distinguished classes
  J   irreducible restrictions to subgroups of p-power index are
      quasi-primitive, for small prime-power degrees
  K   no multiple of a qualifying character is induced from a proper
      subgroup
  M   |chi(x)| never exceeds |chi(x^m)|
  N   chi(1)^2 n_chi divides |G|
  O   characters with extremal support order lcm are monomial
  R3  equal squared norms give equal quasi-primitivity status in odd groups
"""

from __future__ import annotations

import time

import numpy as np

from .characters import (
    Character,
    is_monomial,
    is_primitive,
    is_quasi_primitive,
    is_strongly_irreducible,
    n_chi,
    permutation_character,
    restrict,
    table_cache,
)
from .errors import ConfigError
from .intersections import intersections
from .lattice import Subgroup, lattice
from .perm import Group, prime_factors

PASS = "Pass"
FAIL = "Fail"
HNS = "HypothesesNotSatisfied"
VACUOUS = "Vacuous"

THEOREM_IDS = ["A", "B", "C", "E", "F", "G", "H", "I", "J", "K", "M", "N", "O", "R3"]


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_plain(v) for v in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    return value


class Report:
    """One verification outcome; Fail always carries a concrete witness."""

    def __init__(self, theorem, group, character, status, witness=None, seconds=0.0):
        self.theorem = theorem
        self.group = group
        self.character = character
        self.status = status
        self.witness = witness or {}
        self.seconds = seconds

    def as_json(self):
        return {
            "theorem": self.theorem,
            "group": self.group,
            "character": self.character,
            "status": self.status,
            "witness": _plain(self.witness),
            "seconds": round(self.seconds, 6),
        }

    def __repr__(self):
        return "Report(%s, %s, chi=%s, %s)" % (
            self.theorem,
            self.group,
            self.character,
            self.status,
        )


def _sub_json(sub: Subgroup) -> dict:
    return {"order": sub.order, "generators": sub.generator_cycle_strings()}


class GroupData:
    """All cached analysis shared by the checks on one group."""

    def __init__(self, G: Group):
        self.G = G
        self.lat = lattice(G)
        self.cache = table_cache(G)
        self.table = self.cache.root
        self.ictx = intersections(G)
        self._qp = {}
        self._prim = {}
        self._strong = {}
        self._monomial = {}
        self._nsq = {}
        self._eqcls = {}
        self._frak0 = {}
        self._regular = {}
        self._kernels = {}
        self._quotient_data = {}
        self._prop2_counts = {}
        self._rest_matrices = {}
        self._ppart_maps = {}
        self._solvable = None

    # group-level predicates

    @property
    def solvable(self) -> bool:
        if self._solvable is None:
            self._solvable = self.lat.is_solvable()
        return self._solvable

    @property
    def odd_order(self) -> bool:
        return self.G.order % 2 == 1

    def pi_solvable(self, n: int) -> bool:
        return all(self.lat.is_p_solvable(p) for p in prime_factors(n))

    # per-character caches

    def chi(self, s: int) -> Character:
        return self.table.chars[s]

    def qp(self, s: int):
        if s not in self._qp:
            self._qp[s] = is_quasi_primitive(self.chi(s), self.cache)
        return self._qp[s]

    def primitive(self, s: int):
        if s not in self._prim:
            self._prim[s] = is_primitive(self.chi(s), self.cache)
        return self._prim[s]

    def strongly_irreducible(self, s: int) -> bool:
        if s not in self._strong:
            self._strong[s] = is_strongly_irreducible(self.chi(s), self.cache)
        return self._strong[s]

    def monomial(self, s: int):
        if s not in self._monomial:
            self._monomial[s] = is_monomial(self.chi(s), self.cache)
        return self._monomial[s]

    def norm_ints(self, s: int):
        """|chi(c)|^2 per class as plain integers, or None when irrational."""
        if s not in self._nsq:
            nv = self.chi(s).norm_vector()
            if nv[:, 1:].any():
                self._nsq[s] = None
            else:
                self._nsq[s] = nv[:, 0].copy()
        return self._nsq[s]

    def center_of(self, s: int) -> Subgroup:
        from .characters import center_Z

        return center_Z(self.chi(s))

    def kernel_of(self, s: int) -> Subgroup:
        if s not in self._kernels:
            from .characters import kernel

            self._kernels[s] = kernel(self.chi(s))
        return self._kernels[s]

    def equation_classes(self, s: int) -> list[int]:
        """Subgroup class ids U with chi-bar chi equal to (1_U)^G, by scan."""
        if s not in self._eqcls:
            ns = self.norm_ints(s)
            out = []
            if ns is not None:
                for cls in self.lat.classes:
                    vals = self.ictx.perm_values(cls.id)
                    if np.array_equal(vals, ns):
                        out.append(cls.id)
            self._eqcls[s] = out
        return self._eqcls[s]

    def frak0(self, s: int):
        if s not in self._frak0:
            from .intersections import maximal_zero_free

            self._frak0[s] = maximal_zero_free(self.chi(s))
        return self._frak0[s]

    def regular_of_class(self, cid: int):
        if cid not in self._regular:
            rep = self.lat.classes[cid].rep
            self._regular[cid] = self.ictx.regular_witness(rep)
        return self._regular[cid]

    def rest_matrix(self, mid: int) -> np.ndarray:
        """Row s: multiplicities of Irr(M) in chi_s restricted to the class rep."""
        if mid not in self._rest_matrices:
            st = self.cache.for_subgroup(self.lat.classes[mid].rep)
            self._rest_matrices[mid] = np.stack(
                [
                    self.cache.restriction_multiplicities(chi, st)
                    for chi in self.table.chars
                ]
            )
        return self._rest_matrices[mid]

    def p_part_map(self, p: int) -> list[int]:
        """Class of the p-part of each class representative."""
        if p not in self._ppart_maps:
            G = self.G
            self._ppart_maps[p] = [
                G.class_index(G.p_part(c.rep, p)) for c in G.classes
            ]
        return self._ppart_maps[p]

    # quotient machinery for the strongly-irreducible value formula

    def quotient_data(self, kernel_members: frozenset):
        key = kernel_members
        if key not in self._quotient_data:
            if len(kernel_members) == 1:
                self._quotient_data[key] = (
                    self.G,
                    None,
                    list(range(self.G.order)),
                )
            else:
                Q, proj = self.G.quotient(kernel_members)
                reps = self.G.section_reps(proj, Q)
                self._quotient_data[key] = (Q, proj, reps)
        return self._quotient_data[key]

    def prop2_counts(self, kernel_members, K_members, Z_members):
        """Per quotient class: (#{k in K: [x,k] in Z}, |C_K(x)|)."""
        key = (kernel_members, K_members)
        if key not in self._prop2_counts:
            Q, _, _ = self.quotient_data(kernel_members)
            arr = np.fromiter(sorted(K_members), dtype=np.int32, count=len(K_members))
            zset = Z_members
            out = []
            for cls in Q.classes:
                comms = Q.bulk_commutator(cls.rep, arr)
                in_z = sum(1 for v in comms if int(v) in zset)
                fixed = int((comms == 0).sum())
                out.append((in_z, fixed))
            self._prop2_counts[key] = out
        return self._prop2_counts[key]


def group_data(G: Group) -> GroupData:
    data = getattr(G, "_pc_group_data", None)
    if data is None:
        data = GroupData(G)
        G._pc_group_data = data
    return data


# -- helpers -------------------------------------------------------------------


def _is_prime_power(n: int):
    ps = prime_factors(n)
    return ps[0] if len(ps) == 1 else None


def _timed(reports, theorem, group, character, status, witness, t0):
    reports.append(
        Report(theorem, group, character, status, witness, time.perf_counter() - t0)
    )


def _finish(reports, theorem, gname):
    if not reports:
        return [Report(theorem, gname, None, VACUOUS, {"instances": 0})]
    return reports


def _restricted_character(data: GroupData, s: int, sub: Subgroup):
    """chi restricted to a promoted subgroup, flagged irreducible iff it is."""
    st = data.cache.for_subgroup(sub)
    res = restrict(data.chi(s), st)
    mults = data.cache.decompose(res)
    irr = int((mults > 0).sum()) == 1 and int(mults.max()) == 1
    return st, Character(st.H, res.V, res.conductor, is_irreducible=irr), mults


# -- the checks ------------------------------------------------------------------


def check_A(data: GroupData):
    G = data.G
    reports = []
    for s, chi in enumerate(data.table.chars):
        if not data.qp(s)[0]:
            continue
        t0 = time.perf_counter()
        if chi.degree == 1:
            primes = prime_factors(G.order) or [2]
        else:
            p = _is_prime_power(chi.degree)
            if p is None or not data.lat.is_p_solvable(p):
                _timed(
                    reports, "A", G.name, s, HNS,
                    {"degree": chi.degree, "reason": "degree not a prime power with p-solvable G"},
                    t0,
                )
                continue
            primes = [p]
        bad = None
        for p in primes:
            pmap = data.p_part_map(p)
            for c in range(len(G.classes)):
                cp = pmap[c]
                if chi.V[c].any() != chi.V[cp].any():
                    bad = {"class": c, "p": p, "p_part_class": cp}
                    break
            if bad:
                break
        _timed(reports, "A", G.name, s, FAIL if bad else PASS, bad or {}, t0)
    return _finish(reports, "A", G.name)


def _check_prop2_formula(data: GroupData, s: int):
    """The centralizer-index formula for faithful strongly irreducible
    characters, applied in the quotient by the kernel."""
    G = data.G
    chi = data.chi(s)
    ker = data.kernel_of(s)
    Q, proj, reps = data.quotient_data(ker.members)
    if Q is G:
        qclass_value = lambda c: c
        qdata = data
        lat = data.lat
    else:
        qdata = group_data(Q)
        lat = qdata.lat
    zbar = frozenset(Q.center_indices())
    over_z = [
        N
        for N in lat.normals
        if zbar < N.members
        and not any(zbar < M.members < N.members for M in lat.normals)
    ]
    if len(over_z) != 1:
        return {"reason": "quotient center is not under a unique minimal normal",
                "count": len(over_z)}
    K = over_z[0]
    size = K.order // len(zbar)
    p = _is_prime_power(size)
    if p is None or chi.degree % p != 0:
        return {"reason": "chief factor over the center is not a p-group for p | degree"}
    counts = data.prop2_counts(ker.members, K.members, zbar)
    for cq, cls in enumerate(Q.classes):
        if Q is G:
            val_class = cq
        else:
            val_class = G.class_index(reps[cls.rep])
        nsq = data.norm_ints(s)
        actual = int(nsq[val_class]) if nsq is not None else None
        in_z, fixed = counts[cq]
        expected = fixed // len(zbar) if in_z == fixed else 0
        if actual != expected:
            return {
                "reason": "value formula mismatch",
                "quotient_class": cq,
                "expected": expected,
                "actual": actual,
            }
    return None


def check_B(data: GroupData):
    G = data.G
    reports = []
    for s, chi in enumerate(data.table.chars):
        if not data.qp(s)[0]:
            continue
        t0 = time.perf_counter()
        if not data.pi_solvable(chi.degree):
            _timed(reports, "B", G.name, s, HNS,
                   {"reason": "group is not pi(degree)-solvable"}, t0)
            continue
        ns = data.norm_ints(s)
        bad = None
        if ns is None:
            bad = {"reason": "some |chi(x)|^2 is irrational"}
        else:
            d2 = chi.degree ** 2
            for c, v in enumerate(ns):
                v = int(v)
                if v < 0 or (v != 0 and d2 % v != 0):
                    bad = {"class": c, "value": v, "degree_squared": d2}
                    break
        if bad is None and chi.degree > 1 and data.strongly_irreducible(s):
            bad = _check_prop2_formula(data, s)
        _timed(reports, "B", G.name, s, FAIL if bad else PASS, bad or {}, t0)
    return _finish(reports, "B", G.name)


def check_C(data: GroupData):
    G = data.G
    reports = []
    for s, chi in enumerate(data.table.chars):
        if not data.qp(s)[0]:
            continue
        t0 = time.perf_counter()
        scan = data.equation_classes(s)
        if chi.degree % 2 == 0 or not data.pi_solvable(chi.degree):
            _timed(
                reports, "C", G.name, s, HNS,
                {
                    "reason": "degree is even or solvability fails",
                    "degree": chi.degree,
                    "equation_classes": scan,
                },
                t0,
            )
            continue
        top = data.frak0(s)
        bad = None
        if len(top) != 1:
            bad = {"reason": "maximal zero-free set is not one class",
                   "count": len(top),
                   "orders": [w.subgroup.order for w in top]}
        else:
            U = top[0].subgroup
            if chi * chi.conjugate() != permutation_character(G, U):
                bad = {"reason": "permutation character equation fails",
                       "subgroup": _sub_json(U)}
        witness = bad or {
            "subgroup": _sub_json(top[0].subgroup),
            "family_class_ids": list(top[0].family),
            "equation_classes": scan,
            "extra_representations": [
                cid for cid in scan if cid != top[0].class_id
            ],
        }
        _timed(reports, "C", G.name, s, FAIL if bad else PASS, witness, t0)
    return _finish(reports, "C", G.name)


def _equation_regular_instances(data: GroupData):
    """(chi index, subgroup class id, witness) with chi-bar chi = (1_U)^G
    and U a regular intersection."""
    out = []
    for s in range(len(data.table.chars)):
        for cid in data.equation_classes(s):
            w = data.regular_of_class(cid)
            if w is not None:
                out.append((s, cid, w))
    return out


def check_E(data: GroupData):
    G = data.G
    reports = []
    for s, cid, w in _equation_regular_instances(data):
        t0 = time.perf_counter()
        ok, offender = data.qp(s)
        witness = {
            "subgroup_class": cid,
            "family_class_ids": list(w.family),
        }
        if not ok:
            witness["offending_normal"] = _sub_json(offender)
        _timed(reports, "E", G.name, s, PASS if ok else FAIL, witness, t0)
    return _finish(reports, "E", G.name)


def check_F(data: GroupData):
    G = data.G
    reports = []
    for s, chi in enumerate(data.table.chars):
        if not data.qp(s)[0]:
            continue
        t0 = time.perf_counter()
        if not data.pi_solvable(chi.degree):
            _timed(reports, "F", G.name, s, HNS,
                   {"reason": "group is not pi(degree)-solvable"}, t0)
            continue
        zc = data.center_of(s)
        index = G.order // zc.order
        if index % 2 == 0:
            _timed(reports, "F", G.name, s, HNS,
                   {"reason": "|G : Z(chi)| is even", "index": index}, t0)
            continue
        top = data.frak0(s)
        if len(top) != 1:
            _timed(reports, "F", G.name, s, FAIL,
                   {"reason": "maximal zero-free set is not one class"}, t0)
            continue
        w = data.regular_of_class(top[0].class_id)
        witness = {"subgroup": _sub_json(top[0].subgroup)}
        if w is not None:
            witness["family_class_ids"] = list(w.family)
        _timed(reports, "F", G.name, s, PASS if w is not None else FAIL, witness, t0)
    return _finish(reports, "F", G.name)


def check_G(data: GroupData):
    G = data.G
    reports = []
    maximal_ids = set(data.lat.maximal_ids)
    for s, ucid, w in _equation_regular_instances(data):
        t0 = time.perf_counter()
        chi = data.chi(s)
        support = set(chi.support())
        bad = None
        for v in data.ictx.complete:
            counts = v.subgroup.class_counts()
            vanishes_off = all(counts[c] > 0 for c in support)
            contains_u = data.lat.contains_conjugate(v.class_id, ucid)
            if vanishes_off != contains_u:
                bad = {
                    "complete_class": v.class_id,
                    "vanishes_off_conjugates": vanishes_off,
                    "contains_distinguished": contains_u,
                }
                break
        if bad is None:
            for mid in maximal_ids:
                rep = data.lat.classes[mid].rep
                counts = rep.class_counts()
                vanishes_off = all(counts[c] > 0 for c in support)
                contains_u = data.lat.contains_conjugate(mid, ucid)
                if not (vanishes_off and contains_u):
                    if data.cache.squared_norm_on(chi, rep) != 1:
                        bad = {
                            "maximal_class": mid,
                            "reason": "restriction not irreducible and equivalence fails",
                        }
                        break
        _timed(reports, "G", G.name, s, FAIL if bad else PASS,
               bad or {"subgroup_class": ucid}, t0)
    return _finish(reports, "G", G.name)


def _promote(data: GroupData, sub: Subgroup):
    """Standalone group for a subgroup plus a member translation map."""
    H, pidx = sub.as_group()
    back = {int(p): i for i, p in enumerate(pidx)}
    return H, back


def check_H(data: GroupData):
    G = data.G
    reports = []
    regs = [
        (cls.id, data.regular_of_class(cls.id))
        for cls in data.lat.classes
        if data.regular_of_class(cls.id) is not None
    ]
    for N in data.lat.normals:
        if N.is_whole_group or N.is_trivial:
            continue
        p = _is_prime_power(G.order // N.order)
        if p is None:
            continue
        for cid, w in regs:
            U = data.lat.classes[cid].rep
            pu = _is_prime_power(G.order // U.order) if not U.is_whole_group else p
            if U.is_whole_group or pu != p:
                continue
            t0 = time.perf_counter()
            meet = U.members & N.members
            witness = {
                "p": p,
                "normal_order": N.order,
                "subgroup_class": cid,
                "meet_order": len(meet),
            }
            if meet == N.members:
                _timed(reports, "H", G.name, None, PASS, witness, t0)
                continue
            Hgrp, back = _promote(data, N)
            local = Subgroup.from_members(Hgrp, [back[m] for m in meet])
            wr = intersections(Hgrp).regular_witness(local)
            _timed(reports, "H", G.name, None,
                   PASS if wr is not None else FAIL, witness, t0)
    return _finish(reports, "H", G.name)


def check_I(data: GroupData):
    G = data.G
    reports = []
    if not data.odd_order:
        return _finish(reports, "I", G.name)
    memo = {}
    for N in data.lat.normals:
        if N.is_whole_group or N.is_trivial:
            continue
        p = _is_prime_power(G.order // N.order)
        if p is None or not data.lat.is_p_solvable(p):
            continue
        for s, chi in enumerate(data.table.chars):
            dp = _is_prime_power(chi.degree)
            if chi.degree > 1 and dp != p:
                continue
            if not data.qp(s)[0]:
                continue
            t0 = time.perf_counter()
            st, res, mults = _restricted_character(data, s, N)
            witness = {"normal_order": N.order, "p": p}
            # many characters share one restriction; analyse it once
            key = (N.members, res.V.tobytes())
            if key not in memo:
                if not res.is_irreducible:
                    memo[key] = ("reducible", None)
                else:
                    ok, _off = is_quasi_primitive(res, table_cache(st.H))
                    if not ok:
                        memo[key] = ("not_qp", None)
                    elif res.degree == 1:
                        # zero-free everywhere: the unique maximal element is N
                        memo[key] = ("ok", {frozenset(range(st.H.order))})
                    else:
                        from .intersections import maximal_zero_free

                        lat_h = lattice(st.H)
                        lhs = set()
                        for w in maximal_zero_free(res):
                            lhs.update(lat_h.classes[w.class_id].conjugates)
                        memo[key] = ("ok", lhs)
            verdict, lhs = memo[key]
            if verdict == "reducible":
                _timed(reports, "I", G.name, s, FAIL,
                       dict(witness, reason="restriction not irreducible"), t0)
                continue
            if verdict == "not_qp":
                _timed(reports, "I", G.name, s, FAIL,
                       dict(witness, reason="restriction not quasi-primitive"), t0)
                continue
            # the distinguished classes downstairs equal the meets from
            # upstairs, as sets of subgroups in local coordinates
            back = {int(pnt): i for i, pnt in enumerate(st.pidx)}
            rhs = set()
            for w in data.frak0(s):
                ucid = data.lat.class_of_subgroup(w.subgroup.members)
                for conj in data.lat.classes[ucid].conjugates:
                    meet = conj & N.members
                    rhs.add(frozenset(back[m] for m in meet))
            status = PASS if lhs == rhs else FAIL
            witness["distinguished_orders"] = sorted(len(x) for x in lhs)
            witness["meet_orders"] = sorted(len(x) for x in rhs)
            _timed(reports, "I", G.name, s, status, witness, t0)
    return _finish(reports, "I", G.name)


def check_J(data: GroupData):
    G = data.G
    reports = []
    for s, ucid, w in _equation_regular_instances(data):
        chi = data.chi(s)
        p = _is_prime_power(chi.degree)
        if chi.degree == 1 or p is None or p == 2:
            continue
        a = 0
        d = chi.degree
        while d > 1:
            d //= p
            a += 1
        if a >= p:
            continue
        for cls in data.lat.classes:
            if cls.order == G.order:
                continue
            ph = _is_prime_power(G.order // cls.order)
            if ph != p:
                continue
            if data.cache.squared_norm_on(chi, cls.rep) != 1:
                continue
            t0 = time.perf_counter()
            st, res, _ = _restricted_character(data, s, cls.rep)
            assert res.is_irreducible
            ok, _off = is_quasi_primitive(res, table_cache(st.H))
            _timed(reports, "J", G.name, s,
                   PASS if ok else FAIL,
                   {"subgroup_class": cls.id, "p": p}, t0)
    return _finish(reports, "J", G.name)


def check_K(data: GroupData):
    G = data.G
    reports = []
    for s, chi in enumerate(data.table.chars):
        t0 = time.perf_counter()
        if not data.qp(s)[0]:
            _timed(reports, "K", G.name, s, HNS,
                   {"reason": "character is not quasi-primitive"}, t0)
            continue
        if not data.pi_solvable(chi.degree):
            _timed(reports, "K", G.name, s, HNS,
                   {"reason": "group is not pi(degree)-solvable"}, t0)
            continue
        zc = data.center_of(s)
        if (G.order // zc.order) % 2 == 0:
            _timed(reports, "K", G.name, s, HNS,
                   {"reason": "|G : Z(chi)| is even"}, t0)
            continue
        bad = None
        for mid in data.lat.maximal_ids:
            # theta >= 0 with theta^G = e chi exists iff some irreducible
            # constituent already induces a multiple of chi, because the
            # restriction-multiplicity matrix has non-negative entries
            rest = data.rest_matrix(mid)
            for phi_idx in range(rest.shape[1]):
                col = rest[:, phi_idx]
                if col[s] > 0 and not any(
                    col[t] for t in range(len(col)) if t != s
                ):
                    bad = {
                        "maximal_class": mid,
                        "inducing_character": phi_idx,
                        "multiplicity": int(col[s]),
                    }
                    break
            if bad:
                break
        _timed(reports, "K", G.name, s, FAIL if bad else PASS, bad or {}, t0)
    return _finish(reports, "K", G.name)


def theorem_K_check(G: Group, chi: Character) -> Report:
    """Single-character form of check K."""
    data = group_data(G)
    s = chi.table_index
    if s is None:
        raise ConfigError("character must come from the group's table")
    for rep in check_K(data):
        if rep.character == s:
            return rep
    return Report("K", G.name, s, HNS, {"reason": "character not qualifying"})


def check_M(data: GroupData):
    G = data.G
    reports = []
    for s, chi in enumerate(data.table.chars):
        if chi.degree % 2 == 0 or not data.primitive(s)[0]:
            continue
        t0 = time.perf_counter()
        if not data.solvable:
            _timed(reports, "M", G.name, s, HNS, {"reason": "group not solvable"}, t0)
            continue
        ns = data.norm_ints(s)
        bad = None
        if ns is None:
            bad = {"reason": "irrational squared norm"}
        else:
            for c, cls in enumerate(G.classes):
                pm = G.power_maps()[c]
                for m in range(cls.element_order):
                    if int(ns[c]) > int(ns[pm[m]]):
                        bad = {"class": c, "power": m, "lhs": int(ns[c]),
                               "rhs": int(ns[pm[m]])}
                        break
                if bad:
                    break
        _timed(reports, "M", G.name, s, FAIL if bad else PASS, bad or {}, t0)
    return _finish(reports, "M", G.name)


def check_N(data: GroupData):
    G = data.G
    reports = []
    for s, chi in enumerate(data.table.chars):
        if chi.degree % 2 == 0 or not data.primitive(s)[0]:
            continue
        t0 = time.perf_counter()
        if not data.solvable:
            _timed(reports, "N", G.name, s, HNS, {"reason": "group not solvable"}, t0)
            continue
        n = n_chi(chi)
        ok = (G.order % (chi.degree ** 2 * n)) == 0
        _timed(reports, "N", G.name, s, PASS if ok else FAIL,
               {"n_chi": n, "degree": chi.degree}, t0)
    return _finish(reports, "N", G.name)


def check_O(data: GroupData):
    G = data.G
    reports = []
    for s, chi in enumerate(data.table.chars):
        if chi.degree % 2 == 0:
            continue
        n = n_chi(chi)
        if n * chi.degree != G.order:
            continue
        t0 = time.perf_counter()
        if not data.solvable:
            _timed(reports, "O", G.name, s, HNS, {"reason": "group not solvable"}, t0)
            continue
        ok, witness = data.monomial(s)
        payload = {"n_chi": n}
        if ok and chi.degree > 1:
            payload["inducing_subgroup_order"] = witness[0].order
        _timed(reports, "O", G.name, s, PASS if ok else FAIL, payload, t0)
    return _finish(reports, "O", G.name)


def check_R3(data: GroupData):
    G = data.G
    reports = []
    if not data.odd_order:
        return _finish(reports, "R3", G.name)
    by_norm = {}
    for s, chi in enumerate(data.table.chars):
        key = chi.norm_vector().tobytes()
        by_norm.setdefault(key, []).append(s)
    for members in by_norm.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                a, b = members[i], members[j]
                t0 = time.perf_counter()
                same = data.qp(a)[0] == data.qp(b)[0]
                _timed(reports, "R3", G.name, a,
                       PASS if same else FAIL,
                       {"other_character": b,
                        "qp": [data.qp(a)[0], data.qp(b)[0]]}, t0)
    return _finish(reports, "R3", G.name)


CHECKS = {
    "A": check_A,
    "B": check_B,
    "C": check_C,
    "E": check_E,
    "F": check_F,
    "G": check_G,
    "H": check_H,
    "I": check_I,
    "J": check_J,
    "K": check_K,
    "M": check_M,
    "N": check_N,
    "O": check_O,
    "R3": check_R3,
}


def verify(theorem_id: str, G: Group) -> list[Report]:
    """Run one check over a group; one report per qualifying instance."""
    if theorem_id not in CHECKS:
        raise ConfigError(
            "unknown theorem id %r; valid ids: %s" % (theorem_id, ",".join(THEOREM_IDS))
        )
    return CHECKS[theorem_id](group_data(G))
