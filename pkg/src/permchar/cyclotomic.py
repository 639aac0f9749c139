"""Exact arithmetic in the cyclotomic fields Q(zeta_n).

Elements are stored as coefficient vectors of length phi(n) on the power
basis 1, z, ..., z^(phi(n)-1), reduced modulo the n-th cyclotomic
polynomial.  Equality is coefficient equality, so the representation is
canonical and zero testing is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divide(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, ascending coefficients
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending, monic, exact integers."""
    if n == 1:
        return (-1, 1)
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k is the coefficient vector of x^k mod Phi_n, for k up to
    max(n-1, 2*phi-2).  Used for multiplication and Galois maps."""
    phi = totient(n)
    top = max(n - 1, 2 * phi - 2)
    rows: list[tuple[int, ...]] = []
    for k in range(phi):
        row = [0] * phi
        row[k] = 1
        rows.append(tuple(row))
    cyc = cyclotomic_polynomial(n)
    # x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
    head = tuple(-c for c in cyc[:phi])
    rows.append(head)
    for k in range(phi + 1, top + 1):
        prev = rows[-1]
        shifted = [0] + list(prev[:-1])
        lead = prev[-1]
        if lead:
            shifted = [s + lead * h for s, h in zip(shifted, head)]
        rows.append(tuple(shifted))
    return tuple(rows)


def _norm(v) -> int | Fraction:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


class Cyc:
    """An element of Q(zeta_n) with canonical reduced coefficients."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, coeffs):
        self.n = n
        c = tuple(_norm(v) for v in coeffs)
        assert len(c) == totient(n)
        self.c = c

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rational(v, n: int = 1) -> "Cyc":
        phi = totient(n)
        coeffs = [0] * phi
        coeffs[0] = Fraction(v)
        return Cyc(n, coeffs)

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyc":
        return Cyc(n, _power_rows(n)[k % n])

    @staticmethod
    def from_exponent_counts(n: int, counts) -> "Cyc":
        """Sum of counts[e] copies of zeta_n^e."""
        phi = totient(n)
        acc = [0] * phi
        rows = _power_rows(n)
        for e, m in counts.items():
            if m == 0:
                continue
            row = rows[e % n]
            for i, r in enumerate(row):
                if r:
                    acc[i] += m * r
        return Cyc(n, acc)

    # -- predicates -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.c)

    @property
    def is_rational(self) -> bool:
        return all(v == 0 for v in self.c[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("not a rational element: %r" % (self,))
        return Fraction(self.c[0])

    @property
    def is_integer(self) -> bool:
        return self.is_rational and Fraction(self.c[0]).denominator == 1

    def int_value(self) -> int:
        v = self.rational_value()
        if v.denominator != 1:
            raise ValueError("not a rational integer: %r" % (self,))
        return int(v)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.n == self.n:
                return other
            if other.is_rational:
                return Cyc.from_rational(other.c[0], self.n)
            if self.is_rational:
                return None  # handled by caller swapping
            raise ValueError("conductor mismatch: %d vs %d" % (self.n, other.n))
        if isinstance(other, (int, Fraction)):
            return Cyc.from_rational(other, self.n)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return other + self
        if o is NotImplemented:
            return NotImplemented
        return Cyc(self.n, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, [-a for a in self.c])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyc) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc(self.n, [a * other for a in self.c])
        o = self._coerce(other)
        if o is None:
            return other * self
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Cyc.from_rational(0, self.n)
        if self.is_rational:
            return o * Fraction(self.c[0])
        if o.is_rational:
            return self * Fraction(o.c[0])
        phi = len(self.c)
        conv = [0] * (2 * phi - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(o.c):
                if b != 0:
                    conv[i + j] += a * b
        rows = _power_rows(self.n)
        acc = list(conv[:phi])
        for k in range(phi, 2 * phi - 1):
            v = conv[k]
            if v != 0:
                row = rows[k]
                for i, r in enumerate(row):
                    if r:
                        acc[i] += v * r
        return Cyc(self.n, acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Fraction(1, 1) * Fraction(Fraction(other).denominator, Fraction(other).numerator)
        return NotImplemented

    # -- Galois action --------------------------------------------------

    def galois(self, m: int) -> "Cyc":
        """Apply zeta -> zeta^m; requires gcd(m, n) = 1."""
        import math

        n = self.n
        m %= n
        if math.gcd(m, n) != 1:
            raise ValueError("galois exponent not coprime to conductor")
        phi = len(self.c)
        rows = _power_rows(n)
        acc = [0] * phi
        for k, a in enumerate(self.c):
            if a == 0:
                continue
            row = rows[(k * m) % n]
            for i, r in enumerate(row):
                if r:
                    acc[i] += a * r
        return Cyc(n, acc)

    def conjugate(self) -> "Cyc":
        if self.n <= 2:
            return self
        return self.galois(self.n - 1)

    def to_conductor(self, m: int) -> "Cyc":
        """Embed into Q(zeta_m); requires n | m."""
        if m == self.n:
            return self
        if m % self.n != 0:
            raise ValueError("cannot embed conductor %d into %d" % (self.n, m))
        step = m // self.n
        rows = _power_rows(m)
        acc = [0] * totient(m)
        for k, a in enumerate(self.c):
            if a == 0:
                continue
            row = rows[(k * step) % m]
            for i, r in enumerate(row):
                if r:
                    acc[i] += a * r
        return Cyc(m, acc)

    # -- identity -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.c[0] == other
        if not isinstance(other, Cyc):
            return NotImplemented
        if self.n == other.n:
            return self.c == other.c
        if self.is_rational or other.is_rational:
            return self.is_rational and other.is_rational and self.c[0] == other.c[0]
        return False

    def __hash__(self):
        if self.is_rational:
            return hash(self.c[0])
        return hash((self.n, self.c))

    def __repr__(self):
        if self.is_rational:
            return "Cyc(%s)" % (self.c[0],)
        terms = []
        for k, a in enumerate(self.c):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            else:
                coef = "" if a == 1 else ("-" if a == -1 else "%s*" % a)
                terms.append("%sz%d^%d" % (coef, self.n, k))
        return "Cyc(" + " + ".join(terms) + ")"

    def as_json(self):
        """JSON form: plain number when rational, else conductor + coefficients."""
        if self.is_rational:
            v = Fraction(self.c[0])
            return int(v) if v.denominator == 1 else str(v)
        return {
            "conductor": self.n,
            "coefficients": [
                int(v) if isinstance(v, int) or v.denominator == 1 else str(v)
                for v in self.c
            ],
        }
