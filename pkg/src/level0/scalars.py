"""Exact elements of cyclotomic fields Q(zeta_N) with a canonical form.

A value is stored as its coordinates in the power basis 1, z, ..., z^(phi(N)-1)
of Q(z) with z = exp(2 pi i / N), i.e. the remainder of the exponent polynomial
modulo the N-th cyclotomic polynomial.  Values whose only nonzero coordinate is
the constant term are collapsed to order 1, so rationals have a unique form.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Mapping


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _polydivmod(num: list, den: list) -> tuple[list, list]:
    """Long division of integer/rational polynomials (lowest degree first)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c:
            c = Fraction(c, lead) if lead != 1 else c
            q[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    return q, _trim(num[: len(den) - 1])


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (lowest first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _polydivmod(p, list(cyclotomic_poly(d)))
            assert not r
    return tuple(int(c) for c in p)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced coordinates of z^k for k = 0..n-1."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z and reduce using z^deg = -sum phi[i] z^i
        top = cur[-1]
        nxt = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class CycloScalar:
    """An element of Q(zeta_N) in canonical power-basis form."""

    __slots__ = ("order", "_c")

    def __init__(self, order: int, coords):
        self.order = order
        self._c = tuple(coords)

    # construction -----------------------------------------------------
    @classmethod
    def rational(cls, value) -> "CycloScalar":
        return cls(1, (Fraction(value),))

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "CycloScalar":
        return canonicalize({k: 1}, n)

    @classmethod
    def coerce(cls, x) -> "CycloScalar":
        if isinstance(x, CycloScalar):
            return x
        if isinstance(x, (int, Rational)):
            return cls.rational(x)
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic scalar")

    # views ------------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, Fraction]:
        """Nonzero power-basis coordinates keyed by exponent."""
        return {k: c for k, c in enumerate(self._c) if c}

    def is_rational(self) -> bool:
        return self.order == 1

    def to_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self._c[0]

    def is_zero(self) -> bool:
        return self.order == 1 and self._c[0] == 0

    def lift(self, n: int) -> tuple[Fraction, ...]:
        """Coordinates of this value inside Q(zeta_n); requires order | n."""
        if n % self.order:
            raise ValueError("target order must be a multiple")
        step = n // self.order
        table = _power_table(n)
        out = [Fraction(0)] * euler_phi(n)
        for k, c in enumerate(self._c):
            if c:
                for i, t in enumerate(table[(k * step) % n]):
                    if t:
                        out[i] += c * t
        return tuple(out)

    def galois(self, k: int) -> "CycloScalar":
        """Image under zeta_N -> zeta_N^k (k coprime to N)."""
        if gcd(k, self.order) != 1:
            raise ValueError("exponent must be coprime to the order")
        return canonicalize({i * k: c for i, c in enumerate(self._c) if c}, self.order)

    def conjugate(self) -> "CycloScalar":
        return self.galois(-1)

    # arithmetic -------------------------------------------------------
    def _binary(self, other, op):
        other = CycloScalar.coerce(other)
        if self.order == other.order:
            n, a, b = self.order, self._c, other._c
        else:
            n = _lcm(self.order, other.order)
            a, b = self.lift(n), other.lift(n)
        return _normalize(n, op(n, a, b))

    def __add__(self, other):
        try:
            return self._binary(other, lambda n, a, b: [x + y for x, y in zip(a, b)])
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.order, tuple(-c for c in self._c))

    def __sub__(self, other):
        try:
            return self + (-CycloScalar.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycloScalar):
            f = Fraction(other)
            if f == 0:
                return ZERO
            return CycloScalar(self.order, tuple(c * f for c in self._c))
        try:
            return self._binary(other, _mulmod)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycloScalar):
            return self * (1 / Fraction(other))
        other = CycloScalar.coerce(other)
        if other.order == 1:
            return self * (1 / other._c[0])
        return self * other.inverse()

    def inverse(self) -> "CycloScalar":
        """Multiplicative inverse via the norm: x^-1 = prod_{sigma != 1} sigma(x) / N(x)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.order == 1:
            return CycloScalar.rational(1 / self._c[0])
        rest = ONE
        for k in range(2, self.order):
            if gcd(k, self.order) == 1:
                rest = rest * self.galois(k)
        norm = (self * rest).to_fraction()
        return rest * (1 / norm)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = ONE, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        try:
            other = CycloScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.order == other.order:
            return self._c == other._c
        n = _lcm(self.order, other.order)
        return self.lift(n) == other.lift(n)

    def __hash__(self):
        # normalized trace: invariant under lifting to a larger order
        if self.order == 1:
            return hash(self._c[0])
        n = self.order
        tr = Fraction(0)
        for k, c in enumerate(self._c):
            if c:
                d = n // gcd(k, n)
                tr += c * Fraction(_mobius(d), euler_phi(d))
        return hash(tr)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.order == 1:
            return f"CycloScalar({self._c[0]})"
        return f"CycloScalar(N={self.order}, {self.coeffs})"

    def __str__(self):
        if self.order == 1:
            return str(self._c[0])
        terms = []
        for k, c in self.coeffs.items():
            mono = "1" if k == 0 else (f"z{self.order}" if k == 1 else f"z{self.order}^{k}")
            terms.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(terms)

    def to_json(self):
        """Exact JSON-friendly form: a rational string, or an order with coordinates."""
        if self.order == 1:
            return str(self._c[0])
        return {"order": self.order, "coeffs": {str(k): str(c) for k, c in self.coeffs.items()}}


def _mulmod(n: int, a, b) -> list:
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    prod = [Fraction(0)] * (2 * deg - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    for top in range(len(prod) - 1, deg - 1, -1):
        c = prod[top]
        if c:
            for i in range(deg):
                prod[top - deg + i] -= c * phi[i]
    return prod[:deg]


def _normalize(n: int, coords) -> CycloScalar:
    coords = [Fraction(c) for c in coords]
    if n == 1 or not any(coords[1:]):
        return CycloScalar(1, (coords[0] if coords else Fraction(0),))
    # descend to the smallest order containing the value
    for d in _divisors(n):
        if d == n:
            break
        # Q(zeta_d) sits inside Q(zeta_n) via z_d = z_n^(n/d)
        cand = _try_descend(coords, d, n)
        if cand is not None:
            return cand
    return CycloScalar(n, tuple(coords))


@lru_cache(maxsize=None)
def _descent_pivots(n: int, d: int):
    """Echelon data for expressing Q(zeta_n) coordinates in the Q(zeta_d) basis."""
    step = n // d
    table = _power_table(n)
    deg_d = euler_phi(d)
    m = euler_phi(n)
    pivots = []
    for j in range(deg_d):
        r = list(table[(j * step) % n]) + [Fraction(1 if i == j else 0) for i in range(deg_d)]
        for piv, pr in pivots:
            if r[piv]:
                f = r[piv] / pr[piv]
                r = [x - f * y for x, y in zip(r, pr)]
        piv = next(i for i in range(m) if r[i])
        pivots.append((piv, tuple(r)))
    return tuple(pivots)


def _try_descend(coords, d, n):
    m = len(coords)
    deg_d = euler_phi(d)
    target = list(coords)
    sol = [Fraction(0)] * deg_d
    for piv, pr in _descent_pivots(n, d):
        if target[piv]:
            f = target[piv] / pr[piv]
            target = [x - f * y for x, y in zip(target, pr[:m])]
            for i in range(deg_d):
                sol[i] += f * pr[m + i]
    if any(target):
        return None
    if d == 1:
        return CycloScalar(1, (sol[0],))
    return CycloScalar(d, tuple(sol))


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def canonicalize(raw: Mapping[int, object], N: int) -> CycloScalar:
    """Canonical form of sum_k raw[k] * zeta_N^k; exponents are read modulo N."""
    if N < 1:
        raise ValueError("N must be positive")
    table = _power_table(N)
    out = [Fraction(0)] * euler_phi(N)
    for k, c in raw.items():
        c = Fraction(c)
        if c:
            for i, t in enumerate(table[k % N]):
                if t:
                    out[i] += c * t
    return _normalize(N, out)


ZERO = CycloScalar(1, (Fraction(0),))
ONE = CycloScalar(1, (Fraction(1),))


def as_scalar(x) -> CycloScalar:
    return CycloScalar.coerce(x)
