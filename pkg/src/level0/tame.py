"""Tame characters: self-dual multisets of roots of unity, grouped into orbits
under u -> u^q."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .errors import InputError, MultiplicityMismatch, SelfDualityViolation


def is_odd_prime_power(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    p = 3
    while p * p <= q and q % p:
        p += 2
    if q % p:
        p = q
    while q % p == 0:
        q //= p
    return q == 1


def q_orbit(k: int, q: int, N: int) -> tuple[int, ...]:
    """Exponents k, kq, kq^2, ... modulo N, in order of appearance."""
    k %= N
    seen = [k]
    x = (k * q) % N
    while x != k:
        seen.append(x)
        x = (x * q) % N
    return tuple(seen)


@dataclass(frozen=True)
class EigenClass:
    """An orbit [u] of exponents of zeta_N under multiplication by q."""

    N: int
    rep: int
    members: frozenset
    ell: int
    mult: int

    @property
    def sign(self) -> int | None:
        """+1 or -1 when the class is {1} or {-1}; None otherwise."""
        if self.rep == 0:
            return 1
        if 2 * self.rep == self.N:
            return -1
        return None

    @property
    def is_pm1(self) -> bool:
        return self.sign is not None

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def weight(self) -> int:
        """Contribution of one copy of the class to 2n."""
        return 1 if self.is_pm1 else 2 * self.ell

    def key(self):
        """Hashable identifier used across modules: +1, -1, or (N, rep)."""
        return self.sign if self.is_pm1 else (self.N, self.rep)

    def with_mult(self, m: int) -> "EigenClass":
        return EigenClass(self.N, self.rep, self.members, self.ell, m)


def eigen_class(k: int, q: int, N: int, mult: int = 1) -> EigenClass:
    """The class of zeta_N^k; raises SelfDualityViolation if it lacks inverses."""
    orb = q_orbit(k, q, N)
    neg = (-k) % N
    if neg not in orb:
        raise SelfDualityViolation(f"class of exponent {k} mod {N} does not contain {neg}")
    rep = min(orb)
    if 2 * rep % N == 0:
        ell = 1
    else:
        ell = orb.index(neg)
        assert len(orb) == 2 * ell
    return EigenClass(N, rep, frozenset(orb), ell, mult)


@dataclass(frozen=True)
class TameCharacter:
    q: int
    N: int
    classes: tuple[EigenClass, ...] = field(default=())

    @property
    def two_n(self) -> int:
        return sum(c.weight * c.mult for c in self.classes)

    @property
    def n(self) -> int:
        return self.two_n // 2

    def get(self, key) -> EigenClass | None:
        for c in self.classes:
            if c.key() == key:
                return c
        return None

    def mult(self, key) -> int:
        c = self.get(key)
        return c.mult if c else 0

    def to_json(self) -> dict:
        return {"q": self.q, "N": self.N, "classes": [{"rep": c.rep, "mult": c.mult} for c in self.classes]}

    @classmethod
    def from_json(cls, data: dict) -> "TameCharacter":
        try:
            q, N = int(data["q"]), int(data["N"])
            seeds = [(int(c["rep"]), int(c["mult"])) for c in data["classes"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed tame character: {exc}") from exc
        return build_tame_character(q, N, seeds)


def build_tame_character(q: int, N: int, seeds: Iterable[tuple[int, int]]) -> TameCharacter:
    if not is_odd_prime_power(q):
        raise InputError(f"q={q} is not an odd prime power")
    if N < 1 or gcd(N, q) != 1:
        raise InputError(f"N={N} must be positive and prime to q")
    found: dict[int, EigenClass] = {}
    for k, m in seeds:
        if m < 1:
            raise InputError("multiplicities must be positive")
        c = eigen_class(k, q, N, m)
        if c.rep in found and found[c.rep].mult != m:
            raise MultiplicityMismatch(f"seeds in the class of {c.rep} carry multiplicities {found[c.rep].mult} and {m}")
        found[c.rep] = c
    return TameCharacter(q, N, tuple(found[r] for r in sorted(found)))


def self_dual_classes(q: int, N: int) -> list[EigenClass]:
    """All inversion-closed q-orbits on Z/N, ordered by representative."""
    out, seen = [], set()
    for k in range(N):
        if k in seen:
            continue
        orb = q_orbit(k, q, N)
        seen.update(orb)
        try:
            out.append(eigen_class(k, q, N))
        except SelfDualityViolation:
            pass
    return out


def class_assignments(q: int, N: int, total: int) -> list[tuple[EigenClass, ...]]:
    """All choices of self-dual classes with multiplicities whose weighted sum
    (1 for +-1, 2*ell otherwise) equals total."""
    pool = self_dual_classes(q, N)
    results: list[tuple[EigenClass, ...]] = []

    def rec(i: int, left: int, chosen: list[EigenClass]):
        if i == len(pool):
            if left == 0:
                results.append(tuple(chosen))
            return
        c = pool[i]
        for m in range(left // c.weight, -1, -1):
            rec(i + 1, left - m * c.weight, chosen + ([c.with_mult(m)] if m else []))

    rec(0, total, [])
    return results


def enumerate_tame_characters(q: int, two_n: int, N: int) -> list[TameCharacter]:
    if two_n < 0 or two_n % 2:
        raise InputError("2n must be even and nonnegative")
    if not is_odd_prime_power(q) or N < 1 or gcd(N, q) != 1:
        raise InputError("need an odd prime power q and N prime to q")
    return [TameCharacter(q, N, cls) for cls in class_assignments(q, N, two_n)]
