"""Discrete and elliptic level-zero parameters, their sign characters, and the
numeric data fed to the generalized Springer correspondence."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Mapping, NamedTuple, Sequence

from .errors import InputError, NotApplicable
from .orbits import DISCRETE, ELLIPTIC, ORTHOGONAL, SYMPLECTIC, Orbit, classify_orbit, enumerate_orbits
from .tame import TameCharacter

PM = (1, -1)


class BlockRef(NamedTuple):
    """One Jordan block instance: class key, orbit sign zeta, size, copy index."""

    cls: object
    zeta: int
    alpha: int
    copy: int


@dataclass(frozen=True)
class DiscreteParameter:
    chi: TameCharacter
    comps: tuple  # of (class key, plus Orbit, minus Orbit)
    mode: str = DISCRETE

    def comp(self, key) -> tuple[Orbit, Orbit]:
        for k, plus, minus in self.comps:
            if k == key:
                return plus, minus
        return Orbit(), Orbit()

    def orbit(self, key, zeta: int) -> Orbit:
        plus, minus = self.comp(key)
        return plus if zeta == 1 else minus

    def blocks(self) -> list[BlockRef]:
        out = []
        for key, plus, minus in self.comps:
            for zeta, orb in ((1, plus), (-1, minus)):
                for alpha, m in orb.multiplicities().items():
                    out.extend(BlockRef(key, zeta, alpha, c) for c in range(m))
        return out

    def to_json(self, eps: Sequence[int] | None = None) -> dict:
        data = {
            "chi": self.chi.to_json(),
            "mode": self.mode,
            "comps": [
                {"class": _key_json(k), "plus": list(p.blocks), "minus": list(m.blocks)}
                for k, p, m in self.comps
            ],
        }
        if eps is not None:
            data["eps"] = list(eps)
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> tuple["DiscreteParameter", tuple[int, ...] | None]:
        try:
            chi = TameCharacter.from_json(data["chi"])
            mode = data.get("mode", DISCRETE)
            comps = {}
            for c in data["comps"]:
                key = _key_from_json(c["class"], chi)
                comps[key] = (Orbit(tuple(c.get("plus", ()))), Orbit(tuple(c.get("minus", ()))))
            eps = data.get("eps")
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed parameter: {exc}") from exc
        psi = make_parameter(chi, comps, mode)
        if eps is not None:
            eps = tuple(int(e) for e in eps)
            if len(eps) != len(psi.blocks()) or any(e not in PM for e in eps):
                raise InputError("eps must give one sign in {1,-1} per Jordan block")
        return psi, eps


def _key_json(key):
    return key if isinstance(key, int) else {"N": key[0], "rep": key[1]}


def _key_from_json(raw, chi: TameCharacter):
    if isinstance(raw, int):
        for c in chi.classes:
            if c.rep == raw or c.key() == raw:
                return c.key()
        raise InputError(f"class {raw} not present in chi")
    return (int(raw["N"]), int(raw["rep"]))


def _orbit_kinds(cls) -> tuple[str, str]:
    return (SYMPLECTIC, SYMPLECTIC) if cls.is_pm1 else (SYMPLECTIC, ORTHOGONAL)


def make_parameter(chi: TameCharacter, comps: Mapping, mode: str = DISCRETE) -> DiscreteParameter:
    """Validate orbit data class by class and build the parameter."""
    rows = []
    for c in chi.classes:
        plus, minus = comps.get(c.key(), (Orbit(), Orbit()))
        if plus.total + minus.total != c.mult:
            raise InputError(f"orbit totals for class {c.key()} do not add up to {c.mult}")
        for orb, kind in zip((plus, minus), _orbit_kinds(c)):
            flags = classify_orbit(orb)
            if not flags[kind] or not flags[mode]:
                raise InputError(f"orbit {orb.blocks} is not {kind} {mode} in class {c.key()}")
        rows.append((c.key(), plus, minus))
    extra = set(comps) - {c.key() for c in chi.classes}
    if extra:
        raise InputError(f"orbit data given for classes outside chi: {sorted(map(str, extra))}")
    return DiscreteParameter(chi, tuple(rows), mode)


def enumerate_parameters(chi: TameCharacter, mode: str = DISCRETE) -> list[DiscreteParameter]:
    per_class = []
    for c in chi.classes:
        kp, km = _orbit_kinds(c)
        opts = []
        for mp in range(c.mult, -1, -1):
            for plus in enumerate_orbits(mp, kp, mode):
                for minus in enumerate_orbits(c.mult - mp, km, mode):
                    opts.append((c.key(), plus, minus))
        per_class.append(opts)
    return [DiscreteParameter(chi, tuple(rows), mode) for rows in itertools.product(*per_class)]


def enumerate_sign_characters(psi: DiscreteParameter) -> list[tuple[int, ...]]:
    return list(itertools.product(PM, repeat=len(psi.blocks())))


def epsilon_center(psi: DiscreteParameter, eps: Sequence[int]) -> int:
    return prod(eps, start=1)


def signs_by_block(psi: DiscreteParameter, eps: Sequence[int]) -> dict[BlockRef, int]:
    blocks = psi.blocks()
    if len(eps) != len(blocks):
        raise InputError("eps length does not match the number of Jordan blocks")
    return dict(zip(blocks, eps))


def gen_springer_k(orbit: Orbit, signs, sentinel: int = 1) -> int:
    """Cuspidal-support integer by the alternation rule.

    Blocks are read in increasing size, the sentinel sign is appended after the
    largest one, and k counts sign changes between neighbours.  `signs` is a
    map alpha -> sign or a sequence aligned with ``orbit.blocks``.
    """
    flags = classify_orbit(orbit)
    if not (flags[SYMPLECTIC] and flags[DISCRETE]):
        raise NotApplicable(f"{orbit} is not a symplectic orbit with distinct blocks")
    if isinstance(signs, Mapping):
        seq = [signs[a] for a in orbit.blocks]
    else:
        seq = list(signs)
        if len(seq) != len(orbit.blocks):
            raise InputError("one sign per block is required")
    chain = [s for _, s in sorted(zip(orbit.blocks, seq))] + [sentinel]
    return sum(1 for a, b in zip(chain, chain[1:]) if a != b)


def weyl_rank_from_k(total: int, k: int) -> int:
    twice = total - k * (k + 1)
    if twice < 0 or twice % 2:
        raise NotApplicable(f"total {total} is incompatible with k={k}")
    return twice // 2


def cusp_from_k(k_plus: int, k_minus: int) -> tuple[int, int, int]:
    """(I, P, zeta) from the two integers k_{u,+}, k_{u,-}."""
    a, b = k_plus + k_minus + 1, abs(k_plus - k_minus)
    I, P = (a, b) if a % 2 else (b, a)
    if k_plus != k_minus:
        zeta = 1 if k_plus > k_minus else -1
    else:
        zeta = (-1) ** k_plus
    return I, P, zeta


@dataclass(frozen=True)
class SpLData:
    n_prime: dict
    n_second: dict
    k: dict  # (u, eps') -> int
    N: dict  # (u, eps') -> int
    I: dict
    P: dict
    zeta: dict

    def cusp_triple(self) -> tuple:
        return ((self.I[1], self.I[-1]), (self.P[1], self.P[-1]), (self.zeta[1], self.zeta[-1]))

    def to_json(self) -> dict:
        return {
            "n_prime": {str(k): v for k, v in self.n_prime.items()},
            "n_second": {str(k): v for k, v in self.n_second.items()},
            "k": {f"{u},{e}": v for (u, e), v in self.k.items()},
            "N": {f"{u},{e}": v for (u, e), v in self.N.items()},
            "I": {str(u): v for u, v in self.I.items()},
            "P": {str(u): v for u, v in self.P.items()},
            "zeta": {str(u): v for u, v in self.zeta.items()},
        }


def springer_lusztig_data(psi: DiscreteParameter, eps: Sequence[int], sentinel: int = 1) -> SpLData:
    signs = signs_by_block(psi, eps)
    n1, n2, ks, Ns, I, P, Z = {}, {}, {}, {}, {}, {}, {}
    for c in psi.chi.classes:
        key = c.key()
        if c.is_pm1:
            continue
        n1[key] = sum(b.alpha for b, s in signs.items() if b.cls == key and s == 1)
        n2[key] = sum(b.alpha for b, s in signs.items() if b.cls == key and s == -1)
    for u in PM:
        for ep in PM:
            orb = psi.orbit(u, ep)
            block_signs = [signs[BlockRef(u, ep, a, 0)] for a in orb.blocks]
            k = gen_springer_k(orb, block_signs, sentinel)
            ks[(u, ep)] = k
            Ns[(u, ep)] = weyl_rank_from_k(orb.total, k)
        n1[u] = psi.orbit(u, 1).total
        n2[u] = psi.orbit(u, -1).total
        I[u], P[u], Z[u] = cusp_from_k(ks[(u, 1)], ks[(u, -1)])
    return SpLData(n1, n2, ks, Ns, I, P, Z)


def reconstituted_n(psi: DiscreteParameter, spl: SpLData) -> int:
    """Half-rank rebuilt from the n', n'' data: sum of ell*(n'+n'') plus half the
    +-1 totals."""
    twice = 0
    for c in psi.chi.classes:
        key = c.key()
        if c.is_pm1:
            twice += spl.n_prime[key] + spl.n_second[key]
        else:
            twice += 2 * c.ell * (spl.n_prime[key] + spl.n_second[key])
    return twice // 2


__all__ = [
    "BlockRef", "DiscreteParameter", "SpLData", "make_parameter", "enumerate_parameters",
    "enumerate_sign_characters", "epsilon_center", "gen_springer_k", "springer_lusztig_data",
    "cusp_from_k", "weyl_rank_from_k", "reconstituted_n", "signs_by_block", "DISCRETE", "ELLIPTIC",
]
