"""Stable / semistable / instable classification.

Three views of the same trichotomy live here: the rule on (n, cusp) pairs, the
rule read directly on a parameter (psi, eps), and the list of individual
instability triggers for localized data.  Helpers translate the k-integers of
the generalized Springer correspondence into (I, P, zeta) and back.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .params import PM, DiscreteParameter, cusp_from_k, signs_by_block, springer_lusztig_data
from .symbols import CuspidalDatum, cusp_datum


class StabilityClass(str, enum.Enum):
    STABLE = "stable"
    SEMISTABLE = "semistable"
    INSTABLE = "instable"

    def __str__(self) -> str:
        return self.value


def pair_conditions(n_data: Mapping, cusp: CuspidalDatum) -> dict[str, bool]:
    """Truth value of every clause entering the pair classification."""
    return {
        "eps_I_eq_eps_P": cusp.eps_I == cusp.eps_P,
        "gap_one": all(abs(cusp.I(e) - cusp.P(e)) == 1 for e in PM),
        "zeta_plus": cusp.zeta_plus == cusp.zeta_minus == 1,
        "zeta_minus": cusp.zeta_plus == cusp.zeta_minus == -1,
        "n_second_zero": all(v[1] == 0 for v in n_data.values()),
        "n_prime_zero": all(v[0] == 0 for v in n_data.values()),
    }


def classify_pair(n_data: Mapping, cusp: CuspidalDatum) -> StabilityClass:
    """Classify a pair (n, cusp).

    n_data maps each class key to (n', n'').  For the classes +1 and -1 these are
    the Weyl-group ranks attached to the two orbit signs.
    """
    c = pair_conditions(n_data, cusp)
    if c["eps_I_eq_eps_P"] and c["gap_one"]:
        if c["zeta_plus"] and c["n_second_zero"]:
            return StabilityClass.STABLE
        if c["zeta_minus"] and c["n_prime_zero"]:
            return StabilityClass.SEMISTABLE
    return StabilityClass.INSTABLE


def classify_parameter(psi: DiscreteParameter, eps: Sequence[int]) -> StabilityClass:
    """Classify (psi, eps) by its signs off +-1 and the orbits U_{+-1, -+}.

    When both clause sets hold (only possible for the empty parameter) the
    answer is stable.
    """
    signs = signs_by_block(psi, eps)
    off = [s for b, s in signs.items() if b.cls not in PM]
    if all(s == 1 for s in off) and all(psi.orbit(u, -1).total == 0 for u in PM):
        return StabilityClass.STABLE
    if all(s == -1 for s in off) and all(psi.orbit(u, 1).total == 0 for u in PM):
        return StabilityClass.SEMISTABLE
    return StabilityClass.INSTABLE


def pair_of_parameter(psi: DiscreteParameter, eps: Sequence[int], sentinel: int = 1):
    """Project (psi, eps) to (n_data, cusp) through the Springer-Lusztig data."""
    spl = springer_lusztig_data(psi, eps, sentinel)
    n_data = {}
    for key in spl.n_prime:
        if key in PM:
            n_data[key] = (spl.N[(key, 1)], spl.N[(key, -1)])
        else:
            n_data[key] = (spl.n_prime[key], spl.n_second[key])
    I, P, Z = spl.cusp_triple()
    return n_data, cusp_datum(I, P, Z)


def classify_via_pair(psi: DiscreteParameter, eps: Sequence[int], sentinel: int = 1) -> StabilityClass:
    n_data, cusp = pair_of_parameter(psi, eps, sentinel)
    return classify_pair(n_data, cusp)


# k-integers <-> cuspidal data

def k_from_cusp(I: int, P: int, zeta: int) -> dict[int, int]:
    """Inverse of cusp_from_k: {+1: k_+, -1: k_-}."""
    return {zeta: (I + P - 1) // 2, -zeta: (abs(I - P) - 1) // 2}


def k_identities_hold(k_plus: int, k_minus: int) -> bool:
    I, P, z = cusp_from_k(k_plus, k_minus)
    return k_from_cusp(I, P, z) == {1: k_plus, -1: k_minus} and abs(I - P) == 1 + 2 * {1: k_plus, -1: k_minus}[-z]


def translation_sides(ks: Mapping[int, tuple[int, int]], sign: int) -> tuple[bool, bool]:
    """Both sides of the k-translation equivalence for one sign.

    ks maps u in {+1, -1} to (k_{u,+}, k_{u,-}).  The left side asks
    |I_u - P_u| = 1 and zeta_u = sign for both u; the right side asks
    k_{u,-sign} = 0 for both u.
    """
    left = right = True
    for u in PM:
        kp, km = ks[u]
        I, P, z = cusp_from_k(kp, km)
        left &= abs(I - P) == 1 and z == sign
        right &= (km if sign == 1 else kp) == 0
    return left, right


# instability triggers on localized data

@dataclass
class InstabilityReport:
    mixed_split: list = field(default_factory=list)
    cusp_window: bool = False
    zeta_gap: bool = False
    empty_prime: list = field(default_factory=list)
    reduced: dict = field(default_factory=dict)

    @property
    def instable(self) -> bool:
        return bool(self.mixed_split or self.cusp_window or self.zeta_gap or self.empty_prime)

    def fired(self) -> list[str]:
        names = []
        if self.mixed_split:
            names.append("mixed_split")
        if self.cusp_window:
            names.append("cusp_window")
        if self.zeta_gap:
            names.append("zeta_gap")
        if self.empty_prime:
            names.append("empty_prime")
        return names

    def to_json(self) -> dict:
        return {
            "instable": self.instable,
            "fired": self.fired(),
            "mixed_split": [str(k) for k in self.mixed_split],
            "empty_prime": list(self.empty_prime),
            "reduced": {str(k): list(v) for k, v in self.reduced.items()},
        }


def instability_report(m_data: Mapping, cusp: CuspidalDatum) -> InstabilityReport:
    """Evaluate each instability trigger for splits m_data[key] = (m', m'').

    At +1 and -1 the splits are first reduced to M = m - r^2 with the cuspidal
    radii r', r''; absent signs count as (0, 0).
    """
    rep = InstabilityReport()
    for key, (m1, m2) in m_data.items():
        if key in PM:
            continue
        if m1 * m2 != 0:
            rep.mixed_split.append(key)
    for e in PM:
        m1, m2 = m_data.get(e, (0, 0))
        M1, M2 = m1 - cusp.r_prime(e) ** 2, m2 - cusp.r_second(e) ** 2
        rep.reduced[e] = (M1, M2)
        if M1 * M2 != 0:
            rep.mixed_split.append(e)
        if M1 == 0 and M2 != 0 and cusp.r_prime(e) * cusp.r_second(e) != 0:
            rep.empty_prime.append(e)
    ei, ep = cusp.eps_I, cusp.eps_P
    rep.cusp_window = not (abs(cusp.I(ei) - cusp.P(ep)) == 1 and abs(cusp.I(-ei) - cusp.P(-ep)) == 1)
    rep.zeta_gap = cusp.zeta_plus * cusp.zeta_minus == -1 and cusp.P_plus * cusp.P_minus != 0
    return rep


__all__ = [
    "StabilityClass", "pair_conditions", "classify_pair", "classify_parameter", "classify_via_pair", "pair_of_parameter",
    "k_from_cusp", "k_identities_hold", "translation_sides", "InstabilityReport", "instability_report",
]
