"""Symbols with signed defect, Weyl ranks attached to defects, and cuspidal data
(I, P, zeta) with their derived quantities."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ConventionViolation, ParityError

PM = (1, -1)


@dataclass(frozen=True)
class Symbol:
    rowA: tuple[int, ...]
    rowB: tuple[int, ...]

    def __post_init__(self):
        for row in (self.rowA, self.rowB):
            if any(x < 0 for x in row) or any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError("symbol rows must be strictly increasing nonnegative integers")

    def swapped(self) -> "Symbol":
        return Symbol(self.rowB, self.rowA)

    @property
    def defect(self) -> int:
        return defect(self)

    @property
    def rank(self) -> int:
        """Classical normalization: sum of entries minus floor(((a+b-1)/2)^2)."""
        k = len(self.rowA) + len(self.rowB)
        return sum(self.rowA) + sum(self.rowB) - ((k - 1) ** 2) // 4


def defect(s: Symbol) -> int:
    return len(s.rowA) - len(s.rowB)


def weyl_rank(defect_value: int, rank: int) -> Optional[int]:
    """Rank of the type C Weyl group carried by a symbol; None when negative."""
    d = abs(defect_value)
    if d % 2:
        h = (d - 1) // 2
        r = rank - h * (h + 1)
    else:
        h = d // 2
        r = rank - h * h
    return r if r >= 0 else None


@dataclass(frozen=True)
class CuspidalDatum:
    I_plus: int
    I_minus: int
    P_plus: int
    P_minus: int
    zeta_plus: int
    zeta_minus: int

    def I(self, e: int) -> int:
        return self.I_plus if e == 1 else self.I_minus

    def P(self, e: int) -> int:
        return self.P_plus if e == 1 else self.P_minus

    def zeta(self, e: int) -> int:
        return self.zeta_plus if e == 1 else self.zeta_minus

    def zeta_tilde(self, e: int) -> int:
        return (-1) ** ((self.I(e) - 1) // 2) * self.zeta(e)

    @property
    def delta(self) -> int:
        return (-1) ** (1 + (self.I_plus + self.I_minus) // 2)

    @property
    def eps_I(self) -> int:
        return _eps_pair(self)[0]

    @property
    def eps_P(self) -> int:
        return _eps_pair(self)[1]

    def r_prime(self, e: int) -> int:
        return abs(self.I_plus + e * self.delta * self.I_minus) // 2

    def r_second(self, e: int) -> int:
        return abs(self.P_plus + e * self.delta * self.zeta_plus * self.zeta_minus * self.P_minus) // 2

    @property
    def rq(self) -> tuple[int, int, int, int]:
        """(|r|'_+, |r|''_+, |r|'_-, |r|''_-)."""
        return (self.r_prime(1), self.r_second(1), self.r_prime(-1), self.r_second(-1))

    def chi_tilde_is_sign(self, e: int) -> bool:
        """True when the twisting character attached to e is sgn_CD (I_e < P_e)."""
        return not self.I(e) > self.P(e)

    def to_json(self) -> dict:
        return {"I": [self.I_plus, self.I_minus], "P": [self.P_plus, self.P_minus],
                "zeta": [self.zeta_plus, self.zeta_minus]}

    def label(self) -> str:
        z = lambda s: "+" if s == 1 else "-"
        return f"I=({self.I_plus},{self.I_minus}) P=({self.P_plus},{self.P_minus}) zeta=({z(self.zeta_plus)},{z(self.zeta_minus)})"


def _eps_pair(c: CuspidalDatum) -> tuple[int, int]:
    di, dp = c.I_plus - c.I_minus, c.P_plus - c.P_minus
    si = (di > 0) - (di < 0)
    sp = (dp > 0) - (dp < 0)
    if si == 0 and sp == 0:
        return 1, 1
    if si == 0:
        return sp, sp
    if sp == 0:
        return si, si
    return si, sp


def cusp_datum(I, P, zeta) -> CuspidalDatum:
    """Validate and build a cuspidal datum from pairs indexed (+, -)."""
    (ip, im), (pp, pm), (zp, zm) = I, P, zeta
    for x in (ip, im):
        if x < 1 or x % 2 == 0:
            raise ParityError(f"I entries must be odd positive, got {x}")
    for x in (pp, pm):
        if x < 0 or x % 2:
            raise ParityError(f"P entries must be even nonnegative, got {x}")
    for z in (zp, zm):
        if z not in PM:
            raise ParityError(f"zeta entries must be +1 or -1, got {z}")
    for i, p, z in ((ip, pp, zp), (im, pm, zm)):
        if p == 0 and z != (-1) ** ((i - 1) // 2):
            raise ConventionViolation(f"P=0 forces zeta=(-1)^((I-1)/2) for I={i}")
    return CuspidalDatum(ip, im, pp, pm, zp, zm)


def enumerate_cusps(max_I: int, max_P: int) -> list[CuspidalDatum]:
    """All valid data with I <= max_I and P <= max_P (zeta free when P > 0)."""
    out = []
    odd = range(1, max_I + 1, 2)
    even = range(0, max_P + 1, 2)
    for ip in odd:
        for im in odd:
            for pp in even:
                for pm in even:
                    zps = PM if pp else ((-1) ** ((ip - 1) // 2),)
                    zms = PM if pm else ((-1) ** ((im - 1) // 2),)
                    for zp in zps:
                        for zm in zms:
                            out.append(CuspidalDatum(ip, im, pp, pm, zp, zm))
    return out


def check_rank_identity(cusp: CuspidalDatum, N_prime, N_second, m_plus, m_minus,
                        m_prime=None, m_second=None) -> dict:
    """Evaluate the rank bookkeeping identities for the two eigenvalues +1, -1.

    N_prime, N_second are pairs indexed (+, -).  The report carries the per-sign
    identity as literally stated (with (I^2+P^2)/2), the corrected per-sign form
    (with (I^2+P^2-1)/2, which matches the k(k+1) counts), and, when m' and m''
    are supplied, the summed odd and even identities.  `holds` refers to the
    literal per-sign identities.
    """
    Np = dict(zip(PM, N_prime))
    Ns = dict(zip(PM, N_second))
    ms = {1: m_plus, -1: m_minus}
    literal, corrected = {}, {}
    for e in PM:
        base = 2 * Np[e] + 2 * Ns[e]
        sq = cusp.I(e) ** 2 + cusp.P(e) ** 2
        literal[e] = {"lhs": base + Fraction(sq, 2), "rhs": ms[e]}
        corrected[e] = {"lhs": base + Fraction(sq - 1, 2), "rhs": ms[e]}
    report = {
        "literal": {e: v["lhs"] == v["rhs"] for e, v in literal.items()},
        "corrected": {e: v["lhs"] == v["rhs"] for e, v in corrected.items()},
        "values": {"literal": literal, "corrected": corrected},
    }
    if m_prime is not None:
        lhs = 2 * Np[1] + 2 * Np[-1] + cusp.r_prime(1) ** 2 + cusp.r_prime(-1) ** 2
        report["odd_sum"] = lhs == 2 * m_prime + 1
    if m_second is not None:
        lhs = 2 * Ns[1] + 2 * Ns[-1] + cusp.r_second(1) ** 2 + cusp.r_second(-1) ** 2
        report["even_sum"] = lhs == 2 * m_second
    report["holds"] = all(report["literal"].values())
    return report
