"""The restrict-twist-exchange-induce operator on split class functions, for
symmetric-group slots and for hyperoctahedral slots carrying cuspidal data."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ShapeError
from .graded import Element, Slot, apply_slotwise, quads, slot_quad_operator
from .symbols import CuspidalDatum
from .tame import TameCharacter
from .weylrep import (SYM, WEYL, ClassFunction, ClassMap, GroupShape, ID, induce_along,
                      positive, restrict_along, twisted)


@dataclass(frozen=True)
class SplitPair:
    m_prime: int
    m_second: int

    @property
    def m(self) -> int:
        return self.m_prime + self.m_second


def split_pairs(m: int) -> list[tuple[int, int]]:
    return [(a, m - a) for a in range(m, -1, -1)]


def lt_d(quad, split) -> bool:
    """Quad (m'', m''', ...) sits below split in the direct sense."""
    x11, x12, x21, x22 = quad
    return split[0] == x11 + x12 and split[1] == x21 + x22


def lt_e(quad, split) -> bool:
    """Quad sits below split in the interlaced sense."""
    x11, x12, x21, x22 = quad
    return split[0] == x11 + x21 and split[1] == x12 + x22


def _sgn_cd(power: int):
    if power % 2 == 0:
        return None
    return lambda label: (-1) ** len(label[1])


def _check_pair(f: ClassFunction, pos: int, kind: str):
    fac = f.shape.factors
    if len(fac) < pos + 2 or fac[pos][0] != kind or fac[pos + 1][0] != kind:
        raise ShapeError(f"factors {pos},{pos + 1} of {f.shape} are not a {kind} pair")
    return fac[pos][1], fac[pos + 1][1]


# ---------------------------------------------------------------------------
# symmetric-group slots


def sym_slot_operator(f: ClassFunction, pos: int = 0, split=None) -> dict:
    a, b = _check_pair(f, pos, SYM)
    out = {}
    for target in split_pairs(a + b):
        acc = None
        for qd in quads((a, b), target):
            h = slot_quad_operator(f, pos, qd, (None,) * 4) * ((-1) ** qd[3])
            acc = h if acc is None else acc + h
        if acc is not None:
            out[target] = acc
    return out


def rho_iota_sym(m0, f: ClassFunction) -> dict:
    """Sum over quads below m0 (direct) and below each target split (interlaced)
    of restrict, sign (-1)^{m'',''}, exchange and induce."""
    m0 = tuple(m0) if not isinstance(m0, SplitPair) else (m0.m_prime, m0.m_second)
    if f.shape != GroupShape(((SYM, m0[0]), (SYM, m0[1]))):
        raise ShapeError(f"expected S{m0[0]}xS{m0[1]}, got {f.shape}")
    return sym_slot_operator(f, 0)


def inflate_to_weyl(f: ClassFunction) -> ClassFunction:
    """Pull back along the projections W_a -> S_a on every factor."""
    shape = GroupShape(tuple((WEYL, r) for _, r in f.shape.factors))
    merge = lambda lab: tuple(tuple(sorted(p + n, reverse=True)) for p, n in lab)
    return ClassFunction.from_callable(shape, lambda c: f(merge(c)))


def rho_iota_sym_direct(m0, f: ClassFunction) -> dict:
    """Inflate to W_{m0'} x W_{m0''}, twist the second factor by sgn_CD, induce
    to W_m, then restrict along (first embedding) x (second embedding)."""
    a, b = m0
    F = inflate_to_weyl(f)
    F = F.map_values(lambda c: (-1) ** len(c[1][1]))
    W = GroupShape(((WEYL, a + b),))
    big = induce_along(ClassMap(F.shape, W, (((0, ID), (1, ID)),)), F)
    out = {}
    for mp, ms in split_pairs(a + b):
        src = GroupShape(((SYM, mp), (SYM, ms)))
        out[(mp, ms)] = restrict_along(ClassMap(src, W, (((0, positive(1)), (1, twisted(1))),)), big)
    return out


def odd_cycle_part(f: ClassFunction) -> ClassFunction:
    """Restriction of f to classes all of whose cycles have odd length (S factors)."""
    def odd(label):
        return all(all(x % 2 for x in part) for part in label)
    return ClassFunction(f.shape, {k: v for k, v in f.values.items() if odd(k)})


def mackey_check(m0, f: ClassFunction) -> dict:
    """Compare both routes on odd-cycle classes; returns per-split equality."""
    remark = rho_iota_sym(m0, f)
    direct = rho_iota_sym_direct(m0, f)
    report = {}
    for split, g in direct.items():
        r = remark.get(split, ClassFunction(g.shape))
        report[split] = odd_cycle_part(r) == odd_cycle_part(g)
    return report


# ---------------------------------------------------------------------------
# hyperoctahedral slots


def weyl_twist_powers(cusp: CuspidalDatum | None, eps_side: int, normalized: bool = False) -> tuple:
    """Exponents (sgn_CD power, uses chi-tilde) for the quad factors
    (','), (',''), ('',' ), ('','')."""
    if cusp is None:
        return ((0, False), (0, False), (0, False), (1, False))
    zeta = cusp.zeta(eps_side)
    ct = cusp.chi_tilde_is_sign(eps_side)
    if normalized:
        return ((0, False), (0, False), (0, ct), (1, ct))
    return ((0, False), ((1 - zeta) // 2, False), (0, ct), ((1 + zeta) // 2, ct))


def weyl_slot_operator(f: ClassFunction, pos: int, cusp: CuspidalDatum | None, eps_side: int,
                       normalized: bool = False) -> dict:
    a, b = _check_pair(f, pos, WEYL)
    twists = []
    for power, uses_ct in weyl_twist_powers(cusp, eps_side, normalized):
        total = power + (1 if uses_ct else 0)
        twists.append(_sgn_cd(total))
    out = {}
    for target in split_pairs(a + b):
        acc = None
        for qd in quads((a, b), target):
            h = slot_quad_operator(f, pos, qd, twists)
            acc = h if acc is None else acc + h
        if acc is not None:
            out[target] = acc
    return out


def rho_iota_weyl(cusp: CuspidalDatum, eps_side: int, f: ClassFunction, normalized: bool = False):
    """Returns ({(M', M''): class function}, (I_eps, signed even defect)).

    With normalized=True the output '' factor is additionally multiplied by
    sgn_CD^{(1-zeta)/2}, which turns the twist table into its zeta=+ form.
    """
    out = weyl_slot_operator(f, 0, cusp, eps_side, normalized)
    return out, (cusp.I(eps_side), cusp.zeta_tilde(eps_side) * cusp.P(eps_side))


# ---------------------------------------------------------------------------
# all slots together


def chi_slots(chi: TameCharacter, cusp: CuspidalDatum) -> list[Slot] | None:
    """Slots of the chi side; None when a +-1 Weyl rank is negative or fractional."""
    slots = [Slot(c.key(), SYM, c.mult) for c in chi.classes if not c.is_pm1]
    for e in (1, -1):
        twice = 2 * chi.mult(e) - (cusp.I(e) ** 2 + cusp.P(e) ** 2 - 1)
        if twice < 0 or twice % 4:
            return None
        slots.append(Slot(e, WEYL, twice // 4))
    return slots


def rho_iota_slots(x: Element, cusp: CuspidalDatum | None, normalized: bool = False) -> Element:
    """Apply the slot operator of every slot of x (tensor product over slots)."""
    for i, slot in enumerate(x.slots):
        if slot.kind == SYM:
            op = lambda f, pos, split: sym_slot_operator(f, pos)
        else:
            op = (lambda e: lambda f, pos, split: weyl_slot_operator(f, pos, cusp, e, normalized))(slot.key)
        x = apply_slotwise(x, i, op)
    return x


def rho_iota_full(chi: TameCharacter, cusp: CuspidalDatum, element: Element, normalized: bool = False) -> Element:
    expected = chi_slots(chi, cusp)
    if expected is None:
        return Element(element.slots)
    if list(element.slots) != expected:
        raise ShapeError("element slots do not match chi and the cuspidal datum")
    return rho_iota_slots(element, cusp, normalized)
