"""Localization of split class functions from the tame-character side to the
centralizer shape of a semisimple class, with its twists, cuspidal signs, the
factor-exchange endomorphism, and the commutation check against rho-iota."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

from .errors import CaseMismatch, InputError, NotApplicable
from .graded import Element, Slot, all_gradings, grading_shape
from .rho_iota import chi_slots, rho_iota_slots
from .scalars import ONE, CycloScalar, canonicalize
from .symbols import CuspidalDatum
from .tame import EigenClass, TameCharacter, build_tame_character, class_assignments
from .weylrep import (ID, SYM, WEYL, ClassFunction, ClassMap, GroupShape, induce_along,
                      restrict_along, scale, twisted)

PM = (1, -1)
PRIME, SECOND = 0, 1  # index of the ' and '' factor inside a slot


# ---------------------------------------------------------------------------
# semisimple classes


@dataclass(frozen=True)
class SemisimpleClass:
    """Eigenvalue classes of g_s with multiplicities and the sign data that
    distinguishes members of a stable class."""

    q: int
    N: int
    classes: tuple  # of EigenClass (mult = m([lambda]))
    sharp: Mapping = field(default_factory=dict)  # class key -> +-1, lambda not +-1
    v_parity: Mapping = field(default_factory=dict)  # +-1 -> 0 or 1
    eta_prime: Mapping = field(default_factory=dict)  # +-1 -> +-1
    eta_second: Mapping = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return sum(c.weight * c.mult for c in self.classes)

    def get(self, key) -> EigenClass | None:
        for c in self.classes:
            if c.key() == key:
                return c
        return None

    def mult(self, key) -> int:
        c = self.get(key)
        return c.mult if c else 0

    def eta(self, which: str, e: int) -> int:
        table = self.eta_prime if which == "'" else self.eta_second
        return table.get(e, 1)

    def form_sign(self) -> int:
        """Product of the sharp signs over classes outside +-1."""
        out = 1
        for v in self.sharp.values():
            out *= v
        return out

    def parity_ok(self, key, m_second: int) -> bool:
        """Whether a '' multiplicity is compatible with the recorded sign data."""
        if key in PM:
            return m_second % 2 == self.v_parity.get(key, 0)
        return (m_second % 2 == 0) == (self.sharp.get(key, 1) == 1)

    def to_json(self) -> dict:
        return {
            "q": self.q, "N": self.N,
            "classes": [{"rep": c.rep, "mult": c.mult, **({"sharp": self.sharp.get(c.key(), 1)} if not c.is_pm1 else {})}
                        for c in self.classes],
            "v_parity": {str(k): v for k, v in sorted(self.v_parity.items())},
            "eta_prime": {str(k): v for k, v in sorted(self.eta_prime.items())},
            "eta_second": {str(k): v for k, v in sorted(self.eta_second.items())},
        }


def build_semisimple_class(q: int, N: int, seeds, sharp=None, v_parity=None,
                           eta_prime=None, eta_second=None) -> SemisimpleClass:
    base = build_tame_character(q, N, seeds)
    return SemisimpleClass(q, N, base.classes, dict(sharp or {}), dict(v_parity or {}),
                           dict(eta_prime or {}), dict(eta_second or {}))


def enumerate_semisimple_classes(q: int, dim: int, N: int, max_classes: int | None = None) -> list[SemisimpleClass]:
    """Semisimple classes of the given dimension with trivial sign data."""
    out = []
    for cls in class_assignments(q, N, dim):
        if max_classes is None or len(cls) <= max_classes:
            out.append(SemisimpleClass(q, N, cls))
    return out


def semisimple_from_json(data: Mapping) -> SemisimpleClass:
    try:
        seeds = [(int(c["rep"]), int(c["mult"])) for c in data["classes"]]
        base = build_tame_character(int(data["q"]), int(data["N"]), seeds)
        sharp = {}
        for c, raw in zip(base.classes, sorted(data["classes"], key=lambda c: int(c["rep"]))):
            if not c.is_pm1:
                sharp[c.key()] = int(raw.get("sharp", 1))
        conv = lambda d: {int(k): int(v) for k, v in (d or {}).items()}
        return SemisimpleClass(base.q, base.N, base.classes, sharp, conv(data.get("v_parity")),
                               conv(data.get("eta_prime")), conv(data.get("eta_second")))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed semisimple class: {exc}") from exc


# ---------------------------------------------------------------------------
# class data shared by both sides


@dataclass(frozen=True)
class ClassInfo:
    key: object
    ell: int
    cls: EigenClass | None  # None for +-1

    @property
    def sign(self):
        return self.key if self.key in PM else None


def _info(container, key) -> ClassInfo:
    if key in PM:
        return ClassInfo(key, 1, None)
    return ClassInfo(key, container.get(key).ell, container.get(key))


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1


def block_case(u: ClassInfo, lam: ClassInfo) -> int:
    """Which of the five (u, lambda) configurations applies."""
    if u.sign is not None and lam.sign is not None:
        return 1
    if u.sign is None and lam.sign is None:
        return 2 if _v2(u.ell) == _v2(lam.ell) else 3
    return 4 if u.sign is not None else 5


def block_scales(u: ClassInfo, lam: ClassInfo) -> tuple[int, int]:
    """Cycle scaling into the chi-side factor and into the g_s-side factor."""
    case = block_case(u, lam)
    g = gcd(u.ell, lam.ell)
    if case == 1:
        return 1, 1
    if case == 2:
        return lam.ell // g, u.ell // g
    if case == 3:
        return 2 * lam.ell // g, 2 * u.ell // g
    if case == 4:
        return lam.ell, 1
    return 1, u.ell


def nu_scale_exponent(u_ell: int, lam_ell: int) -> int:
    """x in {0, 1}: 1 exactly when one of the ell ratios over their gcd is even."""
    g = gcd(u_ell, lam_ell)
    return 1 if (u_ell // g) % 2 == 0 or (lam_ell // g) % 2 == 0 else 0


# ---------------------------------------------------------------------------
# nu matrices


@dataclass(frozen=True)
class NuMatrix:
    """Nonnegative integers nu^delta(u, lambda) for delta in (', '')."""

    entries: tuple  # sorted ((u_key, lam_key, delta), value) with value > 0
    scales: tuple  # ((u_key, lam_key), (chi scale, g_s scale))

    def __getitem__(self, item) -> int:
        return dict(self.entries).get(item, 0)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def x(self, u_key, lam_key, ells) -> int:
        return nu_scale_exponent(ells[u_key], ells[lam_key])


def _solve_marginals(rows, cols, scale_of):
    """Nonnegative integer matrices with sum_j v[i,j]*a[i,j] = rows[i] and
    sum_i v[i,j]*b[i,j] = cols[j]; scale_of(i, j) -> (a, b)."""
    I, J = len(rows), len(cols)
    cells = [(i, j) for i in range(I) for j in range(J)]
    out = []

    def rec(k, rrem, crem, acc):
        if k == len(cells):
            if not any(rrem) and not any(crem):
                out.append(dict(acc))
            return
        i, j = cells[k]
        a, b = scale_of(i, j)
        top = min(rrem[i] // a, crem[j] // b)
        # a row must be finished once its last cell is reached
        for v in range(top, -1, -1):
            r2, c2 = list(rrem), list(crem)
            r2[i] -= v * a
            c2[j] -= v * b
            if j == J - 1 and r2[i]:
                continue
            if v:
                acc.append(((i, j), v))
            rec(k + 1, r2, c2, acc)
            if v:
                acc.pop()

    if I == 0 or J == 0:
        return [{}] if not any(rows) and not any(cols) else []
    rec(0, list(rows), list(cols), [])
    return out


def enumerate_nu(chi_side: Sequence, gs_side: Sequence) -> list[NuMatrix]:
    """chi_side, gs_side: sequences of (ClassInfo, (n', n'')) in Weyl-rank units
    for +-1 and symmetric-group units otherwise."""
    scales = {}
    for ui, _ in chi_side:
        for li, _ in gs_side:
            scales[(ui.key, li.key)] = block_scales(ui, li)
    per_delta = []
    for d in (PRIME, SECOND):
        rows = [n[d] for _, n in chi_side]
        cols = [m[d] for _, m in gs_side]
        sols = _solve_marginals(rows, cols, lambda i, j: scales[(chi_side[i][0].key, gs_side[j][0].key)])
        per_delta.append([{(chi_side[i][0].key, gs_side[j][0].key, d): v for (i, j), v in s.items()} for s in sols])
    sc = tuple(sorted(((k, v) for k, v in scales.items()), key=lambda kv: repr(kv[0])))
    out = []
    for a, b in itertools.product(*per_delta):
        ent = {**a, **b}
        out.append(NuMatrix(tuple(sorted(ent.items(), key=lambda kv: repr(kv[0]))), sc))
    return out


# ---------------------------------------------------------------------------
# twist functions


def phi(alpha: int, lam: EigenClass, y, q: int) -> CycloScalar:
    """y^-1 ell^-1 sum_{j < ell} (lam^{alpha q^j} + lam^{-alpha q^j}) exactly."""
    if lam.is_pm1:
        raise NotApplicable("phi is defined for classes other than +-1")
    raw = {}
    for j in range(lam.ell):
        for s in (1, -1):
            e = (s * alpha * lam.rep * pow(q, j, lam.N)) % lam.N
            raw[e] = raw.get(e, 0) + 1
    return canonicalize(raw, lam.N) * (1 / (Fraction(y) * lam.ell))


def block_twist(case: int, u: ClassInfo, lam: ClassInfo, q: int, size: int):
    """Label function on the block group realizing chi^delta_{u,lambda}."""
    if block_case(u, lam) != case:
        raise CaseMismatch(f"classes {u.key}, {lam.key} are not in case {case}")
    g = gcd(u.ell, lam.ell)
    if case == 1:
        if u.key == -1 and lam.key == -1:
            const = (-1) ** (size * ((q - 1) // 2))
            return lambda label: const * (-1) ** len(label[1])
        return None
    if case in (2, 3):
        y = Fraction(g) if case == 2 else Fraction(g, 2)
        cache = {}

        def fn(label):
            v = ONE
            for a in label:
                if a not in cache:
                    cache[a] = phi(a, lam.cls, y, q)
                v = v * cache[a]
            return v
        return fn
    if case == 4:
        if u.key == 1:
            return None
        const = (-1) ** (size * ((1 + q ** lam.ell) // 2))
        return lambda label: const
    if lam.key == 1:
        return None
    const = (-1) ** (size * ((1 + q ** u.ell) // 2))
    return lambda label: const


def twist_class_function(case: int, u: ClassInfo, lam: ClassInfo, q: int, size: int) -> ClassFunction:
    kind = WEYL if case == 1 else SYM
    shape = GroupShape(((kind, size),))
    fn = block_twist(case, u, lam, q, size)
    if fn is None:
        return ClassFunction.constant(shape, 1)
    return ClassFunction.from_callable(shape, lambda c: fn(c[0]))


# ---------------------------------------------------------------------------
# cuspidal contributions


def _cusp_exponents(cusp: CuspidalDatum) -> dict:
    """sgn_CD exponents of the cuspidal character on the g_s factors (eps', delta)."""
    A = (cusp.I(cusp.eps_I) - 1) // 2
    B = (cusp.I(cusp.eps_P) - 1) // 2
    z = 1 if cusp.zeta(cusp.eps_P) == -1 else 0
    eI = 1 if cusp.eps_I == -1 else 0
    eP = 1 if cusp.eps_P == -1 else 0
    return {
        (1, PRIME): A % 2,
        (-1, PRIME): (A + eI) % 2,
        (1, SECOND): (B + z) % 2,
        (-1, SECOND): (B + z + eP) % 2,
    }


def c_cusp(gs: SemisimpleClass, cusp: CuspidalDatum) -> int:
    A = (cusp.I(cusp.eps_I) - 1) // 2
    B = (cusp.I(cusp.eps_P) - 1) // 2
    z = 1 if cusp.zeta(cusp.eps_P) == -1 else 0
    e1 = lambda e: gs.eta("'", e)
    e2 = lambda e: gs.eta("''", e)
    val = (e1(1) * e1(-1)) ** A * (e2(1) * e2(-1)) ** (B + z)
    if cusp.eps_I == -1:
        val *= e1(-1)
    if cusp.eps_P == -1:
        val *= e2(-1)
    return val


def chi_cusp(cusp: CuspidalDatum, nu: NuMatrix, w, gs_slots_list: Sequence[Slot], grading) -> int:
    """Value of the cuspidal character at a g_s-side class label w (it only
    depends on the image, through sgn_CD on the +-1 factors)."""
    expo = _cusp_exponents(cusp)
    val = 1
    for i, s in enumerate(gs_slots_list):
        if s.key in PM:
            for d in (PRIME, SECOND):
                if expo[(s.key, d)]:
                    val *= (-1) ** len(w[2 * i + d][1])
    return val


def _apply_cusp_character(f: ClassFunction, cusp: CuspidalDatum, slots: Sequence[Slot]) -> ClassFunction:
    expo = _cusp_exponents(cusp)
    idx = [2 * i + d for i, s in enumerate(slots) if s.key in PM for d in (PRIME, SECOND) if expo[(s.key, d)]]
    if not idx:
        return f
    return f.map_values(lambda c: (-1) ** sum(len(c[j][1]) for j in idx))


# ---------------------------------------------------------------------------
# factor exchange


def x_exponents(cusp: CuspidalDatum) -> dict:
    """Powers of X_+ and X_- making up X_cusp."""
    expo = _cusp_exponents(cusp)
    return {e: (expo[(e, PRIME)] + expo[(e, SECOND)]) % 2 for e in PM}


def x_single(element: Element, e: int) -> Element:
    """sgn_CD on the '' factor of slot e, then exchange its ' and '' factors."""
    pos = next(i for i, s in enumerate(element.slots) if s.key == e)
    comps = {}
    for g, f in element.comps.items():
        a = 2 * pos
        h = f.map_values(lambda c: (-1) ** len(c[a + 1][1]))
        perm = list(range(len(f.shape)))
        perm[a], perm[a + 1] = perm[a + 1], perm[a]
        ng = g[:pos] + ((g[pos][1], g[pos][0]),) + g[pos + 1:]
        comps[ng] = h.permute(perm)
    return Element(element.slots, comps)


def x_cusp(cusp: CuspidalDatum, element: Element) -> Element:
    if not element.slots:
        return element
    for e, k in x_exponents(cusp).items():
        if k:
            element = x_single(element, e)
    return element


def x_cusp_case(cusp: CuspidalDatum) -> str:
    """The branch of the four-case table selected by the datum."""
    same = cusp.eps_I == cusp.eps_P
    z = cusp.zeta(cusp.eps_P)
    s = (cusp.I_plus + cusp.I_minus) // 2
    if same:
        return "identity" if z == 1 else "X+X-"
    e = (-1) ** (1 + s) if z == -1 else (-1) ** s
    return "X+" if e == 1 else "X-"


# ---------------------------------------------------------------------------
# localization


def gs_slots(gs: SemisimpleClass, cusp: CuspidalDatum) -> list[Slot] | None:
    slots = [Slot(c.key(), SYM, c.mult) for c in gs.classes if not c.is_pm1]
    for e in PM:
        twice = gs.mult(e) - cusp.r_prime(e) ** 2 - cusp.r_second(e) ** 2
        if twice < 0 or twice % 2:
            return None
        slots.append(Slot(e, WEYL, twice // 2))
    return slots


def _loc_component(f: ClassFunction, chi_sl, chi_grading, gs_sl, gs_grading,
                   chi_infos, gs_infos, cusp, q, twist_cusp=True) -> ClassFunction | None:
    chi_side = [(chi_infos[s.key], sp) for s, sp in zip(chi_sl, chi_grading)]
    gs_side = [(gs_infos[s.key], sp) for s, sp in zip(gs_sl, gs_grading)]
    target = grading_shape(gs_sl, gs_grading)
    chi_pos = {s.key: i for i, s in enumerate(chi_sl)}
    gs_pos = {s.key: i for i, s in enumerate(gs_sl)}
    total = None
    for nu in enumerate_nu(chi_side, gs_side):
        blocks = [(u, lam, d, v) for (u, lam, d), v in nu.entries]
        factors, res_routes, ind_routes, twists = [], {}, {}, []
        for b, (u, lam, d, v) in enumerate(blocks):
            ui, li = chi_infos[u], gs_infos[lam]
            case = block_case(ui, li)
            a_chi, a_gs = block_scales(ui, li)
            factors.append((WEYL if case == 1 else SYM, v))
            t_chi = ID if case == 1 else (twisted(a_chi) if case == 4 else scale(a_chi))
            t_gs = ID if case == 1 else (twisted(a_gs) if case == 5 else scale(a_gs))
            res_routes.setdefault(2 * chi_pos[u] + d, []).append((b, t_chi))
            ind_routes.setdefault(2 * gs_pos[lam] + d, []).append((b, t_gs))
            twists.append(block_twist(case, ui, li, q, v))
        nshape = GroupShape(tuple(factors))
        rmap = ClassMap(nshape, f.shape, tuple(tuple(res_routes.get(j, ())) for j in range(len(f.shape))))
        imap = ClassMap(nshape, target, tuple(tuple(ind_routes.get(j, ())) for j in range(len(target))))
        g = restrict_along(rmap, f)
        if any(t is not None for t in twists):
            def tw(label, twists=twists):
                val = ONE
                for t, lab in zip(twists, label):
                    if t is not None:
                        val = val * t(lab)
                return val
            g = g.map_values(tw)
        h = induce_along(imap, g)
        total = h if total is None else total + h
    if total is None:
        return None
    if twist_cusp:
        total = _apply_cusp_character(total, cusp, gs_sl)
    return total


def loc(gs: SemisimpleClass, cusp: CuspidalDatum, element: Element, chi: TameCharacter) -> Element:
    """Localize a chi-side element (slots from chi_slots) to the g_s side."""
    gsl = gs_slots(gs, cusp)
    if gsl is None:
        return Element(())
    chi_infos = {s.key: _info(chi, s.key) for s in element.slots}
    gs_infos = {s.key: _info(gs, s.key) for s in gsl}
    sign = c_cusp(gs, cusp)
    comps = {}
    for g, f in element.comps.items():
        for h in all_gradings(gsl):
            piece = _loc_component(f, element.slots, g, gsl, h, chi_infos, gs_infos, cusp, gs.q)
            if piece is not None and not piece.is_zero():
                piece = piece * sign
                comps[h] = comps[h] + piece if h in comps else piece
    return Element(gsl, comps)


def tilde(cusp: CuspidalDatum, element: Element) -> Element:
    """Multiply the '' factor of each +-1 slot by chi-tilde of that sign."""
    idx = [2 * i + SECOND for i, s in enumerate(element.slots)
           if s.key in PM and cusp.chi_tilde_is_sign(s.key)]
    if not idx:
        return element
    return Element(element.slots, {g: f.map_values(lambda c: (-1) ** sum(len(c[j][1]) for j in idx))
                                   for g, f in element.comps.items()})


def verify_cle_diagram(chi: TameCharacter, gs: SemisimpleClass, cusp: CuspidalDatum,
                       element: Element, normalized: bool = True) -> dict:
    """lhs = loc(rho_iota(x)), rhs = rho_iota(X_cusp(loc(tilde(x)))).

    With normalized=True the chi-side operator carries the sgn_CD^{(1-zeta)/2}
    factor on its '' output (the zeta=+ form of the twist table); with False
    the literal table is used.
    """
    top = rho_iota_slots(element, cusp, normalized=normalized)
    lhs = loc(gs, cusp, top, chi)
    down = x_cusp(cusp, loc(gs, cusp, tilde(cusp, element), chi))
    rhs = rho_iota_slots(down, None) if down.slots else down
    if not lhs.slots and not rhs.slots:
        equal = True
    else:
        equal = lhs == rhs
    return {"lhs": lhs, "rhs": rhs, "equal": equal}
