"""Fourier-type transform on sign characters, elliptic basis vectors, the |D|
sign and stable packets.

A component is the Jordan data (Jord multiset, signs) of one eigenvalue class
other than +-1.  Signs live on blocks of multiplicity one; blocks of
multiplicity two are folded into the symmetrized elliptic basis vector, so in
the discrete case the sign tuple is aligned with every block.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError, NotApplicable, NotStable, Unsupported
from .params import PM, DiscreteParameter, epsilon_center, enumerate_sign_characters, signs_by_block

SIGMA_EPS_RULES = ("sigma_u", "trivial")


@dataclass(frozen=True)
class FourierConfig:
    sigma_U: int = 1
    sigma_eps: str = "sigma_u"

    def __post_init__(self):
        if self.sigma_U not in PM:
            raise InputError("sigma_U must be +1 or -1")
        if self.sigma_eps not in SIGMA_EPS_RULES:
            raise InputError(f"sigma_eps must be one of {SIGMA_EPS_RULES}")


DEFAULT = FourierConfig()


def free_blocks(blocks: Sequence[int]) -> tuple[int, ...]:
    """Blocks of multiplicity one, descending: the ones carrying a free sign."""
    cnt = Counter(blocks)
    return tuple(sorted((a for a, m in cnt.items() if m == 1), reverse=True))


def paired_blocks(blocks: Sequence[int]) -> tuple[int, ...]:
    cnt = Counter(blocks)
    bad = [a for a, m in cnt.items() if m > 2]
    if bad:
        raise InputError(f"blocks {bad} occur more than twice")
    return tuple(sorted((a for a, m in cnt.items() if m == 2), reverse=True))


def sigma_u(blocks: Sequence[int], eps: Sequence[int]) -> int:
    """Product of eps over the odd free blocks."""
    return prod((e for a, e in zip(free_blocks(blocks), eps) if a % 2), start=1)


def _canon_blocks(blocks: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted((int(a) for a in blocks), reverse=True))
    if any(a < 1 for a in out):
        raise InputError("block sizes must be positive")
    paired_blocks(out)
    return out


class EllElement:
    """Exact formal combination of basis labels.

    A label is a tuple of components (class key, blocks, eps) in a fixed class
    order; eps is aligned with the free blocks of that component.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def basis(cls, *components) -> "EllElement":
        return cls({tuple(components): 1})

    def __add__(self, other: "EllElement") -> "EllElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return EllElement(out)

    def __sub__(self, other: "EllElement") -> "EllElement":
        return self + other.scale(-1)

    def scale(self, c) -> "EllElement":
        return EllElement({k: c * v for k, v in self.terms.items()})

    def tensor(self, other: "EllElement") -> "EllElement":
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return EllElement(out)

    def coefficient(self, *components) -> Fraction:
        return self.terms.get(tuple(components), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, EllElement) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"EllElement({self.items()})"

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: repr(kv[0]))

    def to_json(self) -> list:
        out = []
        for label, c in self.items():
            comps = [{"class": str(k), "blocks": list(b), "eps": list(e)} for k, b, e in label]
            out.append({"components": comps, "coeff": str(c)})
        return out


def expand_elliptic(key, blocks: Sequence[int], eps: Sequence[int]) -> dict:
    """Expand an elliptic basis vector into raw sign data.

    Returns {(blocks, signs on all distinct blocks): coefficient}; the signs on
    paired blocks are summed over with weight equal to their product.
    """
    blocks = _canon_blocks(blocks)
    free, paired = free_blocks(blocks), paired_blocks(blocks)
    if len(eps) != len(free):
        raise InputError("one sign per block of multiplicity one is required")
    fixed = dict(zip(free, eps))
    distinct = tuple(sorted(set(blocks), reverse=True))
    out = {}
    for choice in itertools.product(PM, repeat=len(paired)):
        signs = dict(fixed)
        signs.update(zip(paired, choice))
        out[(key, blocks, tuple(signs[a] for a in distinct))] = prod(choice, start=1)
    return out


def fourier_component(blocks: Sequence[int], eps: Sequence[int], config: FourierConfig = DEFAULT,
                      key=None) -> EllElement:
    """Transform of one component (blocks, eps) of a class other than +-1.

    Returns sum over eps' of sigma_U * sigma(eps) * sigma_u(eps') *
    prod_{eps(alpha) = -1} eps'(alpha) times (blocks, eps').
    """
    if key in PM:
        raise NotApplicable("the transform of the classes +1 and -1 is not covered")
    blocks = _canon_blocks(blocks)
    free = free_blocks(blocks)
    eps = tuple(eps)
    if len(eps) != len(free) or any(e not in PM for e in eps):
        raise InputError("eps must give one sign per block of multiplicity one")
    lead = config.sigma_U * (sigma_u(blocks, eps) if config.sigma_eps == "sigma_u" else 1)
    terms = {}
    for ep in itertools.product(PM, repeat=len(free)):
        kernel = prod((b for a, b in zip(eps, ep) if a == -1), start=1)
        terms[((key, blocks, ep),)] = lead * sigma_u(blocks, ep) * kernel
    return EllElement(terms)


def fourier_matrix(blocks: Sequence[int], config: FourierConfig = DEFAULT) -> tuple[list, np.ndarray]:
    """Rows are the images of the basis vectors, in the order of `labels`."""
    blocks = _canon_blocks(blocks)
    labels = list(itertools.product(PM, repeat=len(free_blocks(blocks))))
    index = {e: i for i, e in enumerate(labels)}
    M = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for e in labels:
        for (comp,), c in fourier_component(blocks, e, config).terms.items():
            M[index[e], index[comp[2]]] = int(c)
    return labels, M


def _is_signed_permutation(A: np.ndarray) -> bool:
    return bool(np.all(np.isin(A, (-1, 0, 1))) and np.all(np.abs(A).sum(axis=0) == 1)
                and np.all(np.abs(A).sum(axis=1) == 1))


def involution_check(blocks: Sequence[int], config: FourierConfig = DEFAULT) -> dict:
    """Compare F^2 with multiples of Id and of F; report the relation found."""
    blocks = _canon_blocks(blocks)
    _, M = fourier_matrix(blocks, config)
    S = M @ M
    dim = M.shape[0]
    report = {"blocks": list(blocks), "config": {"sigma_U": config.sigma_U, "sigma_eps": config.sigma_eps},
              "expected_scale": 2 ** len(free_blocks(blocks)), "relation": "other", "scale": None,
              "detail": None}
    c = int(S[0, 0])
    if c != 0 and np.array_equal(S, c * np.eye(dim, dtype=np.int64)):
        report.update(relation="scaled_identity", scale=c)
        return report
    nz = M[M != 0]
    if nz.size:
        ratio = Fraction(int(S[M != 0][0]), int(nz[0]))
        if ratio != 0 and ratio.denominator == 1 and np.array_equal(S, int(ratio) * M):
            report.update(relation="scaled_transform", scale=int(ratio))
            return report
    nzs = np.abs(S[S != 0])
    if nzs.size and np.all(nzs == nzs[0]):
        if _is_signed_permutation(S // int(nzs[0])):
            report.update(scale=int(nzs[0]), detail="signed_permutation")
    return report


# parameters

def component_data(psi: DiscreteParameter, eps: Sequence[int]) -> list:
    """Per-class (key, blocks, free-block signs) for every class of psi."""
    signs = signs_by_block(psi, eps)
    out = []
    for key, plus, minus in psi.comps:
        blocks = _canon_blocks(plus.blocks + minus.blocks)
        free = free_blocks(blocks)
        by_alpha = {b.alpha: s for b, s in signs.items() if b.cls == key and b.copy == 0}
        out.append((key, blocks, tuple(by_alpha[a] for a in free)))
    return out


def _require_off_pm1(psi: DiscreteParameter):
    if any(key in PM for key, _, _ in psi.comps):
        raise Unsupported("parameters with eigenvalue +1 or -1 need the transform of those classes")


def fourier(psi: DiscreteParameter, eps: Sequence[int], config: FourierConfig = DEFAULT) -> EllElement:
    """Transform of a whole parameter, computed with one global kernel."""
    _require_off_pm1(psi)
    comps = component_data(psi, eps)
    spaces = [list(itertools.product(PM, repeat=len(free_blocks(b)))) for _, b, _ in comps]
    lead = 1
    for _, blocks, e in comps:
        lead *= config.sigma_U * (sigma_u(blocks, e) if config.sigma_eps == "sigma_u" else 1)
    terms = {}
    for choice in itertools.product(*spaces):
        c = lead
        for (key, blocks, e), ep in zip(comps, choice):
            c *= sigma_u(blocks, ep) * prod((b for a, b in zip(e, ep) if a == -1), start=1)
        terms[tuple((key, blocks, ep) for (key, blocks, _), ep in zip(comps, choice))] = c
    return EllElement(terms)


def fourier_tensor(psi: DiscreteParameter, eps: Sequence[int], config: FourierConfig = DEFAULT) -> EllElement:
    """Same transform assembled as a tensor product of per-class transforms."""
    _require_off_pm1(psi)
    out = EllElement.basis()
    for key, blocks, e in component_data(psi, eps):
        out = out.tensor(fourier_component(blocks, e, config, key))
    return out


def fourier_of_stable(psi: DiscreteParameter, eps: Sequence[int], zeta: int) -> EllElement:
    """Closed form of the transform on a stable (zeta=+1) or semistable (zeta=-1)
    parameter: every sign equals zeta, and the sum over eps' is uniform up to
    sigma_u(eps'), times eps'_Z when zeta=-1."""
    _require_off_pm1(psi)
    if zeta not in PM:
        raise InputError("zeta must be +1 or -1")
    if any(s != zeta for s in eps):
        raise NotStable(f"not every sign equals {zeta:+d}")
    comps = component_data(psi, eps)
    lead = prod((sigma_u(b, e) for _, b, e in comps), start=1)
    spaces = [list(itertools.product(PM, repeat=len(free_blocks(b)))) for _, b, _ in comps]
    terms = {}
    for choice in itertools.product(*spaces):
        c = lead
        for (_, blocks, _), ep in zip(comps, choice):
            c *= sigma_u(blocks, ep)
            if zeta == -1:
                c *= prod(ep, start=1)
        terms[tuple((key, blocks, ep) for (key, blocks, _), ep in zip(comps, choice))] = c
    return EllElement(terms)


def d_sign(psi: DiscreteParameter, eps: Sequence[int]) -> int:
    """Product of eps over the even Jordan blocks of every class."""
    return prod((s for b, s in signs_by_block(psi, eps).items() if b.alpha % 2 == 0), start=1)


SHARP = {"iso": 1, "an": -1}


def stable_packet(psi: DiscreteParameter, sharp: str, weighted: bool = False) -> list[tuple[tuple[int, ...], int]]:
    """All eps with eps_Z matching sharp, with unit coefficients (or eps_Z when
    weighted)."""
    if sharp not in SHARP:
        raise InputError("sharp must be 'iso' or 'an'")
    target = SHARP[sharp]
    out = []
    for eps in enumerate_sign_characters(psi):
        z = epsilon_center(psi, eps)
        if z == target:
            out.append((eps, z if weighted else 1))
    return out


__all__ = [
    "FourierConfig", "DEFAULT", "EllElement", "free_blocks", "paired_blocks", "sigma_u", "expand_elliptic",
    "fourier_component", "fourier_matrix", "involution_check", "component_data", "fourier", "fourier_tensor",
    "fourier_of_stable", "d_sign", "stable_packet", "SHARP",
]
