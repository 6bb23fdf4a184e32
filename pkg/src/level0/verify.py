"""Verification sweeps shared by the CLI and the test suite.

Every sweep returns a plain dict report with deterministic ordering:
{"suite", "passed", "checked", "failures", ...}.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from .fourier import FourierConfig, d_sign, fourier, fourier_tensor, involution_check, stable_packet
from .graded import Element, all_gradings, grading_shape
from .localization import SemisimpleClass, enumerate_semisimple_classes, verify_cle_diagram
from .orbits import partitions
from .params import PM, enumerate_parameters, enumerate_sign_characters, epsilon_center, springer_lusztig_data
from .rho_iota import chi_slots, mackey_check, split_pairs
from .stability import classify_parameter, classify_via_pair, k_identities_hold, translation_sides
from .symbols import enumerate_cusps
from .tame import enumerate_tame_characters
from .weylrep import SYM, ClassFunction, GroupShape, n_negative, second_embedding

MAX_FAILURES_LISTED = 50


def thread_count() -> int:
    raw = os.environ.get("LEVEL0_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _fan_out(fn: Callable, items: Sequence) -> list:
    """Map fn over items, in order, on up to LEVEL0_THREADS worker processes."""
    n = min(thread_count(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _report(suite: str, checked: int, failures: list, **extra) -> dict:
    out = {"suite": suite, "passed": not failures, "checked": checked,
           "failures": failures[:MAX_FAILURES_LISTED], "failure_count": len(failures)}
    out.update(extra)
    return out


def mackey_suite(max_rank: int = 5) -> dict:
    """Both routes for the symmetric-group operator on every class indicator."""
    failures, checked = [], 0
    for m in range(max_rank + 1):
        for a, b in split_pairs(m):
            shape = GroupShape(((SYM, a), (SYM, b)))
            for c in shape.classes():
                rep = mackey_check((a, b), ClassFunction.indicator(shape, c))
                checked += 1
                bad = [list(s) for s, ok in rep.items() if not ok]
                if bad:
                    failures.append({"split": [a, b], "class": repr(c), "targets": bad})
    return _report("mackey", checked, failures)


def sgncd_suite(max_rank: int = 6) -> dict:
    """sgn_CD on the image of odd-cycle permutations under the second embedding."""
    failures, checked = [], 0
    for m in range(max_rank + 1):
        emb = second_embedding(m)
        for lam in partitions(m):
            if any(a % 2 == 0 for a in lam):
                continue
            checked += 1
            (img,) = emb.image((lam,))
            if (-1) ** n_negative(img) != (-1) ** m:
                failures.append({"m": m, "cycle_type": list(lam)})
    return _report("sgncd", checked, failures)


def k_identity_suite(max_k: int = 6) -> dict:
    """(I, P, zeta) formulas for every k pair and the translation equivalences
    for every pair of k pairs.  The '-' mirror is known to fail when some u has
    k = (0, 0); those cases are counted separately and do not fail the suite."""
    failures, checked = [], 0
    rng = range(max_k + 1)
    for kp, km in itertools.product(rng, rng):
        checked += 1
        if not k_identities_hold(kp, km):
            failures.append({"k": [kp, km], "check": "formulas"})
    exceptions = 0
    for pair in itertools.product(itertools.product(rng, rng), repeat=2):
        ks = dict(zip(PM, pair))
        for sign in PM:
            checked += 1
            left, right = translation_sides(ks, sign)
            if left == right:
                continue
            if sign == -1 and any(k == (0, 0) for k in pair):
                exceptions += 1
                continue
            failures.append({"k": [list(p) for p in pair], "sign": sign, "left": left, "right": right})
    return _report("k-identities", checked, failures, mirror_exceptions=exceptions)


def _parameter_instances(q: int, Ns: Iterable[int], max_two_n: int, mode: str = "discrete"):
    for N in Ns:
        for two_n in range(0, max_two_n + 1, 2):
            for chi in enumerate_tame_characters(q, two_n, N):
                for psi in enumerate_parameters(chi, mode):
                    yield N, psi


def stability_suite(q: int = 3, Ns: Sequence[int] = (1, 2, 5), max_two_n: int = 8) -> dict:
    """Parameter-level rule versus the pair-level rule through the
    Springer-Lusztig data."""
    failures, checked, zero_k = [], 0, 0
    for N, psi in _parameter_instances(q, Ns, max_two_n):
        for eps in enumerate_sign_characters(psi):
            checked += 1
            a, b = classify_parameter(psi, eps), classify_via_pair(psi, eps)
            if a != b:
                spl = springer_lusztig_data(psi, eps)
                has_zero = any(spl.k[(u, 1)] == spl.k[(u, -1)] == 0 for u in PM)
                zero_k += has_zero
                failures.append({"N": N, "psi": psi.to_json(eps), "parameter_rule": a.value,
                                 "pair_rule": b.value, "zero_k_class": has_zero})
    return _report("stability", checked, failures, disagreements_with_zero_k=zero_k)


def _cle_instance(args) -> tuple[int, int, list]:
    chi, gs, cusps, normalized = args
    checked, fails = 0, []
    for cusp in cusps:
        sl = chi_slots(chi, cusp)
        if sl is None:
            continue
        for g in all_gradings(sl):
            shape = grading_shape(sl, g)
            for c in shape.classes():
                x = Element.single(sl, g, ClassFunction.indicator(shape, c))
                checked += 1
                if not verify_cle_diagram(chi, gs, cusp, x, normalized)["equal"]:
                    fails.append({"chi": chi.to_json(), "gs": gs.to_json(), "cusp": cusp.to_json(),
                                  "grading": [list(s) for s in g], "class": repr(c)})
    return checked, len(fails), fails


ETA_CHOICES = (({}, {}), ({1: -1, -1: 1}, {1: 1, -1: -1}))


def cle_instances(q: int = 3, Ns: Sequence[int] = (1, 2, 4, 5, 10), max_rank: int = 2,
                  max_I: int = 3, max_P: int = 2, max_classes: int = 2, normalized: bool = True) -> list:
    cusps = enumerate_cusps(max_I, max_P)
    out = []
    for N in Ns:
        for n in range(max_rank + 1):
            for chi in enumerate_tame_characters(q, 2 * n, N):
                if len(chi.classes) > max_classes:
                    continue
                for g0 in enumerate_semisimple_classes(q, 2 * n + 1, N, max_classes):
                    for ep, es in ETA_CHOICES:
                        gs = SemisimpleClass(q, N, g0.classes, {}, {}, ep, es)
                        out.append((chi, gs, cusps, normalized))
    return out


def cle_suite(q: int = 3, Ns: Sequence[int] = (1, 2, 4, 5, 10), max_rank: int = 2,
              normalized: bool = True) -> dict:
    """Commutation of localization with the restrict-twist-induce operator on
    every basis element of every small instance."""
    results = _fan_out(_cle_instance, cle_instances(q, Ns, max_rank, normalized=normalized))
    checked = sum(r[0] for r in results)
    failures = [f for r in results for f in r[2]]
    return _report("cle", checked, failures, instances=len(results), normalized=normalized)


def fourier_suite(max_blocks: int = 3, max_even: int = 4) -> dict:
    """Tensor factorization, F^2 = 2^|Jord| Id on even blocks, and involution
    reports for both sigma conventions."""
    from .orbits import Orbit
    from .params import make_parameter
    from .tame import build_tame_character

    failures, checked, reports = [], 0, []
    # even-only orbits with distinct parts 2..2*max_even, up to max_even parts
    evens = [2 * i for i in range(1, max_even + 1)]
    for r in range(max_even + 1):
        for blocks in itertools.combinations(reversed(evens), r):
            for cfg in (FourierConfig(), FourierConfig(1, "trivial")):
                checked += 1
                rep = involution_check(blocks, cfg)
                if not (rep["relation"] == "scaled_identity" and rep["scale"] == 2 ** len(blocks)):
                    failures.append({"check": "even_square", "blocks": list(blocks), "report": rep})
    for r in range(max_blocks + 1):
        for blocks in itertools.combinations(range(2 * max_blocks + 1, 0, -1), r):
            for cfg in (FourierConfig(), FourierConfig(1, "trivial")):
                checked += 1
                rep = involution_check(blocks, cfg)
                reports.append(rep)
                if rep["relation"] not in ("scaled_identity", "scaled_transform", "other"):
                    failures.append({"check": "report", "blocks": list(blocks)})
    # tensor factorization on the zeta_10 and zeta_5 classes for q=3
    chis = [build_tame_character(3, 10, seeds) for seeds in ([(1, 3), (2, 2)], [(1, 2), (2, 3)], [(1, 1), (2, 1)])]
    total = 0
    for psi in (p for chi in chis for p in enumerate_parameters(chi)):
        if len(psi.blocks()) > max_blocks:
            continue
        for eps in enumerate_sign_characters(psi):
            for cfg in (FourierConfig(), FourierConfig(-1, "trivial")):
                checked += 1
                total += 1
                if fourier(psi, eps, cfg) != fourier_tensor(psi, eps, cfg):
                    failures.append({"check": "tensor", "psi": psi.to_json(eps)})
    return _report("fourier", checked, failures, involution_reports=reports, tensor_cases=total)


def packets_suite(q: int = 3, Ns: Sequence[int] = (1, 2, 5), max_two_n: int = 8) -> dict:
    """iso/an packets partition the sign characters; d_sign is the even-block
    product."""
    failures, checked = [], 0
    for N, psi in _parameter_instances(q, Ns, max_two_n):
        checked += 1
        all_eps = enumerate_sign_characters(psi)
        iso = [e for e, _ in stable_packet(psi, "iso")]
        an = [e for e, _ in stable_packet(psi, "an")]
        if sorted(iso + an) != sorted(all_eps) or set(iso) & set(an):
            failures.append({"check": "partition", "psi": psi.to_json()})
        blocks = psi.blocks()
        for eps in all_eps:
            expect = 1
            for b, s in zip(blocks, eps):
                if b.alpha % 2 == 0:
                    expect *= s
            if d_sign(psi, eps) != expect or epsilon_center(psi, eps) not in PM:
                failures.append({"check": "d_sign", "psi": psi.to_json(eps)})
    return _report("packets", checked, failures)


SUITES = {
    "mackey": lambda max_rank: mackey_suite(max_rank if max_rank is not None else 5),
    "sgncd": lambda max_rank: sgncd_suite(max_rank if max_rank is not None else 6),
    "k-identities": lambda max_rank: k_identity_suite(max_rank if max_rank is not None else 6),
    "cle": lambda max_rank: cle_suite(max_rank=max_rank if max_rank is not None else 2),
    "stability": lambda max_rank: stability_suite(max_two_n=max_rank if max_rank is not None else 8),
    "fourier": lambda max_rank: fourier_suite(max_blocks=max_rank if max_rank is not None else 3),
    "packets": lambda max_rank: packets_suite(max_two_n=max_rank if max_rank is not None else 8),
}
DEFAULT_SUITES = ("mackey", "cle", "k-identities", "sgncd")


def run_suites(names: Sequence[str], max_rank: int | None = None) -> list[dict]:
    return [SUITES[n](max_rank) for n in names]


__all__ = [
    "mackey_suite", "sgncd_suite", "k_identity_suite", "stability_suite", "cle_suite", "cle_instances",
    "fourier_suite", "packets_suite", "SUITES", "DEFAULT_SUITES", "run_suites", "thread_count",
]
