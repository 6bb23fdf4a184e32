import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from level0.graded import Element, Slot
from level0.rho_iota import (
    chi_slots, mackey_check, rho_iota_full, rho_iota_sym, rho_iota_weyl, split_pairs, weyl_twist_powers,
)
from level0.symbols import cusp_datum, enumerate_cusps
from level0.tame import build_tame_character
from level0.verify import mackey_suite, sgncd_suite
from level0.weylrep import SYM, WEYL, ClassFunction, GroupShape, decompose


def trivial(*factors):
    return ClassFunction.constant(GroupShape(tuple(factors)), 1)


def test_mackey_on_every_class_indicator():
    rep = mackey_suite(5)
    assert rep["passed"], rep["failures"]
    assert rep["checked"] > 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4).flatmap(lambda m: st.sampled_from(split_pairs(m))), st.integers(0, 10 ** 6))
def test_mackey_on_random_class_functions(m0, seed):
    rng = random.Random(seed)
    shape = GroupShape(((SYM, m0[0]), (SYM, m0[1])))
    f = ClassFunction.from_callable(shape, lambda c: rng.randint(-5, 5))
    assert all(mackey_check(m0, f).values())


def test_sgncd_coincidence():
    rep = sgncd_suite(6)
    assert rep["passed"] and rep["failure_count"] == 0


@pytest.mark.parametrize("m", range(0, 5))
def test_top_split_keeps_trivial(m):
    out = rho_iota_sym((m, 0), trivial((SYM, m), (SYM, 0)))
    assert decompose(out[(m, 0)]) == {((tuple([m]) if m else ()), ()): 1}


@pytest.mark.parametrize("m", range(1, 5))
def test_bottom_split_carries_sign(m):
    out = rho_iota_sym((0, m), trivial((SYM, 0), (SYM, m)))
    assert decompose(out[(0, m)]) == {((), (m,)): (-1) ** m}
    if m == 1:
        assert decompose(out[(1, 0)]) == {((1,), ()): 1}


def test_empty_split():
    out = rho_iota_sym((0, 0), trivial((SYM, 0), (SYM, 0)))
    assert list(out) == [(0, 0)]
    assert decompose(out[(0, 0)]) == {((), ()): 1}


def test_weyl_rank_zero_is_identity():
    c = cusp_datum((3, 1), (2, 0), (1, 1))
    f = trivial((WEYL, 0), (WEYL, 0))
    out, tag = rho_iota_weyl(c, 1, f)
    assert out == {(0, 0): f}
    assert tag == (3, c.zeta_tilde(1) * 2)


def test_weyl_rank_one_plus():
    c = cusp_datum((3, 1), (2, 0), (1, 1))
    out, _ = rho_iota_weyl(c, 1, trivial((WEYL, 1), (WEYL, 0)))
    assert decompose(out[(1, 0)]) == {(((1,), ()), ((), ())): 1}
    assert decompose(out[(0, 1)]) == {(((), ()), ((1,), ())): 1}


def test_weyl_rank_one_minus_picks_up_sign():
    c = cusp_datum((3, 1), (2, 0), (-1, 1))
    out, _ = rho_iota_weyl(c, 1, trivial((WEYL, 1), (WEYL, 0)))
    assert decompose(out[(1, 0)]) == {(((1,), ()), ((), ())): 1}
    assert decompose(out[(0, 1)]) == {(((), ()), ((), (1,))): 1}
    norm, _ = rho_iota_weyl(c, 1, trivial((WEYL, 1), (WEYL, 0)), normalized=True)
    assert decompose(norm[(0, 1)]) == {(((), ()), ((1,), ())): 1}


def test_twist_table():
    for c in enumerate_cusps(3, 2):
        for e in (1, -1):
            lit = weyl_twist_powers(c, e)
            norm = weyl_twist_powers(c, e, normalized=True)
            ct = c.chi_tilde_is_sign(e)
            if c.zeta(e) == 1:
                assert lit == norm == ((0, False), (0, False), (0, ct), (1, ct))
            else:
                assert lit == ((0, False), (1, False), (0, ct), (0, ct))


def test_full_operator_degenerate_cases():
    chi = build_tame_character(3, 1, [])
    cusp = cusp_datum((1, 1), (0, 0), (1, 1))
    slots = chi_slots(chi, cusp)
    x = Element.single(slots, [(0, 0)] * len(slots), ClassFunction.constant(GroupShape(((WEYL, 0),) * 4), 1))
    assert rho_iota_full(chi, cusp, x).comps == x.comps

    chi = build_tame_character(3, 5, [(1, 2)])
    slots = chi_slots(chi, cusp)
    assert slots[0] == Slot((5, 1), SYM, 2)
    f = ClassFunction.from_callable(GroupShape(((SYM, 1), (SYM, 1), (WEYL, 0), (WEYL, 0), (WEYL, 0), (WEYL, 0))),
                                    lambda c: 1 if c[0] == (1,) else 0)
    x = Element.single(slots, [(1, 1), (0, 0), (0, 0)], f)
    got = rho_iota_full(chi, cusp, x)
    want = rho_iota_sym((1, 1), trivial((SYM, 1), (SYM, 1)))
    empty = trivial(*((WEYL, 0),) * 4)
    for split, g in want.items():
        expected = g.tensor(empty)
        assert got.comps.get((split, (0, 0), (0, 0)), ClassFunction(expected.shape)) == expected
