import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from level0.errors import InputError, NotApplicable
from level0.orbits import SYMPLECTIC, Orbit, enumerate_orbits
from level0.params import (
    DiscreteParameter, cusp_from_k, enumerate_parameters, enumerate_sign_characters, epsilon_center,
    gen_springer_k, make_parameter, reconstituted_n, springer_lusztig_data, weyl_rank_from_k,
)
from level0.tame import build_tame_character, enumerate_tame_characters
from oracles import brute_parameters


def canonical(psi):
    out = []
    for key, plus, minus in psi.comps:
        c = psi.chi.get(key)
        if c.mult:
            out.append((c.rep, plus.blocks, minus.blocks))
    return tuple(sorted(out))


def all_parameters(q, N, two_n, mode="discrete"):
    return [p for chi in enumerate_tame_characters(q, two_n, N) for p in enumerate_parameters(chi, mode)]


@pytest.mark.parametrize("N", [1, 2, 5])
@pytest.mark.parametrize("two_n", [0, 2, 4, 6, 8])
def test_enumeration_matches_oracle(N, two_n):
    params = all_parameters(3, N, two_n)
    got = [canonical(p) for p in params]
    want, want_pairs = brute_parameters(3, N, two_n)
    assert len(got) == len(set(got))
    assert set(got) == {tuple(sorted(x)) for x in want}
    assert sum(len(enumerate_sign_characters(p)) for p in params) == want_pairs


@pytest.mark.parametrize("N, two_n", [(1, 4), (2, 4), (5, 4)])
def test_elliptic_enumeration_matches_oracle(N, two_n):
    got = {canonical(p) for p in all_parameters(3, N, two_n, "elliptic")}
    want, _ = brute_parameters(3, N, two_n, max_mult=2)
    assert got == {tuple(sorted(x)) for x in want}


def test_trivial_rank_two():
    chi = build_tame_character(3, 1, [(0, 2)])
    params = enumerate_parameters(chi)
    assert sorted((p.orbit(1, 1).blocks, p.orbit(1, -1).blocks) for p in params) == [((), (2,)), ((2,), ())]
    assert sum(len(enumerate_sign_characters(p)) for p in params) == 4


def test_single_class_off_pm1():
    chi = build_tame_character(3, 5, [(1, 1)])
    (psi,) = enumerate_parameters(chi)
    assert psi.orbit((5, 1), 1).blocks == ()
    assert psi.orbit((5, 1), -1).blocks == (1,)


def test_empty_parameter():
    (chi,) = enumerate_tame_characters(3, 0, 1)
    (psi,) = enumerate_parameters(chi)
    assert enumerate_sign_characters(psi) == [()]
    assert epsilon_center(psi, ()) == 1


def test_sign_character_counts():
    chi = build_tame_character(3, 1, [(0, 6)])
    one = make_parameter(chi, {1: (Orbit((6,)), Orbit())})
    two = make_parameter(chi, {1: (Orbit((4, 2)), Orbit())})
    assert len(enumerate_sign_characters(one)) == 2
    assert len(enumerate_sign_characters(two)) == 4


def test_epsilon_center():
    chi = build_tame_character(3, 2, [(0, 2), (1, 6)])
    psi = make_parameter(chi, {1: (Orbit((2,)), Orbit()), -1: (Orbit((4, 2)), Orbit())})
    assert len(psi.blocks()) == 3
    assert epsilon_center(psi, (1, 1, 1)) == 1
    assert epsilon_center(psi, (-1, 1, -1)) == 1
    assert epsilon_center(psi, (-1, 1, 1)) == -1


@pytest.mark.parametrize("blocks, signs, k", [
    ((), (), 0),
    ((2,), (1,), 0),
    ((2,), (-1,), 1),
    ((4, 2), (1, -1), 1),
    ((4, 2), (-1, 1), 2),
    ((4, 2), (-1, -1), 1),
    ((6, 4, 2), (1, -1, 1), 2),
    ((6, 4, 2), (-1, 1, -1), 3),
])
def test_gen_springer_k(blocks, signs, k):
    assert gen_springer_k(Orbit(blocks), signs) == k


def test_gen_springer_k_rejects_odd_blocks():
    with pytest.raises(NotApplicable):
        gen_springer_k(Orbit((3,)), (1,))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 24).flatmap(lambda m: st.sampled_from(enumerate_orbits(2 * m, SYMPLECTIC, "discrete"))),
       st.data())
def test_weyl_rank_always_integral(orbit, data):
    signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=len(orbit), max_size=len(orbit)))
    k = gen_springer_k(orbit, signs)
    assert k <= len(orbit)
    assert weyl_rank_from_k(orbit.total, k) >= 0


@pytest.mark.parametrize("kp, km, expected", [
    (2, 0, (3, 2, 1)),
    (0, 0, (1, 0, 1)),
    (0, 2, (3, 2, -1)),
    (1, 1, (3, 0, -1)),
    (1, 0, (1, 2, 1)),
])
def test_cusp_from_k(kp, km, expected):
    assert cusp_from_k(kp, km) == expected


def test_springer_lusztig_off_pm1():
    chi = build_tame_character(3, 5, [(1, 4)])
    psi = make_parameter(chi, {(5, 1): (Orbit(), Orbit((3, 1)))})
    spl = springer_lusztig_data(psi, (1, -1))
    assert spl.n_prime[(5, 1)] == 3
    assert spl.n_second[(5, 1)] == 1


@pytest.mark.parametrize("N", [1, 2, 5])
def test_reconstituted_rank(N):
    for two_n in (0, 2, 4, 6, 8):
        for psi in all_parameters(3, N, two_n):
            for eps in enumerate_sign_characters(psi):
                assert reconstituted_n(psi, springer_lusztig_data(psi, eps)) == two_n // 2


@pytest.mark.parametrize("N", [1, 2, 5, 10])
def test_json_roundtrip(N):
    for psi in all_parameters(3, N, 6):
        for eps in enumerate_sign_characters(psi)[:3]:
            text = json.dumps(psi.to_json(eps))
            back, back_eps = DiscreteParameter.from_json(json.loads(text))
            assert back == psi and back_eps == eps


def test_make_parameter_validation():
    chi = build_tame_character(3, 5, [(1, 2)])
    with pytest.raises(InputError):
        make_parameter(chi, {(5, 1): (Orbit((2,)), Orbit((1,)))})  # total 3
    with pytest.raises(InputError):
        make_parameter(chi, {(5, 1): (Orbit(), Orbit((1, 1)))})  # repeated block
    with pytest.raises(InputError):
        make_parameter(chi, {(5, 1): (Orbit(), Orbit((2,)))})  # even block on the orthogonal side
