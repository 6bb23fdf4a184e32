import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from level0.errors import InputError, NotApplicable, NotStable, Unsupported
from level0.fourier import (
    DEFAULT, EllElement, FourierConfig, d_sign, expand_elliptic, fourier, fourier_component, fourier_matrix,
    fourier_of_stable, fourier_tensor, free_blocks, involution_check, sigma_u, stable_packet,
)
from level0.orbits import Orbit
from level0.params import enumerate_parameters, enumerate_sign_characters, epsilon_center, make_parameter
from level0.tame import build_tame_character, enumerate_tame_characters
from level0.verify import fourier_suite, packets_suite

TRIVIAL_EPS = FourierConfig(1, "trivial")
CONFIGS = [DEFAULT, TRIVIAL_EPS, FourierConfig(-1, "sigma_u"), FourierConfig(-1, "trivial")]


def vec(blocks, eps, key=None):
    return EllElement.basis((key, tuple(blocks), tuple(eps)))


def test_even_block_example():
    assert fourier_component((2,), (1,)) == vec((2,), (1,)) + vec((2,), (-1,))


def test_odd_block_example():
    assert fourier_component((3,), (1,)) == vec((3,), (1,)) - vec((3,), (-1,))


def test_empty_orbit_is_identity():
    assert fourier_component((), ()) == vec((), ())


def test_pm1_classes_are_refused():
    with pytest.raises(NotApplicable):
        fourier_component((2,), (1,), key=1)
    chi = build_tame_character(3, 1, [(0, 2)])
    psi = enumerate_parameters(chi)[0]
    for fn in (fourier, fourier_tensor):
        with pytest.raises(Unsupported):
            fn(psi, (1,))
    with pytest.raises(Unsupported):
        fourier_of_stable(psi, (1,), 1)


def test_bad_inputs():
    with pytest.raises(InputError):
        fourier_component((3,), (1, 1))
    with pytest.raises(InputError):
        fourier_component((3, 3, 3), ())
    with pytest.raises(InputError):
        FourierConfig(2)
    with pytest.raises(InputError):
        FourierConfig(1, "other")


@pytest.mark.parametrize("blocks, scale", [((2,), 2), ((4, 2), 4), ((6, 4, 2), 8), ((3,), 2), ((3, 3), 1)])
def test_square_under_default_convention(blocks, scale):
    rep = involution_check(blocks)
    assert rep["relation"] == "scaled_identity"
    assert rep["scale"] == scale


def test_jord_three_matrix():
    labels, M = fourier_matrix((3,))
    assert labels == [(1,), (-1,)]
    assert M.tolist() == [[1, -1], [-1, -1]]
    assert (M @ M).tolist() == [[2, 0], [0, 2]]


def test_jord_three_with_trivial_sigma_eps():
    _, M = fourier_matrix((3,), TRIVIAL_EPS)
    assert M.tolist() == [[1, -1], [1, 1]]
    assert (M @ M).tolist() == [[0, -2], [2, 0]]
    rep = involution_check((3,), TRIVIAL_EPS)
    assert rep["relation"] == "other"
    assert rep["scale"] == 2 and rep["detail"] == "signed_permutation"


ORBITS = st.lists(st.integers(1, 8), max_size=4).map(lambda xs: tuple(sorted(set(xs), reverse=True)))


@settings(max_examples=80, deadline=None)
@given(ORBITS, st.sampled_from(CONFIGS))
def test_square_is_scaled_signed_permutation(blocks, cfg):
    _, M = fourier_matrix(blocks, cfg)
    S = M @ M
    n = 2 ** len(blocks)
    assert np.array_equal(np.abs(S), n * np.abs(S // n)) and np.all(np.abs(S).sum(axis=1) == n)
    rep = involution_check(blocks, cfg)
    if cfg.sigma_eps == "sigma_u" or all(a % 2 == 0 for a in blocks):
        assert rep["relation"] == "scaled_identity" and rep["scale"] == n
    else:
        assert rep["relation"] == "other" and rep["detail"] == "signed_permutation"


def test_even_only_orbits_square_to_power_of_two():
    evens = (8, 6, 4, 2)
    for r in range(5):
        for blocks in itertools.combinations(evens, r):
            for cfg in CONFIGS:
                _, M = fourier_matrix(blocks, cfg)
                assert np.array_equal(M @ M, 2 ** r * np.eye(2 ** r, dtype=np.int64))


def test_elliptic_expansion():
    raw = expand_elliptic((5, 1), (3, 3, 1), (1,))
    assert raw == {((5, 1), (3, 3, 1), (1, 1)): 1, ((5, 1), (3, 3, 1), (-1, 1)): -1}
    assert free_blocks((3, 3, 1)) == (1,)
    assert sigma_u((3, 3, 1), (-1,)) == -1


def off_pm1_parameters():
    seeds = ([(1, 3), (2, 2)], [(1, 2), (2, 3)], [(1, 1), (2, 1)], [(1, 4)], [(1, 3)])
    out = []
    for s in seeds:
        chi = build_tame_character(3, 10, s)
        out += enumerate_parameters(chi)
    return out


PARAMS = off_pm1_parameters()


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(PARAMS), st.data(), st.sampled_from(CONFIGS))
def test_tensor_factorization(psi, data, cfg):
    eps = data.draw(st.sampled_from(enumerate_sign_characters(psi)))
    assert fourier(psi, eps, cfg) == fourier_tensor(psi, eps, cfg)


def test_fourier_suite():
    rep = fourier_suite(3, 4)
    assert rep["passed"], rep["failures"]
    assert rep["tensor_cases"] > 0
    assert len(rep["involution_reports"]) == 2 * sum(1 for r in range(4) for _ in itertools.combinations(range(7), r))


@pytest.mark.parametrize("psi", PARAMS)
def test_closed_form_on_stable_and_semistable(psi):
    n = len(psi.blocks())
    for zeta in (1, -1):
        eps = (zeta,) * n
        assert fourier_of_stable(psi, eps, zeta) == fourier(psi, eps)
    if n:
        with pytest.raises(NotStable):
            fourier_of_stable(psi, (1,) + (-1,) * (n - 1), -1)


def test_closed_form_examples():
    chi = build_tame_character(3, 5, [(1, 2)])
    even = make_parameter(chi, {(5, 1): (Orbit((2,)), Orbit())})
    assert fourier_of_stable(even, (1,), 1) == vec((2,), (1,), (5, 1)) + vec((2,), (-1,), (5, 1))
    chi = build_tame_character(3, 5, [(1, 3)])
    odd = make_parameter(chi, {(5, 1): (Orbit(), Orbit((3,)))})
    got = fourier_of_stable(odd, (-1,), -1)
    # sigma_u(eps) = -1, then sigma_u(eps') * eps'_Z = 1 for both eps'
    assert got.coefficient(((5, 1), (3,), (1,))) == -1
    assert got.coefficient(((5, 1), (3,), (-1,))) == -1
    (empty,) = enumerate_parameters(build_tame_character(3, 5, []))
    assert fourier_of_stable(empty, (), 1) == EllElement.basis()


def test_d_sign_examples():
    chi = build_tame_character(3, 5, [(1, 5)])
    psi = make_parameter(chi, {(5, 1): (Orbit((2,)), Orbit((3,)))})
    blocks = psi.blocks()
    assert [b.alpha for b in blocks] == [2, 3]
    assert d_sign(psi, (1, 1)) == 1
    assert d_sign(psi, (-1, 1)) == -1
    assert d_sign(psi, (1, -1)) == 1


def test_packet_examples():
    chi = build_tame_character(3, 1, [(0, 2)])
    psi = make_parameter(chi, {1: (Orbit((2,)), Orbit())})
    assert stable_packet(psi, "iso") == [((1,), 1)]
    assert stable_packet(psi, "an") == [((-1,), 1)]
    assert stable_packet(psi, "an", weighted=True) == [((-1,), -1)]
    (empty,) = enumerate_parameters(build_tame_character(3, 1, []))
    assert stable_packet(empty, "iso") == [((), 1)]
    assert stable_packet(empty, "an") == []
    with pytest.raises(InputError):
        stable_packet(psi, "split")


@pytest.mark.parametrize("N", [1, 2, 5, 10])
def test_packets_partition_sign_characters(N):
    for two_n in range(0, 9, 2):
        for chi in enumerate_tame_characters(3, two_n, N):
            for psi in enumerate_parameters(chi):
                iso = [e for e, _ in stable_packet(psi, "iso")]
                an = [e for e, _ in stable_packet(psi, "an")]
                assert sorted(iso + an) == sorted(enumerate_sign_characters(psi))
                assert all(epsilon_center(psi, e) == 1 for e in iso)
                assert len(iso) + len(an) == 2 ** len(psi.blocks())


def test_packets_suite():
    rep = packets_suite()
    assert rep["passed"], rep["failures"]
