import pytest

from level0.errors import ConventionViolation, ParityError
from level0.params import enumerate_parameters, enumerate_sign_characters, springer_lusztig_data
from level0.symbols import Symbol, check_rank_identity, cusp_datum, defect, enumerate_cusps, weyl_rank
from level0.tame import enumerate_tame_characters


@pytest.mark.parametrize("a, b, d", [((0, 2), (1,), 1), ((), (), 0), ((0,), (1, 3), -1)])
def test_defect(a, b, d):
    assert defect(Symbol(a, b)) == d
    assert Symbol(a, b).swapped().defect == -d


def test_symbol_rows_must_increase():
    with pytest.raises(ValueError):
        Symbol((2, 1), ())


@pytest.mark.parametrize("d, rank, expected", [(3, 5, 3), (1, 7, 7), (2, 4, 3), (5, 3, None), (0, 2, 2), (-2, 4, 3)])
def test_weyl_rank(d, rank, expected):
    assert weyl_rank(d, rank) == expected


def test_minimal_datum():
    c = cusp_datum((1, 1), (0, 0), (1, 1))
    assert (c.r_prime(1), c.r_prime(-1)) == (1, 0)
    assert (c.r_second(1), c.r_second(-1)) == (0, 0)
    assert c.eps_I == c.eps_P == 1


def test_radii_of_larger_datum():
    c = cusp_datum((3, 1), (2, 0), (1, 1))
    assert c.eps_I == c.eps_P == 1
    assert c.r_prime(1) == 1 and c.r_prime(-1) == 2
    assert c.r_prime(1) % 2 == 1


def test_free_zeta_when_P_positive():
    c = cusp_datum((1, 1), (2, 0), (-1, 1))
    assert c.eps_P == 1 and c.eps_I == 1


def test_validation():
    with pytest.raises(ParityError):
        cusp_datum((2, 1), (0, 0), (1, 1))
    with pytest.raises(ParityError):
        cusp_datum((1, 1), (1, 0), (1, 1))
    with pytest.raises(ParityError):
        cusp_datum((1, 1), (2, 0), (0, 1))
    with pytest.raises(ConventionViolation):
        cusp_datum((1, 1), (0, 0), (-1, 1))
    with pytest.raises(ConventionViolation):
        cusp_datum((3, 1), (0, 0), (1, 1))


def test_enumerate_cusps():
    cusps = enumerate_cusps(3, 2)
    assert len(cusps) == 36 == len(set(cusps))
    for c in cusps:
        assert cusp_datum((c.I_plus, c.I_minus), (c.P_plus, c.P_minus), (c.zeta_plus, c.zeta_minus)) == c


def test_literal_rank_identity_is_never_integral():
    # (I^2 + P^2)/2 has odd numerator since I is odd and P even
    rep = check_rank_identity(cusp_datum((1, 1), (0, 0), (1, 1)), (0, 0), (0, 0), 0, 0)
    assert rep["holds"] is False
    assert rep["corrected"] == {1: True, -1: True}
    rep = check_rank_identity(cusp_datum((1, 1), (2, 2), (1, 1)), (1, 0), (0, 0), 4, 4)
    assert rep["literal"][1] is False


@pytest.mark.parametrize("N", [1, 2])
def test_corrected_rank_identity_on_parameters(N):
    for two_n in range(0, 9, 2):
        for chi in enumerate_tame_characters(3, two_n, N):
            for psi in enumerate_parameters(chi):
                for eps in enumerate_sign_characters(psi):
                    spl = springer_lusztig_data(psi, eps)
                    I, P, Z = spl.cusp_triple()
                    cusp = cusp_datum(I, P, Z)
                    rep = check_rank_identity(
                        cusp, (spl.N[(1, 1)], spl.N[(-1, 1)]), (spl.N[(1, -1)], spl.N[(-1, -1)]),
                        chi.mult(1), chi.mult(-1))
                    assert rep["corrected"] == {1: True, -1: True}
