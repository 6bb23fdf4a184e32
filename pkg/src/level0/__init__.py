"""Combinatorics of level-zero discrete parameters for odd orthogonal p-adic groups.

Submodules, bottom-up: scalars, orbits, tame, params, symbols, weylrep, graded,
rho_iota, localization, stability, fourier, verify, cli.
"""

__version__ = "0.1.0"

from .errors import Level0Error  # noqa: E402
from .fourier import FourierConfig, d_sign, fourier, fourier_component, involution_check, stable_packet  # noqa: E402
from .orbits import Orbit, enumerate_orbits  # noqa: E402
from .params import (DiscreteParameter, enumerate_parameters, enumerate_sign_characters,  # noqa: E402
                     make_parameter, springer_lusztig_data)
from .scalars import CycloScalar  # noqa: E402
from .stability import StabilityClass, classify_pair, classify_parameter, instability_report  # noqa: E402
from .symbols import CuspidalDatum, Symbol, cusp_datum  # noqa: E402
from .tame import TameCharacter, build_tame_character, enumerate_tame_characters  # noqa: E402

__all__ = [
    "__version__", "Level0Error", "CycloScalar", "Orbit", "enumerate_orbits", "TameCharacter",
    "build_tame_character", "enumerate_tame_characters", "DiscreteParameter", "make_parameter",
    "enumerate_parameters", "enumerate_sign_characters", "springer_lusztig_data", "Symbol",
    "CuspidalDatum", "cusp_datum", "StabilityClass", "classify_pair", "classify_parameter",
    "instability_report", "FourierConfig", "fourier", "fourier_component", "involution_check",
    "d_sign", "stable_packet",
]
