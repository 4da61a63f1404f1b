"""Hilbert functions of fat schemes on inclics, star configurations and galaxies.

Everything is exact: integers, :class:`fractions.Fraction`, and integer
matrices whose ranks are certified.
"""

from .exact_arith import ambient_hilbert, binom, fat_subspace_hilbert
from .hf_engine import (AlphaResult, CrossValidatingProvider, FatSubspaceProvider, FlagInclic,
                        HilbertTable, hilbert_table,
                        FlagLevel, LineProvider, OracleProvider, RecursiveProvider,
                        alpha_descent_check, alpha_inclic, hf_flag, hf_inclic)
from .oracle import (NotFoundBelowCap, component_conditions, oracle_alpha, oracle_hilbert,
                     oracle_reg_points)
from .scheme_core import (FatComponent, FatSchemeSpec, InclicScheme, LinearSubspace,
                          SchemeError, adapted_coordinates, symbolic_power_scheme,
                          trace_scheme, validate_inclic)
from .star_galaxy import (GalaxyParams, a_sequence, build_galaxy, build_star,
                          resurgence_bounds, verify_galaxy_chain, waldschmidt,
                          waldschmidt_constant)

__version__ = "0.1.0"
