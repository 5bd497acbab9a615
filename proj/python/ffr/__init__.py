"""Free-field realizations of sl_n and admissible-level combinatorics."""

from ._ffr import (  # noqa: F401
    FfrError,
    admissible_level,
    c_gamma,
    ff_field,
    omega,
    omega_direct,
    orbit_dim,
    orbit_table,
    pi_g,
    prk,
    richardson,
    verify_affine_comm,
    verify_pi_hom,
)

__all__ = [
    "FfrError",
    "admissible_level",
    "c_gamma",
    "ff_field",
    "omega",
    "omega_direct",
    "orbit_dim",
    "orbit_table",
    "pi_g",
    "prk",
    "richardson",
    "verify_affine_comm",
    "verify_pi_hom",
]
