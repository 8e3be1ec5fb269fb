"""Combinatorial toolchain for rank-one crystals, rigged configurations and
the generalized periodic box-ball system with its inverse-scattering solution.
"""

from .crystal import (
    AffineBox,
    Box,
    affine_r,
    box_from_string,
    capacities,
    combinatorial_r,
    energy_h,
    eps_phi,
    highest_box,
    is_highest,
    kashiwara_e,
    kashiwara_f,
    omega,
    parse_path,
    render_path,
    weight,
    weyl_s,
)

__all__ = [
    "AffineBox",
    "Box",
    "affine_r",
    "box_from_string",
    "capacities",
    "combinatorial_r",
    "energy_h",
    "eps_phi",
    "highest_box",
    "is_highest",
    "kashiwara_e",
    "kashiwara_f",
    "omega",
    "parse_path",
    "render_path",
    "weight",
    "weyl_s",
]
