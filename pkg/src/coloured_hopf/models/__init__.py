"""Concrete coloured quantum algebras and a small registry keyed by model id."""

from __future__ import annotations

from coloured_hopf.colour import GROUPS, Gl2Params, H4Params, act_params
from coloured_hopf.models.gl2 import (
    Gl2Maps,
    closed_form_R4,
    gl2_R_matrix,
    gl2_rep,
    gl2_structure_maps,
    gl2_universal_R,
    series_length,
)
from coloured_hopf.models.h4 import (
    H4Maps,
    closed_form_R9,
    h4_R_matrix,
    h4_rep,
    h4_structure_maps,
    h4_universal_R,
)
from coloured_hopf.models.qnumbers import q_factorial, q_number

MODELS = ("gl2", "h4")


def structure_maps(model: str, params):
    if model == "gl2":
        return Gl2Maps(params)
    if model == "h4":
        return H4Maps(params)
    raise ValueError(f"unknown model {model!r}")


__all__ = [
    "GROUPS",
    "Gl2Maps",
    "Gl2Params",
    "H4Maps",
    "H4Params",
    "MODELS",
    "act_params",
    "closed_form_R4",
    "closed_form_R9",
    "gl2_R_matrix",
    "gl2_rep",
    "gl2_structure_maps",
    "gl2_universal_R",
    "h4_R_matrix",
    "h4_rep",
    "h4_structure_maps",
    "h4_universal_R",
    "q_factorial",
    "q_number",
    "series_length",
    "structure_maps",
]
