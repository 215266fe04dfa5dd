"""Knot Floer complexes over GF(2)[U, U^-1] and the concordance invariants tau, Upsilon, V_k and nu+."""

from .cfk import (
    Complex,
    Generator,
    delta_from_complex,
    direct_sum,
    dual,
    hat_table,
    homology_dims,
    is_knotlike,
    tensor,
    validate,
)
from .invariants import (
    d_half_zero_surgery,
    d_surgery_one,
    first_singularity,
    nu_plus,
    nu_plus_equivalent,
    tau,
    upsilon_at,
    upsilon_jump,
    upsilon_pl,
    v_k,
)
from .models import CableModelConfig, box, cable_model, staircase_from_exponents, thin_model, torus_staircase, unknot

__version__ = "0.1.0"
