"""Residue currents of weighted monomial sequences.

Exact computation of the combinatorial data of weighted residue
currents attached to monomial sequences with zero set {0}: Newton
polyhedra and their Rees valuations, essential multi-indices,
annihilator ideals, multiplicities, per-facet coefficient relations,
and numeric quadrature for the coefficients the exact theory leaves
undetermined.
"""

from .currents import (
    Coefficient,
    CoffeRelation,
    CurrentEntry,
    MonomialSeq,
    Multiplicity,
    ResidueCurrent,
    SweepRefusedError,
    TheoremAReport,
    ann_independent_of_p,
    annihilator,
    coffe_constraints,
    current_independent_of_p,
    enumerate_annihilators,
    is_regular_sequence,
    multiplicity_ep,
    p_essential_indices,
    proof_weights,
    residue_current,
    scaled_points,
    theorem_a_report,
)
from .ideals import MonomialIdeal
from .lattice import det, primitive, unimodular_complement, unimodular_completion
from .newton import (
    Facet,
    NewtonPolyhedron,
    NotCofiniteError,
    complement_volume,
    facet_det,
    lattice_points_in,
    minimal_points,
    newton_polyhedron,
)
from .problem import ProblemFile, ParseError, parse
from .quadrature import (
    ChartExponents,
    NumericCoefficient,
    chart_exponents,
    closed_form_power_integral,
    coefficient_integral,
    numeric_coefficients,
    radial_power_integral,
    validate_coffe_numeric,
)

__version__ = "0.1.0"

__all__ = [
    "Coefficient",
    "CoffeRelation",
    "CurrentEntry",
    "MonomialSeq",
    "Multiplicity",
    "ResidueCurrent",
    "SweepRefusedError",
    "TheoremAReport",
    "MonomialIdeal",
    "Facet",
    "NewtonPolyhedron",
    "NotCofiniteError",
    "ProblemFile",
    "ParseError",
    "ChartExponents",
    "NumericCoefficient",
    "ann_independent_of_p",
    "annihilator",
    "chart_exponents",
    "closed_form_power_integral",
    "coefficient_integral",
    "coffe_constraints",
    "complement_volume",
    "current_independent_of_p",
    "det",
    "enumerate_annihilators",
    "facet_det",
    "is_regular_sequence",
    "lattice_points_in",
    "minimal_points",
    "multiplicity_ep",
    "newton_polyhedron",
    "numeric_coefficients",
    "p_essential_indices",
    "parse",
    "primitive",
    "proof_weights",
    "radial_power_integral",
    "residue_current",
    "scaled_points",
    "theorem_a_report",
    "unimodular_complement",
    "unimodular_completion",
    "validate_coffe_numeric",
]
