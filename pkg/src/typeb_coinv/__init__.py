"""Tableau combinatorics for type B rational Cherednik modules and lower bounds
on the dimension of the diagonal coinvariant ring of W(B_n)."""

from .characters import (
    CHI,
    CHI_PRIME,
    DET,
    TRIV,
    BoundReport,
    eps_chi_bound,
    gordon_scenario,
    hook_scenario,
    is_coinvariant_type,
    multiplicity_linear,
    occurs_linear,
    rect_scenario,
    run_scenario,
    theorem_bound,
)
from .exact import TAU, ParamScalar, as_integer, as_positive_integer, parse_scalar
from .params import Params, gordon_params, hook_k, hook_params, rect_params
from .shapes import Bipartition, BBox, SkewComponent, SkewPair, SkewTableau
from .tableaux import (
    QFilling,
    PFilling,
    diagram_of_Q,
    enumerate_tab,
    reconstruct_diagram,
    resolve_constraints,
    weight_sequence,
)

__version__ = "0.1.0"
