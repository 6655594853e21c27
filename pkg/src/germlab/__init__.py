"""germlab: singularity invariants of functions on isolated determinantal
singularities, and Whitney equisingularity of one-parameter families.

The package computes, over exact coefficient fields, the Milnor number of
a function germ on an IDS, polar multiplicities (including the top polar
multiplicity of the fiber), vanishing Euler characteristics, Euler
obstructions and nu* sequences, and decides Whitney equisingularity of a
family by goodness plus constancy of all polar multiplicities.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    GenericityError,
    GermlabError,
    InputError,
    ValidationError,
)
from .fields import QQ, PrimeField, field_from_spec
from .orders import GLOBAL, LOCAL, BlockElimination, DegRevLex, NegDegRevLex
from .parse import PolynomialSyntaxError, parse_polynomial
from .poly import Polynomial, Ring
from .stdbasis import (
    Budgets,
    Ideal,
    QuotientInfo,
    colength,
    contains,
    eliminate,
    ideal_sum,
    intersect,
    is_unit_ideal,
    krull_dimension,
    multiplicity_m0,
    normal_form,
    saturate,
    saturate_by_poly,
)
from .germs import (
    DeterminantalPresentation,
    FunctionGerm,
    PolyMatrix,
    critical_ideal_on_deformation,
    deformed_ideal,
    degenerate_critical_set_ideal,
    delta_jacobian_extension,
    iterated_jacobian_extension,
    jacobian,
    minors_ideal,
    singular_locus_ideal,
)
from .invariants import (
    GenericitySample,
    InvariantReport,
    euler_obstruction_fiber,
    gaffney_md_icis,
    germ_report,
    icis_milnor,
    invariant_report,
    milnor_number,
    nu_star_sequence,
    polar_multiplicity_k,
    random_linear_form,
    top_polar_X,
    top_polar_fiber,
    vanishing_euler_X,
    vanishing_euler_fiber,
)
from .family import (
    FamilySpec,
    FamilyVerdict,
    conservation_check,
    constancy_check,
    default_t_samples,
    goodness_check,
    whitney_verdict,
)

__all__ = [name for name in dir() if not name.startswith("_")]
