"""Exact two-color Rado numbers for a1*x1 + ... + am*xm = x0."""
from .equation import (
    CanonicalForm,
    Coloring,
    ConstraintSet,
    EquationSpec,
    SolutionTuple,
    SpecError,
    canonicalize,
    enumerate_solutions,
    find_monochromatic,
)
from .formula import RadoValue, rado_number, sandwich_bounds, special_case_value
from .solver import SearchOptions, SearchResult, Verdict, exists_valid_coloring, minimal_rado_by_search
from .witness import Certificate, certify_pair, extremal_coloring

__version__ = "0.1.0"
