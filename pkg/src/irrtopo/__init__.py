"""Irreducible sets, the SI topology and Irr-convergence on finite and example spaces."""

from .catalog import CATALOG, catalog_get, catalog_properties, catalog_way_below, validate_catalog
from .convergence import (
    FiniteNet, SequenceNet, TailClass, induced_topology, irr_class, irr_converges,
    kelley_check, location_check, subnet, tail_class_of, topological_class,
    topological_converges,
)
from .core import FiniteSpace, Poset, alexandroff, closure, from_opens, interior, specialization
from .derived import DerivedSpaceTrace, is_si_open, si_derivative, si_iterate
from .irr import PropertyReport, check_properties, irr_plus, is_irreducible, way_below_irr
from .lab import enumerate_posets, find_counterexample, run_implication_suite

__all__ = [
    "CATALOG", "DerivedSpaceTrace", "FiniteNet", "FiniteSpace", "Poset", "PropertyReport",
    "SequenceNet", "TailClass", "alexandroff", "catalog_get", "catalog_properties",
    "catalog_way_below", "check_properties", "closure", "enumerate_posets",
    "find_counterexample", "from_opens", "induced_topology", "interior", "irr_class",
    "irr_converges", "irr_plus", "is_irreducible", "is_si_open", "kelley_check",
    "location_check", "run_implication_suite", "si_derivative", "si_iterate",
    "specialization", "subnet", "tail_class_of", "topological_class",
    "topological_converges", "validate_catalog", "way_below_irr",
]
