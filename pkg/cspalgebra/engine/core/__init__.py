"""Structures, homomorphism search, products and cores."""

from cspalgebra.engine.core.cores import (
    Core,
    automorphism_orbits,
    automorphisms,
    find_core,
    is_core,
    is_transitive,
)
from cspalgebra.engine.core.homomorphism import (
    disjoint_union,
    find_homomorphism,
    hom_equivalent,
    is_homomorphism,
    iter_homomorphisms,
    project_solutions,
)
from cspalgebra.engine.core.products import (
    induced_substructure,
    power,
    singleton_expansion,
    singleton_names,
)
from cspalgebra.engine.core.sat import sat_find_homomorphism
from cspalgebra.engine.core.search import HomomorphismSearch, iter_bits
from cspalgebra.engine.core.validation import (
    ValidationReport,
    Violation,
    validate_instance,
    validate_structure,
)

__all__ = [
    "Core",
    "HomomorphismSearch",
    "ValidationReport",
    "Violation",
    "automorphism_orbits",
    "automorphisms",
    "disjoint_union",
    "find_core",
    "find_homomorphism",
    "hom_equivalent",
    "induced_substructure",
    "is_core",
    "is_homomorphism",
    "is_transitive",
    "iter_bits",
    "iter_homomorphisms",
    "power",
    "project_solutions",
    "sat_find_homomorphism",
    "singleton_expansion",
    "singleton_names",
    "validate_instance",
    "validate_structure",
]
