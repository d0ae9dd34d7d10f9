"""Polymorphism search, named operations and pp-definability."""

from cspalgebra.engine.polymorphism import identities, operations
from cspalgebra.engine.polymorphism.checks import (
    certify,
    check_cyclic,
    check_dual_discriminator,
    check_siggers,
    check_wnu,
    find_polymorphism,
)
from cspalgebra.engine.polymorphism.closure import (
    implies_equation,
    is_pp_definable,
    pp_closure,
)
from cspalgebra.engine.polymorphism.indicator import IndicatorLayout, indicator_instance
from cspalgebra.engine.polymorphism.preservation import preserves, violation
from cspalgebra.engine.polymorphism.symmetric import check_totally_symmetric

__all__ = [
    "IndicatorLayout",
    "certify",
    "check_cyclic",
    "check_dual_discriminator",
    "check_siggers",
    "check_totally_symmetric",
    "check_wnu",
    "find_polymorphism",
    "identities",
    "implies_equation",
    "indicator_instance",
    "is_pp_definable",
    "operations",
    "pp_closure",
    "preserves",
    "violation",
]
