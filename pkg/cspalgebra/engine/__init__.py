"""Engine layer - the algorithms behind classification, solving and reductions."""

from cspalgebra.engine.consistency import good_witness, width1_solve
from cspalgebra.engine.core import find_core, find_homomorphism, is_homomorphism
from cspalgebra.engine.gadgets import reduce_3sat, verify_gadget
from cspalgebra.engine.polymorphism import check_siggers, find_polymorphism

__all__ = [
    "check_siggers",
    "find_core",
    "find_homomorphism",
    "find_polymorphism",
    "good_witness",
    "is_homomorphism",
    "reduce_3sat",
    "verify_gadget",
    "width1_solve",
]
