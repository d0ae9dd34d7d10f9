"""Dual-discriminator decomposition and solving, and the rock-paper-scissors pass."""

from cspalgebra.engine.dual_discriminator.decomposition import (
    Atom,
    DisjunctionAtom,
    PermutationAtom,
    UnaryAtom,
    decompose_relation,
    decompose_template,
    instance_atoms,
)
from cspalgebra.engine.dual_discriminator.propagation import dual_discriminator_solve
from cspalgebra.engine.dual_discriminator.rps import rps_relations, rps_solve

__all__ = [
    "Atom",
    "DisjunctionAtom",
    "PermutationAtom",
    "UnaryAtom",
    "decompose_relation",
    "decompose_template",
    "dual_discriminator_solve",
    "instance_atoms",
    "rps_relations",
    "rps_solve",
]
