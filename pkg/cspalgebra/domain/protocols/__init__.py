"""Domain protocols."""

from cspalgebra.domain.protocols.reduction import ReductionProtocol
from cspalgebra.domain.protocols.solver import SolverProtocol

__all__ = ["ReductionProtocol", "SolverProtocol"]
