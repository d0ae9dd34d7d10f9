"""Instance reduction Protocol."""

from typing import Protocol

from cspalgebra.domain.models import Assignment, Instance, ReductionCertificate


class ReductionProtocol(Protocol):
    """A compiled instance together with its two solution translations."""

    @property
    def source(self) -> Instance:
        """Instance that was compiled."""
        ...

    @property
    def output(self) -> Instance:
        """Compiled instance over the source template."""
        ...

    @property
    def certificate(self) -> ReductionCertificate:
        """Provenance and degree accounting."""
        ...

    def pushforward(self, solution: Assignment) -> Assignment:
        """Map a solution of the source to a solution of the output."""
        ...

    def pullback(self, solution: Assignment) -> Assignment:
        """Map a solution of the output back to a solution of the source."""
        ...
