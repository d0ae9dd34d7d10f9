"""Engine exceptions."""


class EngineError(Exception):
    """Base exception for engine."""

    pass


class SignatureMismatchError(EngineError):
    """Instance and template (or two structures) have different signatures."""

    pass


class ValueOutOfRangeError(EngineError):
    """Seed or assignment value outside the template domain."""

    pass


class CapExceededError(EngineError):
    """A configured size cap refused the computation."""

    def __init__(self, what: str, required: int | None, cap: int) -> None:
        self.what = what
        self.required = required
        self.cap = cap
        needed = "more than the cap" if required is None else str(required)
        super().__init__(f"{what}: requires {needed}, cap is {cap}")


class NotACoreError(EngineError):
    """Structure has a non-injective endomorphism."""

    pass


class InvalidExtractorError(EngineError):
    """Operation is not a totally symmetric polymorphism of sufficient arity."""

    pass


class CyclicInstanceError(EngineError):
    """Acyclic solver called on an instance with a cycle."""

    pass


class PreconditionError(EngineError):
    """Inputs violate the documented precondition."""

    pass


class VerificationError(EngineError):
    """A produced object failed its own re-verification."""

    pass


class MalformedInterpretationError(EngineError):
    """Interpretation is not total, not surjective or not closed under its quotient."""

    pass


class DecompositionError(EngineError):
    """Relation is not a conjunction of dual-discriminator binary relations."""

    pass


class InconclusiveError(EngineError):
    """A partial solving strategy could not decide the instance."""

    pass


class GadgetError(EngineError):
    """Gadget assembly or translation failed."""

    pass


class NotSmoothError(EngineError):
    """Digraph has a source or a sink."""

    pass


class WrongDomainSizeError(EngineError):
    """Operation requires a different domain size."""

    pass
