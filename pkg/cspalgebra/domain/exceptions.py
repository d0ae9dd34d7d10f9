"""Domain exceptions."""


class DomainError(Exception):
    """Base exception for domain models."""

    pass


class SignatureError(DomainError):
    """Relation symbols are duplicated, unknown or have a bad arity."""

    pass


class MalformedOperationError(DomainError):
    """Operation table is not total or has outputs outside the domain."""

    pass


class MalformedIdentityError(DomainError):
    """Identity system uses an undeclared symbol or a wrong arity."""

    pass


class MalformedFormulaError(DomainError):
    """Formula mentions unknown variables or mixes equality into simple mode."""

    pass


class MalformedPathError(DomainError):
    """Closed path does not chain through its constraint tuples."""

    pass


class MalformedGraphError(DomainError):
    """Graph has a loop, a duplicate edge or an out-of-range vertex."""

    pass


class MalformedCNFError(DomainError):
    """CNF clause is not a 3-clause over distinct declared variables."""

    pass
