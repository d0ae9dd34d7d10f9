"""Standard height 1 identity systems."""

from cspalgebra.domain.models import FlatTerm, IdentitySystem


def siggers() -> IdentitySystem:
    """f(r,a,r,e) = f(a,r,e,a)."""
    return IdentitySystem(
        (("f", 4),),
        ((FlatTerm("f", ("r", "a", "r", "e")), FlatTerm("f", ("a", "r", "e", "a"))),),
        name="siggers",
    )


def wnu(n: int) -> IdentitySystem:
    """w(y,x,...,x) = w(x,y,x,...,x) = ... = w(x,...,x,y).

    Only the height 1 equalities; idempotence comes from the singleton
    relations the classifier adds to the template.
    """
    if n < 2:
        raise ValueError("WNU arity must be >= 2")
    terms = [
        FlatTerm("w", tuple("y" if i == j else "x" for i in range(n))) for j in range(n)
    ]
    return IdentitySystem(
        (("w", n),), tuple(zip(terms, terms[1:], strict=False)), name=f"wnu({n})"
    )


def cyclic(p: int) -> IdentitySystem:
    """c(x1,...,xp) = c(x2,...,xp,x1)."""
    if p < 1:
        raise ValueError("cyclic arity must be >= 1")
    args = tuple(f"x{i}" for i in range(1, p + 1))
    equations = () if p == 1 else ((FlatTerm("c", args), FlatTerm("c", args[1:] + args[:1])),)
    return IdentitySystem((("c", p),), equations, name=f"cyclic({p})")


def commutative() -> IdentitySystem:
    return cyclic(2)


def empty(arity: int, symbol: str = "f") -> IdentitySystem:
    """No identities: every polymorphism of the arity qualifies."""
    return IdentitySystem(((symbol, arity),), (), name=f"none({arity})")
