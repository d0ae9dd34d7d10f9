"""Lifts of instances and the obstructions built from them."""

from dataclasses import dataclass

from cspalgebra.domain.models.structure import Instance, Structure


@dataclass(frozen=True)
class Lift:
    """An instance Y with a map of its variables onto the variables of X."""

    instance: Instance
    lift_map: tuple[int, ...]
    acyclic: bool = True

    def fiber(self, variable: int) -> tuple[int, ...]:
        return tuple(y for y, x in enumerate(self.lift_map) if x == variable)


@dataclass(frozen=True)
class CycleObstruction:
    """A solvable acyclic lift with no solution constant on one fiber.

    The lift targets ``target``, the original instance plus the derived
    unary constraints, which lives over ``template``.
    """

    lift: Lift
    target: Instance
    template: Structure
    distinguished: int
    fiber: tuple[int, ...]
    materialized: tuple[str, ...] = ()
