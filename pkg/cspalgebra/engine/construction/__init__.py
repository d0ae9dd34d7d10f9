"""Formula evaluation, interpretations and the instance compiler."""

from cspalgebra.engine.construction.chain import (
    BoundStep,
    ConstructionChain,
    EquivalenceReduction,
    EquivalenceStep,
    InterpretStep,
    SingletonStep,
    Step,
)
from cspalgebra.engine.construction.formulas import (
    CompiledFormula,
    eq_c_formula,
    eq_c_name,
    eq_c_relation,
    evaluate_formula,
    formula_relation,
    least_witness,
    simple_definition_equation_free,
)
from cspalgebra.engine.construction.interpretation import (
    InterpretationReduction,
    definition_interpretation,
    reduce_interpretation,
    validate_interpretation,
)
from cspalgebra.engine.construction.reduction import CompiledReduction, ComposedReduction
from cspalgebra.engine.construction.singleton import (
    SingletonReduction,
    compile_singletons,
    ensure_eq_relations,
    reduce_singleton_expansion,
)

__all__ = [
    "BoundStep",
    "CompiledFormula",
    "CompiledReduction",
    "ComposedReduction",
    "ConstructionChain",
    "EquivalenceReduction",
    "EquivalenceStep",
    "InterpretStep",
    "InterpretationReduction",
    "SingletonReduction",
    "SingletonStep",
    "Step",
    "compile_singletons",
    "definition_interpretation",
    "ensure_eq_relations",
    "eq_c_formula",
    "eq_c_name",
    "eq_c_relation",
    "evaluate_formula",
    "formula_relation",
    "least_witness",
    "reduce_interpretation",
    "reduce_singleton_expansion",
    "simple_definition_equation_free",
    "validate_interpretation",
]
