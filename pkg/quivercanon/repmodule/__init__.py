"""Highest-weight modules, tensor products and relation checks over QQ(v)."""

from .module import (
    Generator,
    GradedModule,
    HighestWeightModule,
    ModuleSpace,
    ModuleVector,
    WeightSpace,
    apply_generator,
    operator_matrix,
    weight_space,
)
from .quasi_r import QuasiRSolver, quasi_r_action
from .relations import check_module_relations, verify_relations
from .tensor import TensorModule, TensorSpace, tensor_space
from .words import (
    ContravariantForm,
    LoweringWord,
    contravariant_pair,
    enumerate_words,
    lower_raise_commute,
)

__all__ = [
    "Generator",
    "GradedModule",
    "HighestWeightModule",
    "ModuleSpace",
    "ModuleVector",
    "WeightSpace",
    "TensorModule",
    "TensorSpace",
    "LoweringWord",
    "ContravariantForm",
    "QuasiRSolver",
    "apply_generator",
    "operator_matrix",
    "weight_space",
    "tensor_space",
    "lower_raise_commute",
    "contravariant_pair",
    "enumerate_words",
    "verify_relations",
    "check_module_relations",
    "quasi_r_action",
]
