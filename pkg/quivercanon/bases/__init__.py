"""Monomial and canonical bases, transition matrices, psi-twists and the coproduct shadow."""

from .canonical import CanonicalBasis, canonical_basis, congruent_to_node, is_bar_invariant
from .monomial import MonomialBasis, monomial_basis, monomial_vector
from .oracle import brute_force_canonical, symmetric_coefficients
from .shadow import is_highest_pure_tensor, tensor_monomial_shadow, verify_shadow
from .tensor_canonical import TensorCanonicalBasis, TensorCanonicalBuilder, tensor_canonical_basis
from .transition import TransitionMatrix, transition_matrix
from .twisted import (
    CanonicalFrame,
    framing_context,
    twist_sign,
    twisted_action,
    verify_twisted_relations,
)

__all__ = [
    "CanonicalBasis",
    "CanonicalFrame",
    "MonomialBasis",
    "TensorCanonicalBasis",
    "TensorCanonicalBuilder",
    "TransitionMatrix",
    "canonical_basis",
    "congruent_to_node",
    "is_bar_invariant",
    "monomial_basis",
    "monomial_vector",
    "brute_force_canonical",
    "symmetric_coefficients",
    "tensor_canonical_basis",
    "transition_matrix",
    "framing_context",
    "twist_sign",
    "twisted_action",
    "verify_twisted_relations",
    "tensor_monomial_shadow",
    "is_highest_pure_tensor",
    "verify_shadow",
]
