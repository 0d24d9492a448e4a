"""Kashiwara operators, crystal enumeration, string data and tensor crystals."""

from .graph import Crystal, CrystalNode, StringSequence, enumerate_crystal, format_string, string_sequence
from .kashiwara import i_string_decompose, kashiwara, string_depth
from .strings import Comparison, linear_extension, string_key, string_order_compare
from .tensor_rule import TensorCrystal, crystal_restriction, tensor_crystal_op, verify_tensor_rule

__all__ = [
    "Crystal",
    "CrystalNode",
    "StringSequence",
    "TensorCrystal",
    "Comparison",
    "enumerate_crystal",
    "format_string",
    "string_sequence",
    "i_string_decompose",
    "kashiwara",
    "string_depth",
    "string_key",
    "string_order_compare",
    "linear_extension",
    "tensor_crystal_op",
    "verify_tensor_rule",
    "crystal_restriction",
]
