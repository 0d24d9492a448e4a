"""The refine string order on string sequences."""

from enum import Enum
from typing import Iterable, List, Sequence, Tuple, Union

from .graph import CrystalNode, StringSequence


StringKey = Tuple[Tuple[int, int], ...]


class Comparison(str, Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _as_string(value: Union[CrystalNode, Sequence[Tuple[str, int]]]) -> StringSequence:
    if isinstance(value, CrystalNode):
        return value.string
    return tuple((str(v), int(m)) for v, m in value)


def string_key(value: Union[CrystalNode, Sequence[Tuple[str, int]]], vertex_order: Sequence[str]) -> StringKey:
    """(vertex rank, multiplicity) pairs; lexicographic order on keys refines the string order."""
    rank_of = {str(v): k for k, v in enumerate(vertex_order)}
    return tuple((rank_of[v], m) for v, m in _as_string(value))


def string_order_compare(
    left: Union[CrystalNode, Sequence[Tuple[str, int]]],
    right: Union[CrystalNode, Sequence[Tuple[str, int]]],
    vertex_order: Sequence[str],
) -> Comparison:
    """Compare at the first differing (vertex, multiplicity) pair.

    A string that is a proper prefix of the other is incomparable with it; this
    only happens across different weights.
    """
    a = string_key(left, vertex_order)
    b = string_key(right, vertex_order)
    if a == b:
        return Comparison.EQUAL
    for x, y in zip(a, b):
        if x != y:
            return Comparison.LESS if x < y else Comparison.GREATER
    return Comparison.INCOMPARABLE


def linear_extension(
    nodes: Iterable[CrystalNode], vertex_order: Sequence[str], descending: bool = False
) -> List[CrystalNode]:
    """Nodes sorted along a fixed linear extension of the string order."""
    return sorted(nodes, key=lambda node: string_key(node, vertex_order), reverse=descending)
