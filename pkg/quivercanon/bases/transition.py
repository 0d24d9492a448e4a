"""Change-of-basis matrices between labelled bases of one weight space."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Protocol, Tuple

from sympy import ImmutableMatrix

from ..crystal import Comparison, CrystalNode, string_order_compare
from ..errors import TransitionError
from ..exactalg import RationalScalar, RatMatrix, solve_columns
from ..repmodule import ModuleVector
from ..repmodule.words import Content


logger = logging.getLogger(__name__)


class LabelledBasis(Protocol):
    content: Content
    vertex_order: Tuple[str, ...]
    nodes: Tuple[CrystalNode, ...]
    vectors: Tuple[ModuleVector, ...]


@dataclass(frozen=True)
class TransitionMatrix:
    """T[b][b'] is the coefficient of the column basis vector b' in the row basis vector b.

    Every property is recomputed from ``entries``.
    """

    content: Content
    vertex_order: Tuple[str, ...]
    row_nodes: Tuple[CrystalNode, ...]
    col_nodes: Tuple[CrystalNode, ...]
    entries: RatMatrix

    @property
    def row_labels(self) -> List[str]:
        return [node.key for node in self.row_nodes]

    @property
    def col_labels(self) -> List[str]:
        return [node.key for node in self.col_nodes]

    @property
    def size(self) -> int:
        return self.entries.rows

    @property
    def diagonal(self) -> List[RationalScalar]:
        return [self.entries[k, k] for k in range(self.size)]

    @property
    def is_identity(self) -> bool:
        return self.entries.is_identity()

    @property
    def is_denominator_free(self) -> bool:
        return self.entries.is_laurent

    def violations(self) -> List[Tuple[str, str]]:
        """Off-diagonal nonzero entries T[b][b'] whose column node is not above the row node."""
        found = []
        for r, b in enumerate(self.row_nodes):
            for c, b_prime in enumerate(self.col_nodes):
                if r == c or not self.entries[r, c]:
                    continue
                if string_order_compare(b_prime, b, self.vertex_order) is not Comparison.GREATER:
                    found.append((b.key, b_prime.key))
        return found

    @property
    def is_unitriangular(self) -> bool:
        same_labels = all(a is b for a, b in zip(self.row_nodes, self.col_nodes))
        return same_labels and all(d == 1 for d in self.diagonal) and not self.violations()

    def specialize(self, point: int) -> ImmutableMatrix:
        return self.entries.specialize(point)

    def sign_statistics(self, point: int = -1) -> Dict[str, int]:
        """Signs of the off-diagonal entries after specializing at ``point``."""
        stats = {"positive": 0, "negative": 0, "zero": 0}
        values = self.specialize(point)
        for r in range(self.size):
            for c in range(self.size):
                if r == c:
                    continue
                value = values[r, c]
                stats["positive" if value > 0 else "negative" if value < 0 else "zero"] += 1
        return stats

    def csv_rows(self) -> List[List[str]]:
        header = [""] + self.col_labels
        rows = [header]
        for r, label in enumerate(self.row_labels):
            rows.append([label] + [str(self.entries[r, c]) for c in range(self.size)])
        return rows


def transition_matrix(source: LabelledBasis, target: LabelledBasis) -> TransitionMatrix:
    """Express every vector of ``source`` in the ``target`` basis."""
    if tuple(source.content) != tuple(target.content):
        raise TransitionError(f"bases live at different contents {source.content} and {target.content}")
    dim = len(target.vectors)
    if len(source.vectors) != dim:
        raise TransitionError(f"bases have different sizes {len(source.vectors)} and {dim}")
    target_matrix = RatMatrix.from_columns(dim, [x.coords for x in target.vectors])
    source_matrix = RatMatrix.from_columns(dim, [x.coords for x in source.vectors])
    results = solve_columns(target_matrix, source_matrix)
    if any(not result.unique for result in results):
        raise TransitionError(f"target vectors at {tuple(target.content)} do not form a basis")
    # row b of T holds the coordinates of source[b]
    entries = RatMatrix.build(dim, dim, [result.solution for result in results])  # type: ignore[misc]
    matrix = TransitionMatrix(tuple(source.content), tuple(source.vertex_order), source.nodes, target.nodes, entries)
    logger.debug(f"Transition matrix at {matrix.content}: identity={matrix.is_identity}")
    return matrix
