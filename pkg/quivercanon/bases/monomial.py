"""Monomial vectors read from string sequences."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..crystal import Crystal, CrystalNode, linear_extension
from ..errors import MonomialBasisError
from ..exactalg import RatMatrix, matrix_rank
from ..repmodule import Generator, ModuleVector
from ..repmodule.words import Content


logger = logging.getLogger(__name__)


def monomial_vector(crystal: Crystal, node: CrystalNode) -> ModuleVector:
    """f_{i1}^(a1) ... f_{il}^(al) v_lambda for the string ((i1, a1), ..., (il, al))."""
    module = crystal.module
    x = module.highest_vector()
    for vertex, mult in reversed(node.string):
        x = module.apply(Generator.F(vertex, mult), x)
    return x


@dataclass(frozen=True)
class MonomialBasis:
    """Monomial vectors of one weight space, ascending along the string order."""

    content: Content
    vertex_order: Tuple[str, ...]
    nodes: Tuple[CrystalNode, ...]
    vectors: Tuple[ModuleVector, ...]
    rank: int

    @property
    def independent(self) -> bool:
        return self.rank == len(self.vectors)

    def matrix(self) -> RatMatrix:
        dim = len(self.vectors)
        return RatMatrix.from_columns(dim, [x.coords for x in self.vectors])

    def normalized(self, signs: Sequence[int]) -> "MonomialBasis":
        """Same basis with each vector multiplied by the given sign."""
        vectors = tuple(x * s for x, s in zip(self.vectors, signs))
        return MonomialBasis(self.content, self.vertex_order, self.nodes, vectors, self.rank)


def monomial_basis(crystal: Crystal, content: Sequence[int]) -> MonomialBasis:
    """Monomial vectors of all nodes of ``content`` with an exact rank certificate."""
    key = crystal.module.normalize(content)
    nodes = tuple(linear_extension(crystal.nodes_at(key), crystal.vertex_order))
    vectors = tuple(monomial_vector(crystal, node) for node in nodes)
    dim = crystal.module.space(key).dim
    if len(nodes) != dim:
        raise MonomialBasisError(f"{len(nodes)} crystal nodes for a weight space of dimension {dim} at {key}")
    rank = matrix_rank(RatMatrix.from_columns(dim, [x.coords for x in vectors])) if vectors else 0
    if rank != dim:
        raise MonomialBasisError(f"monomial vectors at {key} have rank {rank}, dimension is {dim}")
    logger.debug(f"Monomial basis at {key}: {dim} vectors, independent")
    return MonomialBasis(key, crystal.vertex_order, nodes, vectors, rank)
