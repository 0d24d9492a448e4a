"""Canonical basis vectors by v-adic correction of monomial vectors."""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, List, Optional, Sequence, Tuple

from ..crystal import Crystal, CrystalNode
from ..errors import CanonicalBasisError, CrystalError
from ..exactalg import RatMatrix, symmetric_correction
from ..repmodule import ModuleVector
from ..repmodule.words import Content
from .monomial import MonomialBasis, monomial_basis


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CanonicalBasis:
    """G(b) for the nodes of one weight space, in the order of the monomial basis.

    ``signs[k]`` is the sign absorbed when the corrected monomial of node k was
    congruent to minus the node.
    """

    content: Content
    vertex_order: Tuple[str, ...]
    nodes: Tuple[CrystalNode, ...]
    vectors: Tuple[ModuleVector, ...]
    signs: Tuple[int, ...]
    steps: Tuple[int, ...]

    def matrix(self) -> RatMatrix:
        return RatMatrix.from_columns(len(self.vectors), [x.coords for x in self.vectors])

    def vector(self, node: CrystalNode) -> ModuleVector:
        for candidate, x in zip(self.nodes, self.vectors):
            if candidate is node:
                return x
        raise KeyError(node.key)


class _Deferred(Exception):
    pass


def is_bar_invariant(x: ModuleVector) -> bool:
    """Coefficientwise check; the chosen basis vectors are bar-fixed."""
    return all(c == c.bar() for c in x.coords)


def congruent_to_node(crystal: Crystal, node: CrystalNode, x: ModuleVector) -> bool:
    try:
        return crystal.identify(x) is node
    except CrystalError:
        return False


def _correct(
    crystal: Crystal,
    node: CrystalNode,
    start: ModuleVector,
    done: Dict[int, ModuleVector],
    bound: int,
) -> Tuple[ModuleVector, int, int]:
    """Subtract bar-invariant multiples of finished G(b'') until only node keeps a non-positive valuation."""
    nodes = crystal.nodes_at(node.content)
    position = next(k for k, other in enumerate(nodes) if other is node)
    y = start
    steps = 0
    while True:
        coords = crystal.lattice_coordinates(y, regular=False)
        worst: Optional[Tuple[int, int]] = None
        for k, c in enumerate(coords):
            if k == position or not c:
                continue
            val = c.valuation("zero")
            if val <= 0 and (worst is None or val < worst[0]):  # type: ignore[operator]
                worst = (val, k)  # type: ignore[assignment]
        if worst is None:
            break
        val, k = worst
        if -val > bound or steps > bound * len(nodes):
            raise CanonicalBasisError("degree bound exceeded", crystal.module.weight, node.content, node.key)
        other = nodes[k]
        if other.index not in done:
            raise _Deferred()
        try:
            principal = coords[k].principal_part()
        except ValueError as e:
            raise CanonicalBasisError(str(e), crystal.module.weight, node.content, node.key) from e
        y = y - done[other.index] * symmetric_correction(principal)
        steps += 1
    c = coords[position]
    if not c.is_regular("zero") or c.residue("zero") not in (1, -1):
        raise CanonicalBasisError(
            f"corrected vector has coefficient {c} at its own node", crystal.module.weight, node.content, node.key
        )
    sign = int(c.residue("zero"))
    return y * sign, sign, steps


def canonical_basis(
    crystal: Crystal, content: Sequence[int], monomials: Optional[MonomialBasis] = None
) -> CanonicalBasis:
    """Bar-invariant G(b) congruent to b modulo v times the crystal lattice, for every node b."""
    key = crystal.module.normalize(content)
    if monomials is None:
        monomials = monomial_basis(crystal, key)
    dim = len(monomials.nodes)
    bound = 2 * dim + sum(key)
    start = {node.index: x for node, x in zip(monomials.nodes, monomials.vectors)}
    done: Dict[int, ModuleVector] = {}
    signs: Dict[int, int] = {}
    steps: Dict[int, int] = {}
    pending: Deque[CrystalNode] = deque(reversed(monomials.nodes))
    stalled = 0
    while pending:
        node = pending.popleft()
        try:
            vector, sign, count = _correct(crystal, node, start[node.index], done, bound)
        except _Deferred:
            pending.append(node)
            stalled += 1
            if stalled > len(pending):
                raise CanonicalBasisError(
                    "corrections depend on each other cyclically", crystal.module.weight, key, node.key
                ) from None
            continue
        stalled = 0
        done[node.index] = vector
        signs[node.index] = sign
        steps[node.index] = count
    ordered: List[CrystalNode] = list(monomials.nodes)
    logger.debug(f"Canonical basis at {key}: {dim} vectors, signs {[signs[n.index] for n in ordered]}")
    return CanonicalBasis(
        key,
        crystal.vertex_order,
        tuple(ordered),
        tuple(done[n.index] for n in ordered),
        tuple(signs[n.index] for n in ordered),
        tuple(steps[n.index] for n in ordered),
    )
