"""Tensor product crystals and the restriction of string data to smaller modules."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import CrystalError, WeightMismatchError
from ..exactalg import RatMatrix, solve_matrix
from ..quiver import Quiver, WeightVector
from ..repmodule import HighestWeightModule, ModuleVector, TensorModule
from ..repmodule.words import Content
from ..schemas.report import CheckEntry
from .graph import Crystal, CrystalNode, StringSequence
from .kashiwara import KashiwaraOp, kashiwara


logger = logging.getLogger(__name__)

NodePair = Tuple[CrystalNode, CrystalNode]


def tensor_crystal_op(
    op: KashiwaraOp, vertex: str, pair: NodePair, crystal2: Crystal, crystal1: Crystal
) -> Optional[NodePair]:
    """Signature rule on (b2, b1) for L(lambda2) (x) L(lambda1).

    f~ acts on b1 iff phi(b1) > eps(b2); e~ acts on b1 iff phi(b1) >= eps(b2).
    """
    b2, b1 = pair
    if op == "f":
        if b1.phi[vertex] > b2.eps[vertex]:
            target1 = crystal1.f(vertex, b1)
            return None if target1 is None else (b2, target1)
        target2 = crystal2.f(vertex, b2)
        return None if target2 is None else (target2, b1)
    if op == "e":
        if b1.phi[vertex] >= b2.eps[vertex]:
            target1 = crystal1.e(vertex, b1)
            return None if target1 is None else (b2, target1)
        target2 = crystal2.e(vertex, b2)
        return None if target2 is None else (target2, b1)
    raise ValueError(f"unknown Kashiwara operator {op!r}")


class TensorCrystal:
    """Pairs (b2, b1) with representatives rep(b2) (x) rep(b1) in the tensor module.

    Module-level operators are compared at v = infinity, where the coproduct
    D(F_i) = F_i (x) K_-i + 1 (x) F_i is compatible with the signature rule.
    """

    def __init__(self, module: TensorModule, height: int, order: Optional[Sequence[str]] = None):
        self.module = module
        self.height = height
        self.crystal2 = Crystal(module.factor2, height, order)
        self.crystal1 = Crystal(module.factor1, height, order)
        self._bases: Dict[Content, Tuple[List[NodePair], RatMatrix]] = {}

    def pairs(self, content: Optional[Sequence[int]] = None) -> List[NodePair]:
        if content is not None:
            return list(self._basis(tuple(content))[0])
        result = []
        for b2 in self.crystal2:
            for b1 in self.crystal1:
                if b2.height + b1.height <= self.height:
                    result.append((b2, b1))
        return result

    def op(self, op: KashiwaraOp, vertex: str, pair: NodePair) -> Optional[NodePair]:
        return tensor_crystal_op(op, vertex, pair, self.crystal2, self.crystal1)

    def representative(self, pair: NodePair) -> ModuleVector:
        b2, b1 = pair
        return self.module.pure(b2.vector_rep, b1.vector_rep)

    def _basis(self, content: Content) -> Tuple[List[NodePair], RatMatrix]:
        cached = self._bases.get(content)
        if cached is None:
            space = self.module.space(content)
            pairs = []
            for comp in space.components:
                for b2 in self.crystal2.nodes_at(comp.content2):
                    for b1 in self.crystal1.nodes_at(comp.content1):
                        pairs.append((b2, b1))
            matrix = RatMatrix.from_columns(space.dim, [self.representative(p).coords for p in pairs])
            cached = (pairs, matrix)
            self._bases[content] = cached
        return cached

    def identify(self, x: ModuleVector) -> Optional[NodePair]:
        """Pair congruent to x modulo v^-1 times the lattice at infinity, or None."""
        if x.space.module is not self.module:
            raise WeightMismatchError("vector belongs to a different module")
        if sum(x.space.content) > self.height:
            raise CrystalError(f"content {x.space.content} lies beyond the height bound {self.height}")
        pairs, matrix = self._basis(x.space.content)
        coords = solve_matrix(matrix, RatMatrix.from_columns(matrix.rows, [x.coords])).column(0)
        if not all(c.is_regular("infinity") for c in coords):
            raise CrystalError(f"vector at {x.space.content} does not lie in the lattice at infinity")
        residues = [c.residue("infinity") for c in coords]
        support = [k for k, r in enumerate(residues) if r]
        if not support:
            return None
        if len(support) != 1 or residues[support[0]] != 1:
            raise CrystalError(f"vector at {x.space.content} reduces to {residues}, not a crystal pair")
        return pairs[support[0]]


def _label(pair: NodePair) -> str:
    return f"{pair[0].key} (x) {pair[1].key}"


def _describe(pair: Optional[NodePair]) -> str:
    return "null" if pair is None else _label(pair)


def verify_tensor_rule(
    quiver: Quiver,
    weight1: WeightVector,
    weight2: WeightVector,
    height: int,
    order: Optional[Sequence[str]] = None,
) -> List[CheckEntry]:
    """Compare tensor_crystal_op with module-level Kashiwara operators on every pair."""
    crystal = TensorCrystal(TensorModule(quiver, weight1, weight2), height, order)
    entries: List[CheckEntry] = []
    for pair in crystal.pairs():
        content = tuple(a + b for a, b in zip(pair[0].content, pair[1].content))
        for v in quiver.vertices:
            for op in ("f", "e"):
                if op == "f" and sum(content) >= height:
                    continue
                try:
                    predicted = crystal.op(op, v, pair)  # type: ignore[arg-type]
                    image = kashiwara(op, v, crystal.representative(pair))  # type: ignore[arg-type]
                    observed = None if image is None else crystal.identify(image)
                    if predicted is None or observed is None:
                        passed = predicted is None and observed is None
                    else:
                        passed = predicted[0] is observed[0] and predicted[1] is observed[1]
                    detail = None if passed else f"rule gives {_describe(predicted)}, module gives {_describe(observed)}"
                except CrystalError as e:
                    logger.error(f"Tensor rule check on {_label(pair)} raised: {e}")
                    passed, detail = False, str(e)
                entries.append(
                    CheckEntry(
                        check=f"tensor rule {op}~ on {_label(pair)}",
                        passed=passed,
                        vertices=[v],
                        content=list(content),
                        detail=detail,
                    )
                )
    logger.info(f"Tensor rule: {sum(e.passed for e in entries)}/{len(entries)} operator applications agree")
    return entries


def crystal_restriction(
    quiver: Quiver,
    string: StringSequence,
    weight: WeightVector,
    order: Optional[Sequence[str]] = None,
    crystal: Optional[Crystal] = None,
) -> Optional[CrystalNode]:
    """Replay the f~-word of ``string`` from the highest node of B(weight); None if it dies."""
    height = sum(m for _, m in string)
    if crystal is None or crystal.height < height:
        crystal = Crystal(HighestWeightModule(quiver, weight), height, order)
    node: Optional[CrystalNode] = crystal.highest
    for vertex, mult in reversed(tuple(string)):
        for _ in range(mult):
            node = crystal.f(vertex, node)  # type: ignore[arg-type]
            if node is None:
                return None
    return node
