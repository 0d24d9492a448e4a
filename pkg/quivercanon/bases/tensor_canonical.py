"""Canonical basis of L(lambda2) (x) L(lambda1) from the quasi-R matrix.

psi = bar o Theta on tensor coordinates. In the product frame P of pure tensors
G(b2) (x) G(b1) this reads psi(P y) = P T ybar with T = P^-1 Thetabar P, and T only
moves weight towards larger factor-2 content. The vector attached to (b2, b1) is the
unique psi-invariant vector p + sum x_l p_l with every x_l in vZ[v] (v^-1 Z[v^-1]
at infinity), solved component by component in increasing factor-2 height.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..crystal import Crystal, CrystalNode
from ..errors import CanonicalBasisError
from ..exactalg import (
    R_ONE,
    R_ZERO,
    LaurentScalar,
    RationalScalar,
    RatMatrix,
    solve_matrix,
)
from ..exactalg.ratfunc import LimitPoint
from ..quiver import Quiver, WeightVector
from ..repmodule import ModuleVector, QuasiRSolver, TensorModule
from ..repmodule.words import Content
from .canonical import CanonicalBasis, canonical_basis


logger = logging.getLogger(__name__)

Pair = Tuple[CrystalNode, CrystalNode]
ProductFrame = Tuple[Tuple[Pair, ...], Tuple[Content, ...], RatMatrix]


def _dominates(upper: Content, lower: Content) -> bool:
    return upper != lower and all(a >= b for a, b in zip(upper, lower))


def _height(content: Content) -> int:
    return sum(content)


def _one_sided(r: LaurentScalar, limit: LimitPoint) -> LaurentScalar:
    """The half of an antisymmetric r lying in vZ[v] (or v^-1 Z[v^-1])."""
    keep = (lambda e: e > 0) if limit == "zero" else (lambda e: e < 0)
    return LaurentScalar.from_map({e: c for e, c in r.as_dict().items() if keep(e)})


@dataclass(frozen=True)
class TensorCanonicalBasis:
    """b2 <> b1 for every pair of one tensor weight space, in tensor coordinate order.

    Column k of ``coefficients`` writes the vector of ``pairs[k]`` in the product
    frame ``product``; ``twist`` is T, the matrix of psi on that frame.
    """

    content: Content
    limit: LimitPoint
    pairs: Tuple[Pair, ...]
    heights: Tuple[Content, ...]
    product: RatMatrix
    twist: RatMatrix
    coefficients: RatMatrix
    vectors: Tuple[ModuleVector, ...]

    @property
    def keys(self) -> List[str]:
        return [f"{b2.key}(x){b1.key}" for b2, b1 in self.pairs]

    def matrix(self) -> RatMatrix:
        return self.product @ self.coefficients

    @property
    def is_psi_invariant(self) -> bool:
        return self.twist @ self.coefficients.bar() == self.coefficients

    def violations(self) -> List[Tuple[int, int]]:
        """(row, column) entries breaking unitriangularity against the product frame."""
        bad = []
        n = len(self.pairs)
        for r in range(n):
            for c in range(n):
                x = self.coefficients[r, c]
                if r == c:
                    if x != R_ONE:
                        bad.append((r, c))
                    continue
                if not x:
                    continue
                if not x.is_laurent or not _dominates(self.heights[r], self.heights[c]):
                    bad.append((r, c))
                    continue
                poly = x.as_laurent()
                if self.limit == "zero" and poly.min_exponent <= 0:
                    bad.append((r, c))
                elif self.limit == "infinity" and poly.max_exponent >= 0:
                    bad.append((r, c))
        return bad

    @property
    def is_unitriangular(self) -> bool:
        return not self.violations()


class TensorCanonicalBuilder:
    """Tensor canonical bases of one tensor module, cached by content."""

    def __init__(
        self,
        module: TensorModule,
        height: int,
        order: Optional[Sequence[str]] = None,
        limit: LimitPoint = "zero",
        crystals: Optional[Tuple[Crystal, Crystal]] = None,
        solver: Optional[QuasiRSolver] = None,
    ):
        self.module = module
        self.limit = limit
        self.crystals = crystals or (
            Crystal(module.factor2, height, order),
            Crystal(module.factor1, height, order),
        )
        self.solver = solver or QuasiRSolver(module, "lower_first")
        self._factors: Dict[Tuple[int, Content], CanonicalBasis] = {}
        self._products: Dict[Content, ProductFrame] = {}
        self._bases: Dict[Content, TensorCanonicalBasis] = {}

    def factor(self, which: int, content: Content) -> CanonicalBasis:
        """G(b) of the left (0) or right (1) factor."""
        key = (which, content)
        if key not in self._factors:
            self._factors[key] = canonical_basis(self.crystals[which], content)
        return self._factors[key]

    def product(self, content: Sequence[int]) -> ProductFrame:
        """Pairs, factor-2 contents and the frame of pure tensors G(b2) (x) G(b1)."""
        key = self.module.normalize(content)
        if key in self._products:
            return self._products[key]
        space = self.module.space(key)
        pairs: List[Pair] = []
        heights: List[Content] = []
        columns = []
        for comp in space.components:
            left = self.factor(0, comp.content2)
            right = self.factor(1, comp.content1)
            for b2, g2 in zip(left.nodes, left.vectors):
                for b1, g1 in zip(right.nodes, right.vectors):
                    pairs.append((b2, b1))
                    heights.append(comp.content2)
                    columns.append(self.module.pure(g2, g1).coords)
        frame = RatMatrix.from_columns(space.dim, columns)
        result = (tuple(pairs), tuple(heights), frame)
        self._products[key] = result
        return result

    def basis(self, content: Sequence[int]) -> TensorCanonicalBasis:
        key = self.module.normalize(content)
        if key in self._bases:
            return self._bases[key]
        pairs, heights, product = self.product(key)
        space = self.module.space(key)
        if not space.dim:
            empty = RatMatrix.zeros(0, 0)
            return TensorCanonicalBasis(
                key, self.limit, (), (), empty, empty, empty, ()
            )
        theta = self.solver.block(key)
        twist = solve_matrix(product, theta.bar() @ product)
        coefficients = self._solve(key, pairs, heights, twist)
        matrix = product @ coefficients
        vectors = tuple(ModuleVector(space, matrix.column(k)) for k in range(space.dim))
        basis = TensorCanonicalBasis(
            key, self.limit, pairs, heights, product, twist, coefficients, vectors
        )
        if not basis.is_psi_invariant:
            raise CanonicalBasisError(
                "tensor vectors are not psi-invariant",
                self.module.highest_pairings,
                key,
            )
        logger.debug(f"Tensor canonical basis at {key}: {space.dim} vectors")
        self._bases[key] = basis
        return basis

    def _solve(
        self,
        key: Content,
        pairs: Sequence[Pair],
        heights: Sequence[Content],
        twist: RatMatrix,
    ) -> RatMatrix:
        n = len(pairs)
        by_height = sorted(range(n), key=lambda row: _height(heights[row]))
        columns = []
        for col in range(n):
            x = [R_ZERO] * n
            x[col] = R_ONE
            for row in by_height:
                if _height(heights[row]) <= _height(heights[col]):
                    continue
                r = R_ZERO
                for m in range(n):
                    if x[m] and _height(heights[m]) < _height(heights[row]):
                        r = r + twist[row, m] * x[m].bar()
                if not r:
                    continue
                if not r.is_laurent or r.bar() != -r:
                    b2, b1 = pairs[col]
                    raise CanonicalBasisError(
                        f"psi-correction {r} is not antisymmetric in ZZ[v, v^-1]",
                        self.module.highest_pairings,
                        key,
                        f"{b2.key}(x){b1.key}",
                    )
                x[row] = RationalScalar.lift(_one_sided(r.as_laurent(), self.limit))
            columns.append(x)
        return RatMatrix.from_columns(n, columns)


def tensor_canonical_basis(
    quiver: Quiver,
    weight1: WeightVector,
    weight2: WeightVector,
    content: Sequence[int],
    order: Optional[Sequence[str]] = None,
    limit: LimitPoint = "zero",
) -> TensorCanonicalBasis:
    """b2 <> b1 on one weight space of L(weight2) (x) L(weight1)."""
    module = TensorModule(quiver, weight1, weight2)
    key = module.normalize(content)
    return TensorCanonicalBuilder(module, sum(key), order, limit).basis(key)
