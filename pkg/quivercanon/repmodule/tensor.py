"""Tensor products L(lambda2) (x) L(lambda1) with the action through the coproduct.

D(K_mu) = K_mu (x) K_mu, D(E_i) = E_i (x) 1 + K_i (x) E_i and
D(F_i) = F_i (x) K_-i + 1 (x) F_i.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import WeightMismatchError
from ..exactalg import R_ZERO, LaurentScalar, RationalScalar, RatMatrix
from ..quiver import Quiver, WeightVector
from .module import (
    ContentLike,
    GradedModule,
    HighestWeightModule,
    ModuleVector,
    WeightSpace,
    _compositions,
    _shift,
)
from .words import Content


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TensorComponent:
    """Block of a tensor weight space with factor contents (nu2, nu1)."""

    content2: Content
    content1: Content
    offset: int
    dim2: int
    dim1: int

    def index(self, a2: int, a1: int) -> int:
        return self.offset + a2 * self.dim1 + a1


class TensorSpace(WeightSpace):
    """Weight space of L(lambda2) (x) L(lambda1); labels are pairs of basis words."""

    def __init__(self, module: "TensorModule", content: Content, components: Sequence[TensorComponent]):
        labels = []
        grams: List[RatMatrix] = []
        for comp in components:
            s2 = module.factor2.space(comp.content2)
            s1 = module.factor1.space(comp.content1)
            labels.extend((w2, w1) for w2 in s2.labels for w1 in s1.labels)
            grams.append(_kron(s2.gram, s1.gram))
        super().__init__(module, content, labels, _block_diagonal(grams))
        self.components = tuple(components)
        self._by_contents = {(c.content2, c.content1): c for c in components}

    def component(self, content2: Content, content1: Content) -> Optional[TensorComponent]:
        return self._by_contents.get((content2, content1))


class TensorModule(GradedModule):
    """L(lambda2) (x) L(lambda1); ``factor2`` is the left tensor factor."""

    def __init__(self, quiver: Quiver, weight1: WeightVector, weight2: WeightVector):
        super().__init__(quiver)
        self.factor1 = HighestWeightModule(quiver, weight1)
        self.factor2 = HighestWeightModule(quiver, weight2)
        self._pairings = tuple(
            a + b for a, b in zip(self.factor1.weight.entries, self.factor2.weight.entries)
        )

    @property
    def highest_pairings(self) -> Content:
        return self._pairings

    def _build_space(self, content: Content) -> TensorSpace:
        components = []
        offset = 0
        if all(a >= 0 for a in content):
            for nu1 in _splits(content):
                nu2 = tuple(a - b for a, b in zip(content, nu1))
                dim2 = self.factor2.space(nu2).dim
                dim1 = self.factor1.space(nu1).dim
                if dim2 and dim1:
                    components.append(TensorComponent(nu2, nu1, offset, dim2, dim1))
                    offset += dim2 * dim1
        return TensorSpace(self, content, components)

    def space(self, content: ContentLike) -> TensorSpace:  # type: ignore[override]
        return super().space(content)  # type: ignore[return-value]

    def _build_f(self, i: int, content: Content) -> RatMatrix:
        source = self.space(content)
        target = self.space(_shift(content, i, 1))
        entries: Dict[Tuple[int, int], RationalScalar] = {}
        for comp in source.components:
            # F_i (x) K_-i
            lowered2 = target.component(_shift(comp.content2, i, 1), comp.content1)
            if lowered2 is not None:
                f2 = self.factor2.f_matrix(i, comp.content2)
                k1 = LaurentScalar.monomial(-self.factor1.weight_pairing(i, comp.content1))
                for a2 in range(comp.dim2):
                    for b2 in range(lowered2.dim2):
                        c = f2[b2, a2]
                        if c:
                            for a1 in range(comp.dim1):
                                _accumulate(entries, lowered2.index(b2, a1), comp.index(a2, a1), c * k1)
            # 1 (x) F_i
            lowered1 = target.component(comp.content2, _shift(comp.content1, i, 1))
            if lowered1 is not None:
                f1 = self.factor1.f_matrix(i, comp.content1)
                for a1 in range(comp.dim1):
                    for b1 in range(lowered1.dim1):
                        c = f1[b1, a1]
                        if c:
                            for a2 in range(comp.dim2):
                                _accumulate(entries, lowered1.index(a2, b1), comp.index(a2, a1), c)
        return _from_entries(target.dim, source.dim, entries)

    def _build_e(self, i: int, content: Content) -> RatMatrix:
        source = self.space(content)
        target = self.space(_shift(content, i, -1))
        entries: Dict[Tuple[int, int], RationalScalar] = {}
        for comp in source.components:
            # E_i (x) 1
            raised2 = target.component(_shift(comp.content2, i, -1), comp.content1)
            if raised2 is not None:
                e2 = self.factor2.e_matrix(i, comp.content2)
                for a2 in range(comp.dim2):
                    for b2 in range(raised2.dim2):
                        c = e2[b2, a2]
                        if c:
                            for a1 in range(comp.dim1):
                                _accumulate(entries, raised2.index(b2, a1), comp.index(a2, a1), c)
            # K_i (x) E_i
            raised1 = target.component(comp.content2, _shift(comp.content1, i, -1))
            if raised1 is not None:
                e1 = self.factor1.e_matrix(i, comp.content1)
                k2 = LaurentScalar.monomial(self.factor2.weight_pairing(i, comp.content2))
                for a1 in range(comp.dim1):
                    for b1 in range(raised1.dim1):
                        c = e1[b1, a1]
                        if c:
                            for a2 in range(comp.dim2):
                                _accumulate(entries, raised1.index(a2, b1), comp.index(a2, a1), c * k2)
        return _from_entries(target.dim, source.dim, entries)

    def pure(self, x2: ModuleVector, x1: ModuleVector) -> ModuleVector:
        """x2 (x) x1 for vectors of the two factors."""
        if x2.space.module is not self.factor2 or x1.space.module is not self.factor1:
            raise WeightMismatchError("pure tensor factors must come from L(lambda2) and L(lambda1)")
        content = tuple(a + b for a, b in zip(x2.space.content, x1.space.content))
        target = self.space(content)
        coords = [R_ZERO] * target.dim
        comp = target.component(x2.space.content, x1.space.content)
        if comp is not None:
            for a2, c2 in enumerate(x2.coords):
                if c2:
                    for a1, c1 in enumerate(x1.coords):
                        if c1:
                            coords[comp.index(a2, a1)] = c2 * c1
        return ModuleVector(target, tuple(coords))

    def split(self, x: ModuleVector) -> Dict[Tuple[Content, Content], RatMatrix]:
        """Coefficient matrix (rows: factor-2 basis, cols: factor-1 basis) per nonzero component."""
        space = x.space
        if not isinstance(space, TensorSpace) or space.module is not self:
            raise WeightMismatchError("vector does not belong to this tensor module")
        blocks = {}
        for comp in space.components:
            rows = [[x.coords[comp.index(a2, a1)] for a1 in range(comp.dim1)] for a2 in range(comp.dim2)]
            if any(c for row in rows for c in row):
                blocks[(comp.content2, comp.content1)] = RatMatrix.from_rows(rows)
        return blocks

    def is_pure_tensor(self, x: ModuleVector) -> bool:
        """True when x is zero or a single component of rank one."""
        blocks = self.split(x)
        if not blocks:
            return True
        if len(blocks) > 1:
            return False
        (matrix,) = blocks.values()
        rows = [row for row in matrix.entries if any(row)]
        pivot_row = rows[0]
        j = next(k for k, c in enumerate(pivot_row) if c)
        for row in rows[1:]:
            ratio = row[j] / pivot_row[j]
            if any(a != ratio * b for a, b in zip(row, pivot_row)):
                return False
        return True

    def __repr__(self) -> str:
        return f"TensorModule(weight2={self.factor2.weight}, weight1={self.factor1.weight})"


def tensor_space(quiver: Quiver, weight1: WeightVector, weight2: WeightVector, content: ContentLike) -> TensorSpace:
    return TensorModule(quiver, weight1, weight2).space(content)


def _splits(content: Content) -> List[Content]:
    """Vectors 0 <= nu1 <= content ordered by height, then lexicographically."""
    result = []
    for h in range(sum(content) + 1):
        for nu1 in _compositions(h, len(content)):
            if all(a <= b for a, b in zip(nu1, content)):
                result.append(nu1)
    return result


def _accumulate(entries: Dict[Tuple[int, int], RationalScalar], row: int, col: int, value) -> None:
    entries[(row, col)] = entries.get((row, col), R_ZERO) + value


def _from_entries(rows: int, cols: int, entries: Dict[Tuple[int, int], RationalScalar]) -> RatMatrix:
    data = [[entries.get((r, c), R_ZERO) for c in range(cols)] for r in range(rows)]
    return RatMatrix.build(rows, cols, data)


def _kron(left: RatMatrix, right: RatMatrix) -> RatMatrix:
    rows = left.rows * right.rows
    cols = left.cols * right.cols
    data = [
        [left[r // right.rows, c // right.cols] * right[r % right.rows, c % right.cols] for c in range(cols)]
        for r in range(rows)
    ]
    return RatMatrix.build(rows, cols, data)


def _block_diagonal(blocks: Sequence[RatMatrix]) -> RatMatrix:
    n = sum(b.rows for b in blocks)
    data = [[R_ZERO] * n for _ in range(n)]
    offset = 0
    for block in blocks:
        for r in range(block.rows):
            for c in range(block.cols):
                data[offset + r][offset + c] = block[r, c]
        offset += block.rows
    return RatMatrix.build(n, n, data)
