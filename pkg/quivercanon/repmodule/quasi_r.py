"""Block-by-block solve for the quasi-R-matrix on a tensor product."""

import logging
from typing import Dict, List, Literal, Optional, Tuple

from ..errors import QuasiRError
from ..exactalg import R_ONE, R_ZERO, RationalScalar, RatMatrix, ratfun_solve
from ..quiver import Quiver, WeightVector
from .module import ContentLike, _shift
from .tensor import TensorComponent, TensorModule, TensorSpace
from .words import Content


logger = logging.getLogger(__name__)

Direction = Literal["lower_first", "raise_first"]


class QuasiRSolver:
    """Theta with Theta_0 = Id solving Theta D(u) = Dbar(u) Theta for u = E_i, F_i.

    ``lower_first`` lets Theta_nu map component (nu2, nu1) to (nu2 + nu, nu1 - nu);
    ``raise_first`` uses (nu2 - nu, nu1 + nu).
    """

    def __init__(self, module: TensorModule, direction: Direction = "lower_first"):
        self.module = module
        self.direction = direction
        self._blocks: Dict[Content, RatMatrix] = {}

    def _allowed(self, row: TensorComponent, col: TensorComponent) -> bool:
        delta = [a - b for a, b in zip(row.content2, col.content2)]
        if self.direction == "raise_first":
            delta = [-d for d in delta]
        return all(d >= 0 for d in delta) and any(delta)

    def block(self, content: ContentLike) -> RatMatrix:
        key = self.module.normalize(content)
        if key in self._blocks:
            return self._blocks[key]
        space = self.module.space(key)
        for i in range(self.module.rank):
            if key[i] > 0:
                self.block(_shift(key, i, -1))
        matrix = self._solve(space)
        self._blocks[key] = matrix
        return matrix

    def _solve(self, space: TensorSpace) -> RatMatrix:
        key = space.content
        dim = space.dim
        fixed: Dict[Tuple[int, int], RationalScalar] = {(r, r): R_ONE for r in range(dim)}
        unknowns: List[Tuple[int, int]] = []
        for row_comp in space.components:
            for col_comp in space.components:
                if self._allowed(row_comp, col_comp):
                    for r in range(row_comp.offset, row_comp.offset + row_comp.dim2 * row_comp.dim1):
                        for c in range(col_comp.offset, col_comp.offset + col_comp.dim2 * col_comp.dim1):
                            unknowns.append((r, c))
        index = {pos: k for k, pos in enumerate(unknowns)}
        equations: List[List[RationalScalar]] = []
        constants: List[RationalScalar] = []

        def emit(coefficients: Dict[int, RationalScalar], constant: RationalScalar) -> None:
            row = [R_ZERO] * len(unknowns)
            for k, c in coefficients.items():
                row[k] = c
            equations.append(row)
            constants.append(constant)

        for i in range(self.module.rank):
            if key[i] > 0:
                lower = _shift(key, i, -1)
                # Theta_key D(F_i) = Dbar(F_i) Theta_lower on space(lower)
                f = self.module.f_matrix(i, lower)
                rhs = f.bar() @ self.block(lower)
                for r in range(dim):
                    for c in range(f.cols):
                        coefficients: Dict[int, RationalScalar] = {}
                        constant = rhs[r, c]
                        for k in range(dim):
                            a = f[k, c]
                            if not a:
                                continue
                            if (r, k) in fixed:
                                constant = constant - fixed[(r, k)] * a
                            elif (r, k) in index:
                                u = index[(r, k)]
                                coefficients[u] = coefficients.get(u, R_ZERO) + a
                        emit(coefficients, constant)
                # Dbar(E_i) Theta_key = Theta_lower D(E_i) on space(key)
                e = self.module.e_matrix(i, key)
                e_bar = e.bar()
                rhs = self.block(lower) @ e
                for r in range(e.rows):
                    for c in range(dim):
                        coefficients = {}
                        constant = rhs[r, c]
                        for k in range(dim):
                            d = e_bar[r, k]
                            if not d:
                                continue
                            if (k, c) in fixed:
                                constant = constant - d * fixed[(k, c)]
                            elif (k, c) in index:
                                u = index[(k, c)]
                                coefficients[u] = coefficients.get(u, R_ZERO) + d
                        emit(coefficients, constant)
        values: Dict[Tuple[int, int], RationalScalar] = dict(fixed)
        if unknowns:
            system = RatMatrix.build(len(equations), len(unknowns), equations) if equations else RatMatrix.zeros(0, len(unknowns))
            result = ratfun_solve(system, constants)
            if not result.consistent:
                raise QuasiRError(f"intertwining equations are inconsistent on block {key} ({self.direction})", key)
            if not result.unique:
                raise QuasiRError(
                    f"intertwining equations leave {len(unknowns) - result.rank} free parameters on block {key}", key
                )
            for pos, value in zip(unknowns, result.solution):  # type: ignore[arg-type]
                values[pos] = value
        else:
            for c in constants:
                if c:
                    raise QuasiRError(f"identity block {key} violates the intertwining equations", key)
        logger.debug(f"Quasi-R block {key}: {len(unknowns)} unknowns, {len(equations)} equations")
        data = [[values.get((r, c), R_ZERO) for c in range(dim)] for r in range(dim)]
        return RatMatrix.build(dim, dim, data)


def quasi_r_action(
    quiver: Quiver,
    weight1: WeightVector,
    weight2: WeightVector,
    content: ContentLike,
    direction: Direction = "lower_first",
    module: Optional[TensorModule] = None,
) -> RatMatrix:
    """Theta on the weight block ``content`` of L(weight2) (x) L(weight1)."""
    module = module or TensorModule(quiver, weight1, weight2)
    return QuasiRSolver(module, direction).block(content)
