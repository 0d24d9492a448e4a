"""Exact matrices over QQ(v) and fraction-free elimination."""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, Rational

from .laurent import ONE, ZERO, LaurentScalar, laurent_gcd
from .ratfunc import R_ONE, R_ZERO, LimitPoint, RationalScalar, Scalar, common_denominator


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatMatrix:
    """Dense ``rows x cols`` matrix of RationalScalar entries."""

    rows: int
    cols: int
    entries: Tuple[Tuple[RationalScalar, ...], ...]

    @classmethod
    def build(cls, rows: int, cols: int, data: Iterable[Iterable[Scalar]]) -> "RatMatrix":
        entries = tuple(tuple(RationalScalar.lift(x) for x in row) for row in data)
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ValueError(f"matrix data does not match shape {rows}x{cols}")
        return cls(rows, cols, entries)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[Scalar]]) -> "RatMatrix":
        cols = len(data[0]) if data else 0
        return cls.build(len(data), cols, data)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Sequence[Scalar]]) -> "RatMatrix":
        data = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls.build(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, tuple((R_ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(
            n, n, tuple(tuple(R_ONE if i == j else R_ZERO for j in range(n)) for i in range(n))
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> RationalScalar:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> Tuple[RationalScalar, ...]:
        return tuple(row[j] for row in self.entries)

    def apply(self, vector: Sequence[RationalScalar]) -> Tuple[RationalScalar, ...]:
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.rows}x{self.cols} matrix")
        out = []
        for row in self.entries:
            acc = R_ZERO
            for a, x in zip(row, vector):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        data = []
        for row in self.entries:
            out_row = []
            for j in range(other.cols):
                acc = R_ZERO
                for k, a in enumerate(row):
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                out_row.append(acc)
            data.append(tuple(out_row))
        return RatMatrix(self.rows, other.cols, tuple(data))

    def _combine(self, other: "RatMatrix", sign: int) -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        data = tuple(
            tuple(a + b if sign > 0 else a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)
        )
        return RatMatrix(self.rows, self.cols, data)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self._combine(other, -1)

    def scale(self, factor: Scalar) -> "RatMatrix":
        c = RationalScalar.lift(factor)
        return RatMatrix(self.rows, self.cols, tuple(tuple(c * a for a in row) for row in self.entries))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols, self.rows, tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        )

    def bar(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(tuple(a.bar() for a in row) for row in self.entries))

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for row in self.entries for a in row)

    @property
    def is_laurent(self) -> bool:
        return all(a.is_laurent for row in self.entries for a in row)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == RatMatrix.identity(self.rows)

    def specialize(self, point: int) -> ImmutableMatrix:
        """Entrywise evaluation at v = point as a sympy matrix."""
        values = []
        for row in self.entries:
            for a in row:
                f = a.specialize(point)
                values.append(Rational(f.numerator, f.denominator))
        return ImmutableMatrix(self.rows, self.cols, values)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(a) for a in row) for row in self.entries) + "]"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact linear solve; ``solution`` is None when inconsistent."""

    consistent: bool
    rank: int
    pivot_columns: Tuple[int, ...]
    solution: Optional[Tuple[RationalScalar, ...]]

    @property
    def unique(self) -> bool:
        return self.consistent and self.solution is not None and self.rank == len(self.solution)


def _clear_row(row: Sequence[RationalScalar]) -> List[LaurentScalar]:
    den = common_denominator(row)
    return [(x * den).as_laurent() for x in row]


def _bareiss(matrix: List[List[LaurentScalar]], pivot_cols: int) -> List[int]:
    """Fraction-free elimination in place; returns pivot columns in row order.

    Pivots are the first nonzero entry of each column scanning rows top down,
    and only the first ``pivot_cols`` columns are eligible.
    """
    n = len(matrix)
    width = len(matrix[0]) if n else 0
    prev = ONE
    r = 0
    pivots: List[int] = []
    for c in range(pivot_cols):
        if r == n:
            break
        p = next((i for i in range(r, n) if matrix[i][c]), None)
        if p is None:
            continue
        if p != r:
            matrix[r], matrix[p] = matrix[p], matrix[r]
        piv = matrix[r][c]
        for i in range(r + 1, n):
            lead = matrix[i][c]
            row = matrix[i]
            for j in range(c + 1, width):
                value = piv * row[j]
                if lead and matrix[r][j]:
                    value = value - lead * matrix[r][j]
                row[j] = value if prev == ONE else value.exact_divide(prev)
            row[c] = ZERO
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def _eliminate(system: RatMatrix, rhs_columns: Sequence[Sequence[Scalar]]):
    augmented = []
    for i, row in enumerate(system.entries):
        extra = [RationalScalar.lift(col[i]) for col in rhs_columns]
        augmented.append(_clear_row(list(row) + extra))
    pivots = _bareiss(augmented, system.cols)
    return augmented, pivots


def _back_substitute(
    echelon: List[List[LaurentScalar]], pivots: List[int], ncols: int, t: int
) -> Optional[Tuple[RationalScalar, ...]]:
    rank = len(pivots)
    for row in echelon[rank:]:
        if row[ncols + t]:
            return None
    x = [R_ZERO] * ncols
    for idx in reversed(range(rank)):
        c = pivots[idx]
        row = echelon[idx]
        acc = RationalScalar(row[ncols + t])
        for j in range(c + 1, ncols):
            if row[j] and x[j]:
                acc = acc - RationalScalar(row[j]) * x[j]
        x[c] = acc / RationalScalar(row[c])
    return tuple(x)


def ratfun_solve(system: RatMatrix, rhs: Sequence[Scalar]) -> SolveResult:
    """Solve ``system * x = rhs`` exactly; free variables are set to zero."""
    if len(rhs) != system.rows:
        raise ValueError(f"rhs length {len(rhs)} does not match {system.rows} rows")
    echelon, pivots = _eliminate(system, [rhs])
    solution = _back_substitute(echelon, pivots, system.cols, 0)
    if solution is None:
        logger.debug(f"Inconsistent {system.rows}x{system.cols} system (rank {len(pivots)})")
    return SolveResult(solution is not None, len(pivots), tuple(pivots), solution)


def solve_columns(system: RatMatrix, rhs: RatMatrix) -> List[SolveResult]:
    """Solve against every column of ``rhs`` with one elimination."""
    if rhs.rows != system.rows:
        raise ValueError(f"rhs has {rhs.rows} rows, system has {system.rows}")
    columns = [rhs.column(j) for j in range(rhs.cols)]
    echelon, pivots = _eliminate(system, columns)
    results = []
    for t in range(rhs.cols):
        solution = _back_substitute(echelon, pivots, system.cols, t)
        results.append(SolveResult(solution is not None, len(pivots), tuple(pivots), solution))
    return results


def solve_matrix(system: RatMatrix, rhs: RatMatrix) -> RatMatrix:
    """Unique X with ``system @ X = rhs``; raises ValueError otherwise."""
    results = solve_columns(system, rhs)
    for t, result in enumerate(results):
        if not result.unique:
            raise ValueError(
                f"no unique solution for column {t} (rank {result.rank} of {system.cols})"
            )
    return RatMatrix.from_columns(system.cols, [r.solution for r in results])  # type: ignore[misc]


def matrix_rank(system: RatMatrix) -> int:
    rows = [_clear_row(row) for row in system.entries]
    return len(_bareiss(rows, system.cols))


def inverse(system: RatMatrix) -> RatMatrix:
    if system.rows != system.cols:
        raise ValueError(f"cannot invert a {system.rows}x{system.cols} matrix")
    return solve_matrix(system, RatMatrix.identity(system.rows))


def primitive_row(row: Sequence[LaurentScalar]) -> List[LaurentScalar]:
    """Divide a row by the gcd of its entries and by the lowest common v-power."""
    nonzero = [x for x in row if x]
    if not nonzero:
        return list(row)
    low = min(x.min_exponent for x in nonzero)
    g = laurent_gcd(nonzero).shift(low)
    if g == ONE:
        return list(row)
    return [x.exact_divide(g) if x else x for x in row]


class IncrementalEchelon:
    """Row echelon basis over ZZ[v, v^-1] grown one row at a time."""

    def __init__(self, width: int):
        self.width = width
        self.rows: List[List[LaurentScalar]] = []
        self.pivots: List[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence[Scalar]) -> List[LaurentScalar]:
        current = _clear_row([RationalScalar.lift(x) for x in row])
        for pivot, basis_row in zip(self.pivots, self.rows):
            lead = current[pivot]
            if not lead:
                continue
            p = basis_row[pivot]
            current = primitive_row([p * x - lead * y for x, y in zip(current, basis_row)])
        return current

    def add(self, row: Sequence[Scalar]) -> bool:
        """Insert ``row`` if it is independent of the rows kept so far."""
        if len(row) != self.width:
            raise ValueError(f"row of length {len(row)} for echelon of width {self.width}")
        reduced = self.reduce(row)
        pivot = next((j for j, x in enumerate(reduced) if x), None)
        if pivot is None:
            return False
        self.rows.append(primitive_row(reduced))
        self.pivots.append(pivot)
        return True


def lattice_basis(vectors: Sequence[Sequence[Scalar]], at: LimitPoint = "zero") -> List[Tuple[RationalScalar, ...]]:
    """Basis of the lattice the vectors span over functions regular at ``at``.

    Each step pivots on a nonzero entry of least valuation, so every elimination
    multiplier is regular there and the span is preserved.
    """
    pending = [[RationalScalar.lift(x) for x in vector] for vector in vectors]
    pending = [vector for vector in pending if any(vector)]
    basis: List[Tuple[RationalScalar, ...]] = []
    while pending:
        best: Optional[Tuple[int, int, int]] = None
        for k, vector in enumerate(pending):
            for j, x in enumerate(vector):
                if x:
                    val = x.valuation(at)
                    if best is None or val < best[0]:  # type: ignore[operator]
                        best = (val, k, j)  # type: ignore[assignment]
        _, k, j = best  # type: ignore[misc]
        pivot_vector = pending.pop(k)
        pivot = pivot_vector[j]
        reduced = []
        for vector in pending:
            if vector[j]:
                factor = vector[j] / pivot
                vector = [a - factor * b for a, b in zip(vector, pivot_vector)]
            if any(vector):
                reduced.append(vector)
        pending = reduced
        basis.append(tuple(pivot_vector))
    return basis
