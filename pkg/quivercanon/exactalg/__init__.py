"""Exact scalar arithmetic over ZZ[v, v^-1] and QQ(v)."""

from .laurent import (
    ONE,
    V,
    ZERO,
    LaurentScalar,
    bar_involution,
    specialize,
    symmetric_correction,
)
from .linalg import (
    IncrementalEchelon,
    RatMatrix,
    SolveResult,
    inverse,
    lattice_basis,
    matrix_rank,
    ratfun_solve,
    solve_columns,
    solve_matrix,
)
from .quantum import (
    quantum_binomial,
    quantum_combinatorics,
    quantum_factorial,
    quantum_integer,
)
from .ratfunc import R_ONE, R_ZERO, RationalScalar

__all__ = [
    "ONE",
    "V",
    "ZERO",
    "R_ONE",
    "R_ZERO",
    "LaurentScalar",
    "RationalScalar",
    "RatMatrix",
    "SolveResult",
    "IncrementalEchelon",
    "bar_involution",
    "specialize",
    "symmetric_correction",
    "quantum_integer",
    "quantum_factorial",
    "quantum_binomial",
    "quantum_combinatorics",
    "ratfun_solve",
    "solve_columns",
    "solve_matrix",
    "matrix_rank",
    "inverse",
    "lattice_basis",
]
