"""Exhaustive search for canonical vectors with small bar-invariant coefficients."""

import itertools
import logging
from typing import List, Optional, Sequence, Tuple

from ..crystal import Crystal, CrystalNode
from ..exactalg import LaurentScalar, R_ZERO, RationalScalar
from ..repmodule import ModuleVector
from .monomial import MonomialBasis, monomial_basis


logger = logging.getLogger(__name__)


def symmetric_coefficients(degree: int, bound: int) -> List[LaurentScalar]:
    """All a_0 + sum_k a_k (v^k + v^-k) with 0 < k <= degree and |a_k| <= bound."""
    values = []
    for digits in itertools.product(range(-bound, bound + 1), repeat=degree + 1):
        terms = {0: digits[0]} if digits[0] else {}
        for k, a in enumerate(digits[1:], start=1):
            if a:
                terms[k] = a
                terms[-k] = a
        values.append(LaurentScalar.from_map(terms))
    return values


def _matches(coords: Sequence[RationalScalar], position: int) -> bool:
    for k, c in enumerate(coords):
        if not c.is_regular("zero"):
            return False
        if c.residue("zero") != (1 if k == position else 0):
            return False
    return True


def brute_force_canonical(
    crystal: Crystal,
    node: CrystalNode,
    degree: int = 2,
    bound: int = 1,
    monomials: Optional[MonomialBasis] = None,
) -> List[ModuleVector]:
    """Every sum of monomial vectors with coefficients from ``symmetric_coefficients``
    that reduces to ``node`` modulo v times the crystal lattice.

    Monomial vectors are bar-fixed, so these sums are exactly the bar-invariant
    candidates of bounded degree. A well-defined canonical basis gives exactly one hit.
    """
    if monomials is None:
        monomials = monomial_basis(crystal, node.content)
    nodes = crystal.nodes_at(node.content)
    position = next(k for k, other in enumerate(nodes) if other is node)
    columns: List[Tuple[RationalScalar, ...]] = [
        crystal.lattice_coordinates(m, regular=False) for m in monomials.vectors
    ]
    choices = symmetric_coefficients(degree, bound)
    hits = []
    for coefficients in itertools.product(choices, repeat=len(columns)):
        coords = [
            sum((RationalScalar(c) * column[k] for c, column in zip(coefficients, columns) if c), R_ZERO)
            for k in range(len(nodes))
        ]
        if _matches(coords, position):
            x = monomials.vectors[0] * 0
            for c, m in zip(coefficients, monomials.vectors):
                if c:
                    x = x + m * c
            hits.append(x)
    logger.debug(f"Oracle for {node.key}: {len(hits)} candidates out of {len(choices) ** len(columns)}")
    return hits
