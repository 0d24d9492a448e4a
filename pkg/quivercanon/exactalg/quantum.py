"""Quantum integers, factorials and binomials."""

from functools import lru_cache
from typing import Literal, Optional

from .laurent import ONE, LaurentScalar


QuantumKind = Literal["integer", "factorial", "binomial"]


@lru_cache(maxsize=None)
def quantum_integer(n: int) -> LaurentScalar:
    """[n] = (v^n - v^-n)/(v - v^-1); defined for every integer with [-n] = -[n]."""
    size = abs(n)
    sign = 1 if n >= 0 else -1
    return LaurentScalar.from_map({size - 1 - 2 * k: sign for k in range(size)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentScalar:
    if n < 0:
        raise ValueError(f"quantum factorial needs n >= 0, got {n}")
    result = ONE
    for s in range(1, n + 1):
        result = result * quantum_integer(s)
    return result


@lru_cache(maxsize=None)
def quantum_binomial(n: int, k: int) -> LaurentScalar:
    if n < 0:
        raise ValueError(f"quantum binomial needs n >= 0, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"quantum binomial needs 0 <= k <= n, got ({n}, {k})")
    denominator = quantum_factorial(k) * quantum_factorial(n - k)
    return quantum_factorial(n).exact_divide(denominator)


def quantum_combinatorics(kind: QuantumKind, n: int, k: Optional[int] = None) -> LaurentScalar:
    if n < 0:
        raise ValueError(f"negative argument n={n}")
    if kind == "integer":
        return quantum_integer(n)
    if kind == "factorial":
        return quantum_factorial(n)
    if kind == "binomial":
        if k is None:
            raise ValueError("binomial needs k")
        return quantum_binomial(n, k)
    raise ValueError(f"unknown quantum kind: {kind}")
