"""i-string decomposition and the Kashiwara operators on module vectors."""

import logging
from typing import List, Literal, Optional, Tuple

from ..errors import CrystalError
from ..exactalg import quantum_binomial
from ..repmodule import Generator, GradedModule, ModuleVector
from ..repmodule.module import _shift


logger = logging.getLogger(__name__)

KashiwaraOp = Literal["e", "f"]


def string_depth(x: ModuleVector, vertex: str) -> int:
    """Largest n with E_vertex^n x != 0 (0 for the zero vector)."""
    module: GradedModule = x.space.module
    depth = 0
    current = x
    while True:
        current = module.apply(Generator.E(vertex), current)
        if current.is_zero:
            return depth
        depth += 1


def i_string_decompose(x: ModuleVector, vertex: str) -> List[Tuple[int, ModuleVector]]:
    """Pairs (n, u_n) with x = sum F^(n) u_n and E u_n = 0, sorted by n.

    The top component is peeled off first: for u primitive with <i, wt u> = p,
    E^(N) F^(N) u = [p choose N] u.
    """
    module: GradedModule = x.space.module
    i = module.quiver.index(vertex)
    parts: List[Tuple[int, ModuleVector]] = []
    remainder = x
    while not remainder.is_zero:
        top = string_depth(remainder, vertex)
        raised = module.apply(Generator.E(vertex, top), remainder)
        pairing = module.weight_pairing(i, raised.space.content)
        if pairing < top:
            raise CrystalError(
                f"primitive component at {raised.space.content} has <{vertex}, wt> = {pairing} < {top}"
            )
        u = raised / quantum_binomial(pairing, top)
        parts.append((top, u))
        remainder = remainder - module.apply(Generator.F(vertex, top), u)
    parts.sort(key=lambda part: part[0])
    return parts


def kashiwara(op: KashiwaraOp, vertex: str, x: ModuleVector) -> Optional[ModuleVector]:
    """f~ x = sum F^(n+1) u_n and e~ x = sum F^(n-1) u_n; None when the result is zero."""
    if op not in ("e", "f"):
        raise ValueError(f"unknown Kashiwara operator {op!r}")
    module: GradedModule = x.space.module
    i = module.quiver.index(vertex)
    step = 1 if op == "f" else -1
    result = module.space(_shift(x.space.content, i, step)).zero()
    for n, u in i_string_decompose(x, vertex):
        if n + step < 0:
            continue
        image = module.apply(Generator.F(vertex, n + step), u)
        if not image.is_zero:
            result = result + image
    return None if result.is_zero else result
