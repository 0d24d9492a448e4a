"""Exception types raised by the quivercanon engine."""

from typing import Any, Optional


class QuiverValidationError(ValueError):
    """Quiver data violates a structural rule (loop, cycle, unknown vertex)."""


class QuiverFormatError(ValueError):
    """A quiver file could not be read or parsed."""


class MutationError(ValueError):
    """Mutation requested at a vertex that is neither a source nor a sink."""


class WeightMismatchError(ValueError):
    """Weight vectors or weight spaces are incompatible with the requested operation."""


class NonDominantWeightError(ValueError):
    """A weight with a negative Cartan pairing was used where a dominant one is required."""


class ExactDivisionError(RuntimeError):
    """An exact division in ZZ[v, v^-1] left a remainder."""


class CrystalError(RuntimeError):
    """Crystal data is inconsistent with the module it was computed from."""


class MonomialBasisError(RuntimeError):
    """Monomial vectors of a weight space are linearly dependent."""


class TransitionError(RuntimeError):
    """A change-of-basis matrix could not be formed."""


class QuasiRError(RuntimeError):
    """The quasi-R intertwining equations have no unique solution on a block."""

    def __init__(self, message: str, block: Optional[Any] = None):
        super().__init__(message)
        self.block = block


class CanonicalBasisError(RuntimeError):
    """The canonical basis correction loop failed for one node."""

    def __init__(self, message: str, weight: Any = None, content: Any = None, node: Any = None):
        super().__init__(f"{message} (lambda={weight}, nu={content}, node={node})")
        self.weight = weight
        self.content = content
        self.node = node
