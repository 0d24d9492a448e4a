"""Parity signs attached to generator actions on framed quivers."""

from enum import Enum
from typing import Union

from .model import FramedQuiver, WeightVector


class SignKind(str, Enum):
    PSI_MINUS = "psi_minus"
    PSI_PLUS = "psi_plus"
    NAKAJIMA_F = "nakajima_f"
    NAKAJIMA_E = "nakajima_e"


def sign_exponent(
    framed: FramedQuiver, vertex: str, r: int, content: WeightVector, kind: Union[SignKind, str]
) -> int:
    """Integer exponent e with sign_twists = (-1)^e."""
    kind = SignKind(kind)
    base = framed.base
    nu = content.extend(base.vertices)
    if not nu.is_nonnegative:
        raise ValueError(f"dimension vector {nu} has negative entries")
    if kind is SignKind.PSI_MINUS:
        unit = WeightVector.unit(framed.quiver.vertices, vertex, r)
        return framed.euler_form(unit, framed.degree(nu))
    if kind is SignKind.PSI_PLUS:
        unit = WeightVector.unit(framed.quiver.vertices, vertex, r)
        return framed.quiver.opposite().euler_form(unit, framed.degree(nu))
    i = base.index(vertex)
    adjacency = base.adjacency_matrix
    n = base.rank
    if kind is SignKind.NAKAJIMA_F:
        c_omega_nu = nu.entries[i] - sum(adjacency[i][j] * nu.entries[j] for j in range(n))
        return r * (framed.total_framing[vertex] - c_omega_nu)
    c_opposite_nu = nu.entries[i] - sum(adjacency[j][i] * nu.entries[j] for j in range(n))
    return r * c_opposite_nu


def sign_twists(
    framed: FramedQuiver, vertex: str, r: int, content: WeightVector, kind: Union[SignKind, str]
) -> int:
    """+1 or -1 for the psi-twists and the Nakajima sign twists.

    psi_minus is (-1)^<r i, nu + omega> on the framed quiver and psi_plus the same
    on its opposite; nakajima_f is (-1)^(r <i, omega - C_Omega nu>) and nakajima_e
    is (-1)^(r <i, C_Omegabar nu>), with C_Omega = Id - A_Omega.
    """
    return -1 if sign_exponent(framed, vertex, r, content, kind) % 2 else 1
