"""Quivers, framings, Euler forms, sign twists and orientation mutation."""

from .model import (
    FramedQuiver,
    Quiver,
    WeightVector,
    build_quiver,
    euler_form,
    framed_vertex,
    framing_from_weight,
    load_quiver,
)
from .mutation import (
    contracting_cocharacter,
    mutate,
    random_acyclic_quiver,
    replay_mutations,
    source_mutation_sequence,
)
from .signs import SignKind, sign_twists

__all__ = [
    "FramedQuiver",
    "Quiver",
    "WeightVector",
    "SignKind",
    "build_quiver",
    "euler_form",
    "framed_vertex",
    "framing_from_weight",
    "load_quiver",
    "mutate",
    "source_mutation_sequence",
    "replay_mutations",
    "contracting_cocharacter",
    "random_acyclic_quiver",
    "sign_twists",
]
