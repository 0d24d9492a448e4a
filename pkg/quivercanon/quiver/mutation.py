"""Orientation mutation, mutation-to-source sequences and contracting cocharacters."""

import logging
import random
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from ..errors import MutationError
from .model import Quiver, WeightVector


logger = logging.getLogger(__name__)


def mutate(quiver: Quiver, vertex: str) -> Quiver:
    """Reverse every arrow incident to a source or sink vertex."""
    if not (quiver.is_source(vertex) or quiver.is_sink(vertex)):
        raise MutationError(f"vertex {vertex!r} is neither a source nor a sink")
    arrows = tuple((t, s) if vertex in (s, t) else (s, t) for s, t in quiver.arrows)
    return Quiver(quiver.vertices, arrows)


def longest_paths_to(quiver: Quiver, vertex: str) -> Dict[str, int]:
    """Length of the longest directed path from each ancestor to ``vertex`` (0 for itself)."""
    graph = quiver.digraph()
    lengths = {vertex: 0}
    for u in reversed(list(nx.topological_sort(graph))):
        best = lengths.get(u)
        for w in graph.successors(u):
            if w in lengths:
                candidate = lengths[w] + 1
                if best is None or candidate > best:
                    best = candidate
        if best is not None:
            lengths[u] = best
    return lengths


def source_mutation_sequence(quiver: Quiver, vertex: str) -> List[str]:
    """Source mutations after which ``vertex`` is a source.

    While a path of length m > 0 ends at ``vertex``, mutate at the sources of all
    maximal-length paths in vertex order; each round lowers m by one.
    """
    quiver.index(vertex)
    sequence: List[str] = []
    current = quiver
    while True:
        lengths = longest_paths_to(current, vertex)
        longest = max(lengths.values())
        if longest == 0:
            break
        starts = [u for u in current.vertices if lengths.get(u) == longest]
        logger.debug(f"Longest path to {vertex} has length {longest}; mutating at {starts}")
        for u in starts:
            current = mutate(current, u)
            sequence.append(u)
    return sequence


def replay_mutations(quiver: Quiver, sequence: Sequence[str], sources_only: bool = True) -> Quiver:
    current = quiver
    for step, vertex in enumerate(sequence):
        if sources_only and not current.is_source(vertex):
            raise MutationError(f"step {step}: vertex {vertex!r} is not a source")
        try:
            current = mutate(current, vertex)
        except MutationError as e:
            raise MutationError(f"step {step}: {e}") from e
    return current


def contracting_cocharacter(quiver: Quiver, sequence: Sequence[str]) -> WeightVector:
    """Vertex weights c of the composed one-parameter scalings.

    Each source mutation at k scales V_k by t^-1, so c_k drops by one per step.
    """
    weights = {v: 0 for v in quiver.vertices}
    current = quiver
    for step, vertex in enumerate(sequence):
        if vertex not in weights:
            raise MutationError(f"step {step}: unknown vertex {vertex!r}")
        if not current.is_source(vertex):
            raise MutationError(f"step {step}: vertex {vertex!r} is not a source")
        current = mutate(current, vertex)
        weights[vertex] -= 1
    return WeightVector.from_mapping(quiver.vertices, weights)


def arrow_weights(quiver: Quiver, cocharacter: WeightVector) -> List[Tuple[Tuple[str, str], int]]:
    """Weight c_target - c_source of each arrow of ``quiver``."""
    return [((s, t), cocharacter[t] - cocharacter[s]) for s, t in quiver.arrows]


def reversed_arrows(original: Quiver, mutated: Quiver) -> List[Tuple[str, str]]:
    """Arrows of ``original`` whose direction differs in ``mutated`` (as multisets)."""
    remaining = list(mutated.arrows)
    flipped = []
    for arrow in original.arrows:
        if arrow in remaining:
            remaining.remove(arrow)
        else:
            flipped.append(arrow)
    return flipped


def random_acyclic_quiver(rng: random.Random, max_vertices: int, max_multiplicity: int = 2) -> Quiver:
    """Random orientation following a random topological order of 1..n."""
    n = rng.randint(1, max_vertices)
    names = [str(k) for k in range(1, n + 1)]
    topological = names[:]
    rng.shuffle(topological)
    arrows = []
    for a in range(n):
        for b in range(a + 1, n):
            for _ in range(rng.randint(0, max_multiplicity)):
                arrows.append((topological[a], topological[b]))
    return Quiver(tuple(names), tuple(arrows))
