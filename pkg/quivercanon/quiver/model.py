"""Quivers, framed quivers and integer weight vectors."""

import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import yaml
from pydantic import ValidationError

from ..errors import (
    NonDominantWeightError,
    QuiverFormatError,
    QuiverValidationError,
    WeightMismatchError,
)
from ..schemas.quiver import QuiverDocument


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightVector:
    """Integer vector indexed by named vertices."""

    vertices: Tuple[str, ...]
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.entries):
            raise WeightMismatchError(
                f"{len(self.entries)} entries for {len(self.vertices)} vertices"
            )

    @classmethod
    def zero(cls, vertices: Sequence[str]) -> "WeightVector":
        return cls(tuple(vertices), (0,) * len(vertices))

    @classmethod
    def unit(cls, vertices: Sequence[str], vertex: str, scale: int = 1) -> "WeightVector":
        if vertex not in vertices:
            raise WeightMismatchError(f"unknown vertex {vertex!r}")
        return cls(tuple(vertices), tuple(scale if v == vertex else 0 for v in vertices))

    @classmethod
    def from_mapping(cls, vertices: Sequence[str], values: Mapping[str, int]) -> "WeightVector":
        unknown = set(values) - set(vertices)
        if unknown:
            raise WeightMismatchError(f"unknown vertices {sorted(unknown)}")
        return cls(tuple(vertices), tuple(int(values.get(v, 0)) for v in vertices))

    def __getitem__(self, vertex: str) -> int:
        try:
            return self.entries[self.vertices.index(vertex)]
        except ValueError:
            raise WeightMismatchError(f"vertex {vertex!r} not in {self.vertices}") from None

    def _check_same(self, other: "WeightVector") -> None:
        if self.vertices != other.vertices:
            raise WeightMismatchError(f"index mismatch: {self.vertices} vs {other.vertices}")

    def __add__(self, other: "WeightVector") -> "WeightVector":
        self._check_same(other)
        return WeightVector(self.vertices, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        self._check_same(other)
        return WeightVector(self.vertices, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "WeightVector":
        return WeightVector(self.vertices, tuple(-a for a in self.entries))

    def __mul__(self, k: int) -> "WeightVector":
        return WeightVector(self.vertices, tuple(k * a for a in self.entries))

    __rmul__ = __mul__

    @property
    def height(self) -> int:
        return sum(self.entries)

    @property
    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.entries)

    def extend(self, vertices: Sequence[str]) -> "WeightVector":
        """Re-index over ``vertices``; missing entries become 0."""
        unknown = [v for v in self.vertices if v not in vertices]
        if unknown:
            raise WeightMismatchError(f"vertices {unknown} are not in {tuple(vertices)}")
        values = dict(zip(self.vertices, self.entries))
        return WeightVector(tuple(vertices), tuple(values.get(v, 0) for v in vertices))

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(self.vertices, self.entries))

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.entries) + ")"


@dataclass(frozen=True)
class Quiver:
    """Loop-free acyclic quiver with a total vertex order.

    ``vertices`` lists the vertex names in the order used for all string data.
    ``arrows`` are stored sorted by the positions of their endpoints so that equal
    orientations compare equal.
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str], ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverValidationError(f"duplicate vertex names in {self.vertices}")
        position = {v: k for k, v in enumerate(self.vertices)}
        for source, target in self.arrows:
            for end in (source, target):
                if end not in position:
                    raise QuiverValidationError(f"arrow {source}->{target} uses unknown vertex {end!r}")
            if source == target:
                raise QuiverValidationError(f"loop at vertex {source!r}")
        ordered = tuple(sorted(self.arrows, key=lambda a: (position[a[0]], position[a[1]])))
        object.__setattr__(self, "arrows", ordered)
        graph = self.digraph()
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            return
        names = " -> ".join(edge[0] for edge in cycle) + f" -> {cycle[0][0]}"
        raise QuiverValidationError(f"directed cycle {names}")

    def digraph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arrows)
        return graph

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def index(self, vertex: str) -> int:
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise WeightMismatchError(f"unknown vertex {vertex!r}") from None

    def arrow_count(self, source: str, target: str) -> int:
        return sum(1 for a in self.arrows if a == (source, target))

    @cached_property
    def adjacency_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """A_Omega with entry (i, j) the number of arrows i -> j."""
        return tuple(tuple(self.arrow_count(i, j) for j in self.vertices) for i in self.vertices)

    @cached_property
    def cartan_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        a = self.adjacency_matrix
        n = self.rank
        return tuple(
            tuple(2 if i == j else -(a[i][j] + a[j][i]) for j in range(n)) for i in range(n)
        )

    def is_source(self, vertex: str) -> bool:
        self.index(vertex)
        return all(target != vertex for _, target in self.arrows)

    def is_sink(self, vertex: str) -> bool:
        self.index(vertex)
        return all(source != vertex for source, _ in self.arrows)

    def sources(self) -> List[str]:
        return [v for v in self.vertices if self.is_source(v)]

    def sinks(self) -> List[str]:
        return [v for v in self.vertices if self.is_sink(v)]

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple((t, s) for s, t in self.arrows))

    def with_order(self, order: Sequence[str]) -> "Quiver":
        if sorted(order) != sorted(self.vertices):
            raise QuiverValidationError(f"vertex order {list(order)} is not a permutation of {list(self.vertices)}")
        return Quiver(tuple(order), self.arrows)

    def weight(self, values: Union[Sequence[int], Mapping[str, int]]) -> WeightVector:
        """WeightVector over the base vertices from a list or a mapping."""
        if isinstance(values, Mapping):
            return WeightVector.from_mapping(self.vertices, values)
        return WeightVector(self.vertices, tuple(int(a) for a in values))

    def cartan_pairing(self, vertex: str, weight: WeightVector, content: Optional[WeightVector] = None) -> int:
        """<i, lambda - sum_j nu_j alpha_j>, with lambda given by its pairings."""
        i = self.index(vertex)
        value = weight.extend(self.vertices).entries[i]
        if content is not None:
            nu = content.extend(self.vertices).entries
            value -= sum(self.cartan_matrix[i][j] * nu[j] for j in range(self.rank))
        return value

    def euler_form(self, left: WeightVector, right: WeightVector) -> int:
        a = left.extend(self.vertices).as_dict()
        b = right.extend(self.vertices).as_dict()
        value = sum(a[v] * b[v] for v in self.vertices)
        value -= sum(a[s] * b[t] for s, t in self.arrows)
        return value


def framed_vertex(vertex: str, level: int) -> str:
    return f"{vertex}^{level}"


@dataclass(frozen=True)
class FramedQuiver:
    """Quiver with one or two framing copies of its vertex set.

    ``omega1``/``omega2`` are framing dimensions indexed by base vertices; the
    framed arrows run i -> i^1 (and i -> i^2).
    """

    base: Quiver
    omega1: WeightVector
    omega2: Optional[WeightVector] = None

    def __post_init__(self) -> None:
        for omega in (self.omega1, self.omega2):
            if omega is None:
                continue
            if omega.vertices != self.base.vertices:
                raise WeightMismatchError(f"framing indexed by {omega.vertices}, expected {self.base.vertices}")
            if not omega.is_nonnegative:
                raise QuiverValidationError(f"negative framing dimension in {omega}")
        copies = {framed_vertex(v, k) for v in self.base.vertices for k in (1, 2)}
        clash = copies & set(self.base.vertices)
        if clash:
            raise QuiverValidationError(f"framed vertex names {sorted(clash)} collide with base vertices")

    @property
    def level(self) -> int:
        return 1 if self.omega2 is None else 2

    @property
    def total_framing(self) -> WeightVector:
        return self.omega1 if self.omega2 is None else self.omega1 + self.omega2

    @cached_property
    def quiver(self) -> Quiver:
        """The framed quiver Q^(1) or Q^(2) as a plain Quiver."""
        vertices = list(self.base.vertices)
        arrows = list(self.base.arrows)
        for level in range(1, self.level + 1):
            for v in self.base.vertices:
                vertices.append(framed_vertex(v, level))
                arrows.append((v, framed_vertex(v, level)))
        return Quiver(tuple(vertices), tuple(arrows))

    def degree(self, content: WeightVector) -> WeightVector:
        """nu + omega placed on the framed quiver's vertex set."""
        values = content.extend(self.base.vertices).as_dict()
        for level, omega in ((1, self.omega1), (2, self.omega2)):
            if omega is None:
                continue
            for v in self.base.vertices:
                values[framed_vertex(v, level)] = omega[v]
        return WeightVector.from_mapping(self.quiver.vertices, values)

    def euler_form(self, left: WeightVector, right: WeightVector) -> int:
        return self.quiver.euler_form(left, right)


def euler_form(quiver: Union[Quiver, FramedQuiver], left: WeightVector, right: WeightVector) -> int:
    """<nu', nu''> = sum_i nu'_i nu''_i - sum over arrows nu'_source nu''_target."""
    return quiver.euler_form(left, right)


def framing_from_weight(quiver: Quiver, weight: WeightVector, level: int = 1) -> WeightVector:
    """Framing omega over I^level with omega_{i^level} = <i, lambda>."""
    values = weight.extend(quiver.vertices)
    negative = [v for v, a in zip(values.vertices, values.entries) if a < 0]
    if negative:
        raise NonDominantWeightError(f"weight {values} pairs negatively with vertices {negative}")
    return WeightVector(tuple(framed_vertex(v, level) for v in quiver.vertices), values.entries)


def build_quiver(data: Union[QuiverDocument, Mapping]) -> Quiver:
    """Validated Quiver from a document or a plain mapping."""
    if not isinstance(data, QuiverDocument):
        try:
            data = QuiverDocument.model_validate(data)
        except ValidationError as e:
            raise QuiverFormatError(f"Malformed quiver description: {e}") from e
    quiver = Quiver(tuple(data.vertices), tuple(tuple(edge) for edge in data.edges))  # type: ignore[misc]
    logger.debug(f"Built quiver with {quiver.rank} vertices and {len(quiver.arrows)} arrows")
    return quiver


def load_quiver_document(path: Path) -> QuiverDocument:
    """Read a quiver file; YAML syntax, so JSON documents are accepted too."""
    if not path.exists():
        raise QuiverFormatError(f"Quiver file not found: {path}")
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise QuiverFormatError(f"Cannot read quiver file {path}: {e}") from e
    if not isinstance(data, dict):
        raise QuiverFormatError(f"Quiver file {path} does not contain a mapping")
    try:
        return QuiverDocument.model_validate(data)
    except ValidationError as e:
        raise QuiverFormatError(f"Malformed quiver file {path}: {e}") from e


def load_quiver(path: Path) -> Tuple[Quiver, Optional[WeightVector], Optional[WeightVector]]:
    """Quiver plus the optional framings declared in the file."""
    document = load_quiver_document(path)
    quiver = build_quiver(document)
    framings = []
    for framing in (document.framing1, document.framing2):
        if framing is None:
            framings.append(None)
            continue
        omega = WeightVector.from_mapping(quiver.vertices, framing)
        if not omega.is_nonnegative:
            raise QuiverFormatError(f"negative framing dimension in {path}")
        framings.append(omega)
    logger.info(f"Loaded quiver from {path}: vertices={list(quiver.vertices)}")
    return quiver, framings[0], framings[1]


def content_vector(quiver: Quiver, entries: Iterable[int]) -> WeightVector:
    return WeightVector(quiver.vertices, tuple(entries))
