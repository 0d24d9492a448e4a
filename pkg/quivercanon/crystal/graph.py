"""Enumeration of the crystal B(lambda) from the v = 0 lattice of L(lambda)."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..errors import CrystalError, WeightMismatchError
from ..exactalg import RationalScalar, RatMatrix, lattice_basis, solve_matrix
from ..quiver import Quiver, WeightVector
from ..repmodule import HighestWeightModule, ModuleVector
from ..repmodule.module import _compositions, _shift
from ..repmodule.words import Content
from .kashiwara import kashiwara


logger = logging.getLogger(__name__)

StringSequence = Tuple[Tuple[str, int], ...]


def format_string(string: StringSequence) -> str:
    return "(" + ",".join(f"{vertex}^{mult}" for vertex, mult in string) + ")"


@dataclass(eq=False)
class CrystalNode:
    """Element of B(lambda) with its lattice representative and string data.

    ``f_edges``/``e_edges`` map a vertex to the index of the image node, or to
    None when the operator gives null; a vertex is absent from ``f_edges`` when
    the image would lie beyond the height bound.
    """

    index: int
    content: Content
    weight: WeightVector
    vector_rep: ModuleVector
    string: StringSequence = ()
    eps: Dict[str, int] = field(default_factory=dict)
    phi: Dict[str, int] = field(default_factory=dict)
    f_edges: Dict[str, Optional[int]] = field(default_factory=dict)
    e_edges: Dict[str, Optional[int]] = field(default_factory=dict)

    @property
    def key(self) -> str:
        return format_string(self.string)

    @property
    def defining_word(self) -> StringSequence:
        """The f~ word (outermost pair first) that reaches this node from the top."""
        return self.string

    @property
    def height(self) -> int:
        return sum(self.content)

    def __repr__(self) -> str:
        return f"CrystalNode({self.key}, content={self.content})"


class Crystal:
    """Node store for B(lambda) up to a height bound, frozen once enumerated."""

    def __init__(self, module: HighestWeightModule, height: int, order: Optional[Sequence[str]] = None):
        if height < 0:
            raise ValueError(f"height bound must be >= 0, got {height}")
        self.module = module
        self.quiver: Quiver = module.quiver
        self.height = height
        self.order: Tuple[str, ...] = tuple(order) if order is not None else self.quiver.vertices
        if sorted(self.order) != sorted(self.quiver.vertices):
            raise WeightMismatchError(f"vertex order {list(self.order)} is not a permutation of {list(self.quiver.vertices)}")
        self.rank_of = {v: k for k, v in enumerate(self.order)}
        self.nodes: List[CrystalNode] = []
        self._by_content: Dict[Content, List[int]] = {}
        self._by_string: Dict[StringSequence, int] = {}
        self._rep_matrices: Dict[Content, RatMatrix] = {}
        self._enumerate()

    # Enumeration

    def _add(self, content: Content, rep: ModuleVector) -> CrystalNode:
        node = CrystalNode(len(self.nodes), content, self.module.weight_of(content), rep)
        self.nodes.append(node)
        self._by_content.setdefault(content, []).append(node.index)
        return node

    def _enumerate(self) -> None:
        module = self.module
        rank = self.quiver.rank
        self._add((0,) * rank, module.highest_vector())
        for h in range(1, self.height + 1):
            for content in _compositions(h, rank):
                self._enumerate_content(content)
        for node in self.nodes:
            for v in self.quiver.vertices:
                node.e_edges.setdefault(v, None)
        self._compute_strings()
        self._replay_representatives()
        logger.info(f"Crystal of {module!r}: {len(self.nodes)} nodes up to height {self.height}")

    def _enumerate_content(self, content: Content) -> None:
        space = self.module.space(content)
        candidates: List[Tuple[int, str, ModuleVector]] = []
        for i, v in enumerate(self.quiver.vertices):
            if not content[i]:
                continue
            for idx in self._by_content.get(_shift(content, i, -1), []):
                image = kashiwara("f", v, self.nodes[idx].vector_rep) if space.dim else None
                if image is None:
                    self.nodes[idx].f_edges[v] = None
                else:
                    candidates.append((idx, v, image))
        if not space.dim:
            return
        if not candidates:
            raise CrystalError(f"weight space {content} of dimension {space.dim} is not reached by any f~")
        basis = lattice_basis([image.coords for _, _, image in candidates])
        if len(basis) != space.dim:
            raise CrystalError(f"lattice at {content} has rank {len(basis)}, weight space has dimension {space.dim}")
        coords = solve_matrix(
            RatMatrix.from_columns(space.dim, basis),
            RatMatrix.from_columns(space.dim, [image.coords for _, _, image in candidates]),
        )
        seen: Dict[Tuple[Fraction, ...], int] = {}
        for k, (idx, v, image) in enumerate(candidates):
            residues = tuple(c.residue("zero") for c in coords.column(k))
            if not any(residues):
                self.nodes[idx].f_edges[v] = None
                continue
            target = seen.get(residues)
            if target is None:
                target = self._add(content, image).index
                seen[residues] = target
            previous = self.nodes[target].e_edges.get(v)
            if previous is not None and previous != idx:
                raise CrystalError(f"two nodes map to the same node under f~_{v} at {content}")
            self.nodes[idx].f_edges[v] = target
            self.nodes[target].e_edges[v] = idx
        if len(seen) != space.dim:
            raise CrystalError(f"{len(seen)} crystal nodes at {content}, weight space has dimension {space.dim}")
        logger.debug(f"Content {content}: {len(candidates)} f~ images, {len(seen)} nodes")

    def _compute_strings(self) -> None:
        for node in self.nodes:
            for i, v in enumerate(self.quiver.vertices):
                depth, current = 0, node
                while current.e_edges[v] is not None:
                    current = self.nodes[current.e_edges[v]]  # type: ignore[index]
                    depth += 1
                node.eps[v] = depth
                node.phi[v] = depth + self.module.weight_pairing(i, node.content)
        for node in self.nodes:
            if node.height == 0:
                node.string = ()
            else:
                v = next(u for u in self.order if node.eps[u] > 0)
                a = node.eps[v]
                raised = node
                for _ in range(a):
                    raised = self.nodes[raised.e_edges[v]]  # type: ignore[index]
                node.string = ((v, a),) + raised.string
            if node.string in self._by_string:
                raise CrystalError(f"string {format_string(node.string)} labels two nodes")
            self._by_string[node.string] = node.index

    def _replay_representatives(self) -> None:
        """Replace each representative by the f~-word replay of its string."""
        replayed: Dict[int, ModuleVector] = {}
        for node in self.nodes:
            if node.height == 0:
                replayed[node.index] = node.vector_rep
                continue
            (v, a), rest = node.string[0], node.string[1:]
            x: Optional[ModuleVector] = replayed[self._by_string[rest]]
            for _ in range(a):
                x = kashiwara("f", v, x)  # type: ignore[arg-type]
                if x is None:
                    raise CrystalError(f"replaying {node.key} gives null")
            replayed[node.index] = x  # type: ignore[assignment]
        for content in self._by_content:
            indices = self._by_content[content]
            dim = len(indices)
            provisional = RatMatrix.from_columns(dim, [self.nodes[k].vector_rep.coords for k in indices])
            coords = solve_matrix(provisional, RatMatrix.from_columns(dim, [replayed[k].coords for k in indices]))
            for col in range(dim):
                for row in range(dim):
                    c = coords[row, col]
                    expected = 1 if row == col else 0
                    if not c.is_regular("zero") or c.residue("zero") != expected:
                        raise CrystalError(f"replayed representative of {self.nodes[indices[col]].key} leaves its node")
        for node in self.nodes:
            node.vector_rep = replayed[node.index]

    # Queries

    @property
    def highest(self) -> CrystalNode:
        return self.nodes[0]

    @property
    def vertex_order(self) -> Tuple[str, ...]:
        return self.order

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[CrystalNode]:
        return iter(self.nodes)

    def contents(self) -> List[Content]:
        return list(self._by_content)

    def nodes_at(self, content: Sequence[int]) -> List[CrystalNode]:
        return [self.nodes[k] for k in self._by_content.get(tuple(content), [])]

    def find(self, string: Sequence[Tuple[str, int]]) -> Optional[CrystalNode]:
        index = self._by_string.get(tuple((v, int(a)) for v, a in string))
        return None if index is None else self.nodes[index]

    def _step(self, edges: Dict[str, Optional[int]], vertex: str, node: CrystalNode, name: str) -> Optional[CrystalNode]:
        self.quiver.index(vertex)
        if vertex not in edges:
            raise CrystalError(f"{name}_{vertex} of {node.key} lies beyond the height bound {self.height}")
        target = edges[vertex]
        return None if target is None else self.nodes[target]

    def f(self, vertex: str, node: CrystalNode) -> Optional[CrystalNode]:
        return self._step(node.f_edges, vertex, node, "f~")

    def e(self, vertex: str, node: CrystalNode) -> Optional[CrystalNode]:
        return self._step(node.e_edges, vertex, node, "e~")

    def edges(self) -> List[Tuple[CrystalNode, CrystalNode, str]]:
        return [
            (node, self.nodes[target], v)
            for node in self.nodes
            for v in self.quiver.vertices
            if (target := node.f_edges.get(v)) is not None
        ]

    # Lattice

    def representative_matrix(self, content: Sequence[int]) -> RatMatrix:
        key = tuple(content)
        cached = self._rep_matrices.get(key)
        if cached is None:
            dim = self.module.space(key).dim
            cached = RatMatrix.from_columns(dim, [node.vector_rep.coords for node in self.nodes_at(key)])
            self._rep_matrices[key] = cached
        return cached

    def lattice_coordinates(self, x: ModuleVector, regular: bool = True) -> Tuple[RationalScalar, ...]:
        """Coordinates of x over the node representatives of its weight space."""
        if x.space.module is not self.module:
            raise WeightMismatchError("vector belongs to a different module")
        content = x.space.content
        if sum(content) > self.height:
            raise CrystalError(f"content {content} lies beyond the height bound {self.height}")
        matrix = self.representative_matrix(content)
        coords = solve_matrix(matrix, RatMatrix.from_columns(matrix.rows, [x.coords])).column(0)
        if regular and not all(c.is_regular("zero") for c in coords):
            raise CrystalError(f"vector at {content} does not lie in the crystal lattice")
        return coords

    def identify(self, x: ModuleVector) -> Optional[CrystalNode]:
        """Node congruent to x modulo v times the lattice, or None when x lies there."""
        coords = self.lattice_coordinates(x)
        residues = [c.residue("zero") for c in coords]
        support = [k for k, r in enumerate(residues) if r]
        if not support:
            return None
        if len(support) != 1 or residues[support[0]] != 1:
            raise CrystalError(f"vector at {x.space.content} reduces to {residues}, not a crystal element")
        return self.nodes_at(x.space.content)[support[0]]


def enumerate_crystal(
    quiver: Quiver, weight: WeightVector, height: int, order: Optional[Sequence[str]] = None
) -> Crystal:
    """Closure of the highest node under all f~_i up to ``height``."""
    return Crystal(HighestWeightModule(quiver, weight), height, order)


def string_sequence(node: CrystalNode) -> StringSequence:
    return node.string
