"""Weight spaces of integrable highest-weight modules and the generator action."""

import logging
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Literal, Optional, Sequence, Tuple, Union

from ..errors import ExactDivisionError, NonDominantWeightError, WeightMismatchError
from ..exactalg import (
    LaurentScalar,
    R_ONE,
    R_ZERO,
    IncrementalEchelon,
    RationalScalar,
    RatMatrix,
    quantum_factorial,
    solve_matrix,
)
from ..quiver import Quiver, WeightVector
from .words import Content, ContravariantForm, Word, commute_raising, enumerate_words


logger = logging.getLogger(__name__)

ContentLike = Union[Content, Sequence[int], WeightVector]


@dataclass(frozen=True)
class Generator:
    """E_i^(r), F_i^(r) or K_mu."""

    kind: Literal["E", "F", "K"]
    vertex: Optional[str] = None
    power: int = 1
    mu: Optional[WeightVector] = None

    @classmethod
    def E(cls, vertex: str, power: int = 1) -> "Generator":
        return cls("E", vertex, power)

    @classmethod
    def F(cls, vertex: str, power: int = 1) -> "Generator":
        return cls("F", vertex, power)

    @classmethod
    def K(cls, mu: WeightVector) -> "Generator":
        return cls("K", mu=mu)

    def content_shift(self, quiver: Quiver) -> Content:
        shift = [0] * quiver.rank
        if self.kind != "K":
            shift[quiver.index(self.vertex)] = self.power if self.kind == "F" else -self.power  # type: ignore[arg-type]
        return tuple(shift)


class WeightSpace:
    """Weight space lowered by ``content`` from the top, with a chosen basis."""

    def __init__(self, module: "GradedModule", content: Content, labels: Sequence[Any], gram: RatMatrix):
        self.module = module
        self.content = content
        self.labels = tuple(labels)
        self.gram = gram

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def height(self) -> int:
        return sum(self.content)

    def vector(self, coords: Sequence[Any]) -> "ModuleVector":
        if len(coords) != self.dim:
            raise WeightMismatchError(f"{len(coords)} coordinates for a space of dimension {self.dim}")
        return ModuleVector(self, tuple(RationalScalar.lift(c) for c in coords))

    def zero(self) -> "ModuleVector":
        return ModuleVector(self, (R_ZERO,) * self.dim)

    def basis_vector(self, k: int) -> "ModuleVector":
        return ModuleVector(self, tuple(R_ONE if j == k else R_ZERO for j in range(self.dim)))

    def basis(self) -> List["ModuleVector"]:
        return [self.basis_vector(k) for k in range(self.dim)]

    def __repr__(self) -> str:
        return f"{type(self).__name__}(content={self.content}, dim={self.dim})"


class ModuleSpace(WeightSpace):
    """Weight space of L(lambda) spanned by lowering words modulo the form radical.

    ``labels`` are the chosen basis words; ``word_coords`` expresses every word of
    the content in that basis.
    """

    def __init__(
        self,
        module: "HighestWeightModule",
        content: Content,
        words: Sequence[Word],
        full_gram: Sequence[Sequence[LaurentScalar]],
        chosen: Sequence[int],
        word_coords: Dict[Word, Tuple[RationalScalar, ...]],
    ):
        gram = RatMatrix.from_rows([[full_gram[a][b] for b in chosen] for a in chosen]) if chosen else RatMatrix.zeros(0, 0)
        super().__init__(module, content, [words[k] for k in chosen], gram)
        self.words = tuple(words)
        self.full_gram = tuple(tuple(row) for row in full_gram)
        self.chosen = tuple(chosen)
        self.word_coords = word_coords

    def coords_of_word(self, word: Word) -> Tuple[RationalScalar, ...]:
        if not self.dim:
            return ()
        try:
            return self.word_coords[word]
        except KeyError:
            raise WeightMismatchError(f"word {word} does not have content {self.content}") from None

    def word_vector(self, word: Word) -> "ModuleVector":
        return ModuleVector(self, self.coords_of_word(word))


@dataclass(frozen=True, eq=False)
class ModuleVector:
    """Element of a weight space given by coordinates over its chosen basis."""

    space: WeightSpace
    coords: Tuple[RationalScalar, ...]

    def _check(self, other: "ModuleVector") -> None:
        if other.space.module is not self.space.module or other.space.content != self.space.content:
            raise WeightMismatchError(
                f"vectors live in different spaces: {self.space.content} vs {other.space.content}"
            )

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        return ModuleVector(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        return ModuleVector(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "ModuleVector":
        return ModuleVector(self.space, tuple(-a for a in self.coords))

    def __mul__(self, scalar: Any) -> "ModuleVector":
        c = RationalScalar.lift(scalar)
        return ModuleVector(self.space, tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Any) -> "ModuleVector":
        c = RationalScalar.lift(scalar)
        return ModuleVector(self.space, tuple(a / c for a in self.coords))

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for a in self.coords)

    def bar(self) -> "ModuleVector":
        """Coefficientwise bar; the chosen basis vectors are bar-fixed products of words."""
        return ModuleVector(self.space, tuple(a.bar() for a in self.coords))

    def pair(self, other: "ModuleVector") -> RationalScalar:
        """Contravariant pairing through the Gram matrix of the chosen basis."""
        self._check(other)
        return sum(
            (a * g for a, g in zip(self.coords, self.space.gram.apply(other.coords)) if a), R_ZERO
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return (
            other.space.module is self.space.module
            and other.space.content == self.space.content
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.space.content, self.coords))

    def __str__(self) -> str:
        terms = [f"({c})*{label}" for c, label in zip(self.coords, self.space.labels) if c]
        return " + ".join(terms) if terms else "0"


class GradedModule(ABC):
    """Module graded by lowering content, with cached generator matrices."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.cartan = quiver.cartan_matrix
        self.rank = quiver.rank
        self._spaces: Dict[Content, WeightSpace] = {}
        self._matrices: Dict[Tuple[str, int, Content], RatMatrix] = {}
        self._lock = threading.RLock()

    # Subclass hooks

    @abstractmethod
    def _build_space(self, content: Content) -> WeightSpace:
        ...

    @abstractmethod
    def _build_f(self, i: int, content: Content) -> RatMatrix:
        ...

    @abstractmethod
    def _build_e(self, i: int, content: Content) -> RatMatrix:
        ...

    @property
    @abstractmethod
    def highest_pairings(self) -> Content:
        """<i, lambda> for every vertex i."""

    # Spaces

    def normalize(self, content: ContentLike) -> Content:
        if isinstance(content, WeightVector):
            content = content.extend(self.quiver.vertices).entries
        content = tuple(int(a) for a in content)
        if len(content) != self.rank:
            raise WeightMismatchError(f"content {content} has {len(content)} entries, quiver has {self.rank} vertices")
        return content

    def space(self, content: ContentLike) -> WeightSpace:
        key = self.normalize(content)
        cached = self._spaces.get(key)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._spaces.get(key)
            if cached is None:
                cached = self._build_space(key)
                self._spaces[key] = cached
                logger.debug(f"{type(self).__name__}: space {key} has dimension {cached.dim}")
        return cached

    def highest_vector(self) -> ModuleVector:
        return self.space((0,) * self.rank).basis_vector(0)

    def weight_pairing(self, i: int, content: ContentLike) -> int:
        nu = self.normalize(content)
        return self.highest_pairings[i] - sum(self.cartan[i][j] * nu[j] for j in range(self.rank))

    def weight_of(self, content: ContentLike) -> WeightVector:
        return WeightVector(self.quiver.vertices, tuple(self.weight_pairing(i, content) for i in range(self.rank)))

    def contents_up_to(self, height: int) -> Iterator[Content]:
        """All nonnegative contents of height <= ``height`` with a nonzero space, by height then lex."""
        for h in range(height + 1):
            for content in _compositions(h, self.rank):
                if self.space(content).dim:
                    yield content

    # Matrices

    def _cached(self, kind: str, i: int, content: Content) -> RatMatrix:
        key = (kind, i, content)
        cached = self._matrices.get(key)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._matrices.get(key)
            if cached is None:
                cached = self._build_f(i, content) if kind == "F" else self._build_e(i, content)
                self._matrices[key] = cached
        return cached

    def f_matrix(self, i: int, content: ContentLike) -> RatMatrix:
        return self._cached("F", i, self.normalize(content))

    def e_matrix(self, i: int, content: ContentLike) -> RatMatrix:
        return self._cached("E", i, self.normalize(content))

    def k_eigenvalue(self, mu: Sequence[int], content: ContentLike) -> LaurentScalar:
        exponent = sum(m * self.weight_pairing(j, content) for j, m in enumerate(mu))
        return LaurentScalar.monomial(exponent)

    def generator_matrix(self, g: Generator, content: ContentLike) -> RatMatrix:
        """Matrix of ``g`` from space(content) to the space it lands in."""
        nu = self.normalize(content)
        source = self.space(nu)
        if g.kind == "K":
            mu = g.mu.extend(self.quiver.vertices).entries  # type: ignore[union-attr]
            return RatMatrix.identity(source.dim).scale(self.k_eigenvalue(mu, nu))
        if g.power < 0:
            raise ValueError(f"negative divided power {g.power}")
        i = self.quiver.index(g.vertex)  # type: ignore[arg-type]
        step = 1 if g.kind == "F" else -1
        product = RatMatrix.identity(source.dim)
        current = nu
        for _ in range(g.power):
            single = self.f_matrix(i, current) if g.kind == "F" else self.e_matrix(i, current)
            product = single @ product
            current = _shift(current, i, step)
        if g.power <= 1:
            return product
        factorial = quantum_factorial(g.power)
        divided = product.scale(RationalScalar(LaurentScalar.constant(1), factorial))
        if divided.scale(factorial) != product:
            raise ExactDivisionError(f"divided power {g.kind}_{g.vertex}^({g.power}) failed on {nu}")
        return divided

    def operator_matrix(self, g: Generator, source: WeightSpace, target: WeightSpace) -> RatMatrix:
        if source.module is not self or target.module is not self:
            raise WeightMismatchError("spaces belong to a different module")
        expected = tuple(a + b for a, b in zip(source.content, g.content_shift(self.quiver)))
        if target.content != expected:
            raise WeightMismatchError(f"{g.kind} maps content {source.content} to {expected}, not {target.content}")
        return self.generator_matrix(g, source.content)

    def apply(self, g: Generator, x: ModuleVector) -> ModuleVector:
        if x.space.module is not self:
            raise WeightMismatchError("vector belongs to a different module")
        matrix = self.generator_matrix(g, x.space.content)
        target = self.space(tuple(a + b for a, b in zip(x.space.content, g.content_shift(self.quiver))))
        return ModuleVector(target, matrix.apply(x.coords))


def apply_generator(g: Generator, x: ModuleVector) -> ModuleVector:
    return x.space.module.apply(g, x)


def operator_matrix(g: Generator, source: WeightSpace, target: WeightSpace) -> RatMatrix:
    return source.module.operator_matrix(g, source, target)


class HighestWeightModule(GradedModule):
    """Integrable irreducible module L(lambda) realized on lowering words."""

    def __init__(self, quiver: Quiver, weight: WeightVector):
        super().__init__(quiver)
        self.weight = weight.extend(quiver.vertices)
        negative = [v for v, a in zip(self.weight.vertices, self.weight.entries) if a < 0]
        if negative:
            raise NonDominantWeightError(f"weight {self.weight} is not dominant at {negative}")
        self.form = ContravariantForm(self.cartan, self.weight.entries)

    @property
    def highest_pairings(self) -> Content:
        return self.weight.entries

    def _empty(self, content: Content) -> ModuleSpace:
        return ModuleSpace(self, content, (), (), (), {})

    def _build_space(self, content: Content) -> ModuleSpace:
        if any(a < 0 for a in content):
            return self._empty(content)
        if not any(content):
            return ModuleSpace(self, content, [()], [[LaurentScalar.constant(1)]], [0], {(): (R_ONE,)})
        lower_dims = [self.space(_shift(content, i, -1)).dim for i in range(self.rank) if content[i]]
        if not any(lower_dims):
            return self._empty(content)
        words = enumerate_words(content)
        gram = [[self.form.pair(x, y) for y in words] for x in words]
        echelon = IncrementalEchelon(len(words))
        chosen = [k for k, row in enumerate(gram) if echelon.add(row)]
        if not chosen:
            return self._empty(content)
        g_bb = RatMatrix.from_rows([[gram[a][b] for b in chosen] for a in chosen])
        g_bw = RatMatrix.from_rows([[gram[a][b] for b in range(len(words))] for a in chosen])
        coords = solve_matrix(g_bb, g_bw)
        word_coords = {w: coords.column(k) for k, w in enumerate(words)}
        logger.debug(f"L{self.weight}: {len(words)} words of content {content}, rank {len(chosen)}")
        return ModuleSpace(self, content, words, gram, chosen, word_coords)

    def space(self, content: ContentLike) -> ModuleSpace:  # type: ignore[override]
        return super().space(content)  # type: ignore[return-value]

    def _build_f(self, i: int, content: Content) -> RatMatrix:
        source = self.space(content)
        target = self.space(_shift(content, i, 1))
        columns = [target.coords_of_word((i,) + word) for word in source.labels]
        return RatMatrix.from_columns(target.dim, columns)

    def _build_e(self, i: int, content: Content) -> RatMatrix:
        source = self.space(content)
        target = self.space(_shift(content, i, -1))
        columns = []
        for word in source.labels:
            column = [R_ZERO] * target.dim
            if target.dim:
                for shorter, coefficient in commute_raising(self.cartan, self.weight.entries, i, word).items():
                    for k, c in enumerate(target.coords_of_word(shorter)):
                        if c:
                            column[k] = column[k] + coefficient * c
            columns.append(column)
        return RatMatrix.from_columns(target.dim, columns)

    def word_vector(self, word: Word) -> ModuleVector:
        content = tuple(word.count(k) for k in range(self.rank))
        return self.space(content).word_vector(word)

    def __repr__(self) -> str:
        return f"HighestWeightModule(weight={self.weight})"


def weight_space(quiver: Quiver, weight: WeightVector, content: ContentLike) -> ModuleSpace:
    """Weight space L(lambda)_{lambda - nu} of a fresh module."""
    return HighestWeightModule(quiver, weight).space(content)


def _shift(content: Content, i: int, step: int) -> Content:
    shifted = list(content)
    shifted[i] += step
    return tuple(shifted)


def _compositions(total: int, parts: int) -> Iterator[Content]:
    """Nonnegative integer vectors of length ``parts`` summing to ``total``, in lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
