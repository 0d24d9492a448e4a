"""Lowering words, the E-through-F commutation rule and the contravariant form."""

import threading
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..exactalg import ONE, ZERO, LaurentScalar, quantum_integer
from ..quiver import Quiver, WeightVector


# Letters are vertex positions; the leftmost letter is applied last.
Word = Tuple[int, ...]
Content = Tuple[int, ...]


@dataclass(frozen=True)
class LoweringWord:
    """Word F_{j1} ... F_{jk} in named vertices, together with its content."""

    letters: Tuple[str, ...]
    content: WeightVector

    @classmethod
    def of(cls, quiver: Quiver, letters: Sequence[str]) -> "LoweringWord":
        counts = {v: 0 for v in quiver.vertices}
        for letter in letters:
            quiver.index(letter)
            counts[letter] += 1
        return cls(tuple(letters), WeightVector.from_mapping(quiver.vertices, counts))

    @classmethod
    def from_indices(cls, quiver: Quiver, word: Word) -> "LoweringWord":
        return cls.of(quiver, [quiver.vertices[k] for k in word])

    def indices(self, quiver: Quiver) -> Word:
        return tuple(quiver.index(letter) for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


def word_content(word: Word, rank: int) -> Content:
    counts = [0] * rank
    for letter in word:
        counts[letter] += 1
    return tuple(counts)


def enumerate_words(content: Content) -> List[Word]:
    """All words with the given letter multiset, in lexicographic order."""
    words: List[Word] = []
    remaining = list(content)
    total = sum(content)
    prefix: List[int] = []

    def extend() -> None:
        if len(prefix) == total:
            words.append(tuple(prefix))
            return
        for letter, count in enumerate(remaining):
            if count:
                remaining[letter] -= 1
                prefix.append(letter)
                extend()
                prefix.pop()
                remaining[letter] += 1

    extend()
    return words


def commute_raising(
    cartan: Sequence[Sequence[int]], highest: Content, i: int, word: Word
) -> Dict[Word, LaurentScalar]:
    """E_i (F_word v_lambda) as a combination of shorter words applied to v_lambda.

    Removing the letter at position m contributes [<i, lambda - content(word[m+1:])>].
    """
    result: Dict[Word, LaurentScalar] = {}
    suffix = [0] * len(highest)
    for m in range(len(word) - 1, -1, -1):
        letter = word[m]
        if letter == i:
            pairing = highest[i] - sum(cartan[i][j] * suffix[j] for j in range(len(highest)))
            coefficient = quantum_integer(pairing)
            if coefficient:
                shorter = word[:m] + word[m + 1:]
                total = result.get(shorter, ZERO) + coefficient
                if total:
                    result[shorter] = total
                else:
                    result.pop(shorter, None)
        suffix[letter] += 1
    return result


class ContravariantForm:
    """Symmetric form on M(lambda) with <F_i x, y> = <x, E_i y> and <v, v> = 1."""

    def __init__(self, cartan: Sequence[Sequence[int]], highest: Content):
        self.cartan = cartan
        self.highest = highest
        self._memo: Dict[Tuple[Word, Word], LaurentScalar] = {}
        self._lock = threading.Lock()

    def pair(self, x: Word, y: Word) -> LaurentScalar:
        if len(x) != len(y):
            return ZERO
        if not x:
            return ONE
        key = (x, y)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if sorted(x) != sorted(y):
            value = ZERO
        else:
            value = ZERO
            for shorter, coefficient in commute_raising(self.cartan, self.highest, x[0], y).items():
                inner = self.pair(x[1:], shorter)
                if inner:
                    value = value + coefficient * inner
        with self._lock:
            self._memo[key] = value
        return value


def lower_raise_commute(
    quiver: Quiver, vertex: str, word: LoweringWord, weight: WeightVector
) -> Dict[LoweringWord, LaurentScalar]:
    """Expansion of E_vertex (F_word v_lambda) over shorter lowering words."""
    highest = weight.extend(quiver.vertices).entries
    expansion = commute_raising(quiver.cartan_matrix, highest, quiver.index(vertex), word.indices(quiver))
    return {LoweringWord.from_indices(quiver, w): c for w, c in expansion.items()}


def contravariant_pair(quiver: Quiver, x: LoweringWord, y: LoweringWord, weight: WeightVector) -> LaurentScalar:
    highest = weight.extend(quiver.vertices).entries
    form = ContravariantForm(quiver.cartan_matrix, highest)
    return form.pair(x.indices(quiver), y.indices(quiver))
