"""Lowering words acting on (F_word v_lambda2) (x) v_lambda1 through the coproduct."""

import logging
from typing import List, Optional

from ..quiver import Quiver, WeightVector
from ..repmodule import Generator, LoweringWord, ModuleVector, TensorModule, enumerate_words
from ..repmodule.module import _compositions
from ..schemas.report import CheckEntry


logger = logging.getLogger(__name__)


def tensor_monomial_shadow(
    quiver: Quiver,
    word1: LoweringWord,
    word2: LoweringWord,
    weight1: WeightVector,
    weight2: WeightVector,
    module: Optional[TensorModule] = None,
) -> ModuleVector:
    """D(F_word1) applied to (F_word2 v_lambda2) (x) v_lambda1; letters act rightmost first."""
    module = module or TensorModule(quiver, weight1, weight2)
    x2 = module.factor2.word_vector(word2.indices(quiver))
    x = module.pure(x2, module.factor1.highest_vector())
    for letter in reversed(word1.letters):
        x = module.apply(Generator.F(letter), x)
    return x


def is_highest_pure_tensor(module: TensorModule, x: ModuleVector) -> bool:
    """x is zero or a pure tensor whose second factor lies in the top weight space of L(lambda1)."""
    if not module.is_pure_tensor(x):
        return False
    zero = (0,) * module.rank
    return all(content1 == zero for _, content1 in module.split(x))


def verify_shadow(quiver: Quiver, weight1: WeightVector, weight2: WeightVector, height: int) -> List[CheckEntry]:
    """With an empty first word the shadow is exactly (F_word2 v_lambda2) (x) v_lambda1."""
    module = TensorModule(quiver, weight1, weight2)
    empty = LoweringWord.of(quiver, [])
    entries = []
    for h in range(height + 1):
        for content in _compositions(h, quiver.rank):
            for indices in enumerate_words(content):
                word2 = LoweringWord.from_indices(quiver, indices)
                x = tensor_monomial_shadow(quiver, empty, word2, weight1, weight2, module)
                expected = module.pure(module.factor2.word_vector(indices), module.factor1.highest_vector())
                passed = x == expected and is_highest_pure_tensor(module, x)
                entries.append(
                    CheckEntry(
                        check="empty first word gives (F_word2 v) (x) v",
                        passed=passed,
                        vertices=list(word2.letters),
                        content=list(content),
                        detail=None if passed else f"shadow {x} differs from the pure tensor",
                    )
                )
    logger.info(f"Coproduct shadow: {sum(e.passed for e in entries)}/{len(entries)} words give pure tensors")
    return entries
