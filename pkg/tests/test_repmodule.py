"""Tests for highest-weight modules, tensor products and the quasi-R matrix."""

from unittest.mock import patch

import pytest

from quivercanon.errors import NonDominantWeightError, QuasiRError, WeightMismatchError
from quivercanon.exactalg import V, LaurentScalar, quantum_integer
from quivercanon.repmodule import (
    Generator,
    HighestWeightModule,
    LoweringWord,
    QuasiRSolver,
    TensorModule,
    apply_generator,
    contravariant_pair,
    enumerate_words,
    lower_raise_commute,
    operator_matrix,
    quasi_r_action,
    tensor_space,
    verify_relations,
    weight_space,
)

V_INV = LaurentScalar.monomial(-1)
K_ON_WEIGHT = "a:K_j = v^<j,wt> on the weight space"


class TestWords:
    """Test word enumeration and the E-through-F rule."""

    def test_enumerate_words(self):
        assert enumerate_words((1, 1)) == [(0, 1), (1, 0)]
        assert enumerate_words((2, 0)) == [(0, 0)]
        assert enumerate_words((0, 0)) == [()]

    def test_lowering_word_content(self, a2):
        word = LoweringWord.of(a2, ["2", "1", "2"])
        assert word.content.entries == (1, 2)
        assert len(word) == 3

    def test_lowering_word_unknown_vertex(self, a2):
        with pytest.raises(ValueError):
            LoweringWord.of(a2, ["3"])

    def test_lower_raise_commute_sl2(self, sl2):
        """E F v = [lambda] v."""
        weight = sl2.weight([2])
        expansion = lower_raise_commute(sl2, "1", LoweringWord.of(sl2, ["1"]), weight)
        assert expansion == {LoweringWord.of(sl2, []): quantum_integer(2)}

    def test_lower_raise_commute_other_vertex(self, a2):
        weight = a2.weight([1, 1])
        expansion = lower_raise_commute(a2, "2", LoweringWord.of(a2, ["1"]), weight)
        assert all(not c for c in expansion.values())

    def test_contravariant_pair_sl2(self, sl2):
        weight = sl2.weight([2])
        f = LoweringWord.of(sl2, ["1"])
        ff = LoweringWord.of(sl2, ["1", "1"])
        assert contravariant_pair(sl2, f, f, weight) == V + V_INV
        assert contravariant_pair(sl2, ff, ff, weight) == (V + V_INV) * (V + V_INV)

    def test_contravariant_pair_different_content(self, a2):
        weight = a2.weight([1, 1])
        x = LoweringWord.of(a2, ["1"])
        y = LoweringWord.of(a2, ["2"])
        assert contravariant_pair(a2, x, y, weight).is_zero


class TestHighestWeightModule:
    """Test weight spaces and generator actions of L(lambda)."""

    def test_sl2_dimensions(self, sl2):
        module = HighestWeightModule(sl2, sl2.weight([2]))
        assert [module.space((k,)).dim for k in range(5)] == [1, 1, 1, 0, 0]

    def test_a2_rho_dimensions(self, a2):
        module = HighestWeightModule(a2, a2.weight([1, 1]))
        expected = {
            (0, 0): 1,
            (1, 0): 1,
            (0, 1): 1,
            (1, 1): 2,
            (2, 0): 0,
            (2, 1): 1,
            (1, 2): 1,
            (2, 2): 1,
            (3, 3): 0,
        }
        for content, dim in expected.items():
            assert module.space(content).dim == dim, content
        assert sum(module.space(c).dim for c in module.contents_up_to(6)) == 8

    def test_a1xa1_product(self, a1xa1):
        module = HighestWeightModule(a1xa1, a1xa1.weight([1, 1]))
        assert module.space((1, 1)).dim == 1
        assert module.space((2, 0)).dim == 0

    def test_negative_content_is_empty(self, a2):
        module = HighestWeightModule(a2, a2.weight([1, 0]))
        assert module.space((-1, 0)).dim == 0

    def test_non_dominant_weight(self, sl2):
        with pytest.raises(NonDominantWeightError):
            HighestWeightModule(sl2, sl2.weight([-1]))

    def test_raise_after_lower(self, sl2):
        module = HighestWeightModule(sl2, sl2.weight([1]))
        v = module.highest_vector()
        fv = module.apply(Generator.F("1"), v)
        assert not fv.is_zero
        assert module.apply(Generator.E("1"), fv) == v
        assert module.apply(Generator.F("1"), fv).is_zero
        assert module.apply(Generator.E("1"), v).is_zero

    def test_divided_power(self, sl2):
        module = HighestWeightModule(sl2, sl2.weight([2]))
        v = module.highest_vector()
        f = Generator.F("1")
        twice = module.apply(f, module.apply(f, v))
        divided = module.apply(Generator.F("1", 2), v)
        assert divided * quantum_integer(2) == twice

    def test_k_acts_by_weight(self, a2):
        module = HighestWeightModule(a2, a2.weight([1, 1]))
        x = module.word_vector((0,))
        k = Generator.K(a2.weight([1, 0]))
        # <1, lambda - alpha_1> = 1 - 2
        assert module.apply(k, x) == x * V_INV

    def test_contravariant_form_on_vectors(self, sl2):
        module = HighestWeightModule(sl2, sl2.weight([2]))
        fv = module.word_vector((0,))
        assert fv.pair(fv) == V + V_INV

    def test_vectors_from_different_spaces(self, a2):
        module = HighestWeightModule(a2, a2.weight([1, 1]))
        with pytest.raises(WeightMismatchError):
            module.word_vector((0,)) + module.word_vector((1,))

    def test_operator_matrix_between_spaces(self, a2):
        source = weight_space(a2, a2.weight([1, 1]), (1, 0))
        module = source.module
        f2 = Generator.F("2")
        assert operator_matrix(f2, source, module.space((1, 1))) == module.generator_matrix(f2, (1, 0))
        x = source.basis_vector(0)
        assert apply_generator(f2, x) == module.apply(f2, x)

    def test_operator_matrix_wrong_target(self, a2):
        source = weight_space(a2, a2.weight([1, 1]), (1, 0))
        with pytest.raises(WeightMismatchError):
            operator_matrix(Generator.F("2"), source, source.module.space((2, 0)))


class TestTensorModule:
    """Test L(lambda2) (x) L(lambda1) with the fixed coproduct."""

    def test_zero_weight_dimension(self, sl2):
        module = TensorModule(sl2, sl2.weight([1]), sl2.weight([1]))
        assert module.space((1,)).dim == 2
        assert tensor_space(sl2, sl2.weight([1]), sl2.weight([1]), (1,)).dim == 2
        assert module.space((2,)).dim == 1
        assert module.space((3,)).dim == 0

    def test_lowering_coproduct(self, sl2):
        """F(v2 (x) v1) = v^-<1,lambda1> F v2 (x) v1 + v2 (x) F v1."""
        module = TensorModule(sl2, sl2.weight([1]), sl2.weight([1]))
        v2 = module.factor2.highest_vector()
        v1 = module.factor1.highest_vector()
        f = Generator.F("1")
        lowered = module.apply(f, module.pure(v2, v1))
        expected = module.pure(module.factor2.apply(f, v2), v1) * V_INV + module.pure(
            v2, module.factor1.apply(f, v1)
        )
        assert lowered == expected

    def test_raising_coproduct(self, sl2):
        """E(v2 (x) F v1) = K v2 (x) E F v1."""
        module = TensorModule(sl2, sl2.weight([1]), sl2.weight([1]))
        v2 = module.factor2.highest_vector()
        v1 = module.factor1.highest_vector()
        fv1 = module.factor1.apply(Generator.F("1"), v1)
        raised = module.apply(Generator.E("1"), module.pure(v2, fv1))
        assert raised == module.pure(v2, v1) * V

    def test_pure_and_split(self, sl2):
        module = TensorModule(sl2, sl2.weight([1]), sl2.weight([1]))
        v2 = module.factor2.highest_vector()
        fv1 = module.factor1.apply(Generator.F("1"), module.factor1.highest_vector())
        x = module.pure(v2, fv1)
        assert list(module.split(x)) == [((0,), (1,))]
        assert module.is_pure_tensor(x)

    def test_sum_of_components_is_not_pure(self, sl2):
        module = TensorModule(sl2, sl2.weight([1]), sl2.weight([1]))
        x = module.apply(Generator.F("1"), module.highest_vector())
        assert not module.is_pure_tensor(x)

    def test_pure_rejects_swapped_factors(self, sl2):
        module = TensorModule(sl2, sl2.weight([1]), sl2.weight([2]))
        with pytest.raises(WeightMismatchError):
            module.pure(module.factor1.highest_vector(), module.factor2.highest_vector())


class TestRelations:
    """Test the relation checker on small modules."""

    def test_sl2_relations(self, sl2):
        report = verify_relations(sl2, sl2.weight([2]), 4)
        assert report.passed
        assert report.entries
        assert not report.failures

    def test_a2_relations(self, a2):
        assert verify_relations(a2, a2.weight([1, 1]), 4).passed

    def test_kronecker_relations(self, kronecker):
        assert verify_relations(kronecker, kronecker.weight([1, 0]), 3).passed

    def test_tensor_relations(self, sl2):
        assert verify_relations(sl2, sl2.weight([1]), 3, weight2=sl2.weight([1])).passed

    def test_k_action_checked_against_weight(self, sl2):
        report = verify_relations(sl2, sl2.weight([2]), 2)
        k_checks = [e for e in report.entries if e.check == K_ON_WEIGHT]
        assert [e.content for e in k_checks] == [[0], [1], [2]]
        assert all(e.passed for e in k_checks)

    def test_wrong_k_eigenvalue_fails(self, sl2):
        trivial = LaurentScalar.constant(1)
        with patch.object(HighestWeightModule, "k_eigenvalue", return_value=trivial):
            report = verify_relations(sl2, sl2.weight([2]), 2)
        failed = {tuple(e.content) for e in report.failures if e.check == K_ON_WEIGHT}
        assert failed == {(0,), (2,)}

    def test_integrability_recorded(self, a2):
        report = verify_relations(a2, a2.weight([1, 0]), 2)
        checks = {entry.check for entry in report.entries}
        assert any(check.startswith("integrability") for check in checks)


class TestQuasiR:
    """Test the quasi-R matrix on L(1) (x) L(1)."""

    def test_zero_block_is_identity(self, sl2):
        theta = quasi_r_action(sl2, sl2.weight([1]), sl2.weight([1]), (0,))
        assert theta.is_identity()

    def test_first_block(self, sl2):
        module = TensorModule(sl2, sl2.weight([1]), sl2.weight([1]))
        theta = QuasiRSolver(module).block((1,))
        f = Generator.F("1")
        v2 = module.factor2.highest_vector()
        v1 = module.factor1.highest_vector()
        b = module.pure(v2, module.factor1.apply(f, v1))
        a = module.pure(module.factor2.apply(f, v2), v1)
        assert theta.apply(b.coords) == (b + a * (V - V_INV)).coords
        assert theta.apply(a.coords) == a.coords

    def test_theta_times_bar_is_identity(self, sl2):
        theta = quasi_r_action(sl2, sl2.weight([1]), sl2.weight([1]), (1,))
        assert (theta @ theta.bar()).is_identity()

    def test_raise_first_is_inconsistent(self, sl2):
        with pytest.raises(QuasiRError) as exc:
            quasi_r_action(sl2, sl2.weight([1]), sl2.weight([1]), (1,), direction="raise_first")
        assert exc.value.block == (1,)
