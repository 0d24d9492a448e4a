"""Tests for Kashiwara operators, crystal enumeration and string data."""

import pytest

from quivercanon.crystal import (
    Comparison,
    Crystal,
    TensorCrystal,
    crystal_restriction,
    enumerate_crystal,
    format_string,
    i_string_decompose,
    kashiwara,
    linear_extension,
    string_depth,
    string_key,
    string_order_compare,
    string_sequence,
    tensor_crystal_op,
    verify_tensor_rule,
)
from quivercanon.errors import CrystalError, WeightMismatchError
from quivercanon.exactalg import V
from quivercanon.repmodule import Generator, HighestWeightModule, TensorModule


@pytest.fixture
def rho_crystal(a2) -> Crystal:
    return enumerate_crystal(a2, a2.weight([1, 1]), 4)


class TestKashiwaraOperators:
    """Test the operators on module vectors."""

    def test_string_depth(self, sl2):
        module = HighestWeightModule(sl2, sl2.weight([2]))
        assert string_depth(module.highest_vector(), "1") == 0
        assert string_depth(module.word_vector((0, 0)), "1") == 2

    def test_i_string_decompose(self, sl2):
        module = HighestWeightModule(sl2, sl2.weight([2]))
        v = module.highest_vector()
        parts = i_string_decompose(module.word_vector((0,)), "1")
        assert parts == [(1, v)]

    def test_lowering_highest_vector(self, sl2):
        module = HighestWeightModule(sl2, sl2.weight([1]))
        v = module.highest_vector()
        fv = kashiwara("f", "1", v)
        assert fv == module.apply(Generator.F("1"), v)
        assert kashiwara("f", "1", fv) is None
        assert kashiwara("e", "1", v) is None
        assert kashiwara("e", "1", fv) == v

    def test_divided_powers_on_string(self, sl2):
        """f~ F^(n) v = F^(n+1) v."""
        module = HighestWeightModule(sl2, sl2.weight([3]))
        v = module.highest_vector()
        x = module.apply(Generator.F("1", 2), v)
        assert kashiwara("f", "1", x) == module.apply(Generator.F("1", 3), v)

    def test_unknown_operator(self, sl2):
        module = HighestWeightModule(sl2, sl2.weight([1]))
        with pytest.raises(ValueError):
            kashiwara("g", "1", module.highest_vector())  # type: ignore[arg-type]


class TestCrystalEnumeration:
    """Test B(lambda) enumeration and its node data."""

    def test_sl2_strings(self, sl2):
        crystal = enumerate_crystal(sl2, sl2.weight([2]), 4)
        assert len(crystal) == 3
        assert [node.string for node in crystal] == [(), (("1", 1),), (("1", 2),)]
        assert [node.key for node in crystal] == ["()", "(1^1)", "(1^2)"]
        assert len(crystal.edges()) == 2

    def test_rho_node_count_matches_dimensions(self, rho_crystal):
        assert len(rho_crystal) == 8
        module = rho_crystal.module
        for content in rho_crystal.contents():
            assert len(rho_crystal.nodes_at(content)) == module.space(content).dim

    def test_rho_zero_weight_strings(self, rho_crystal):
        strings = sorted(node.string for node in rho_crystal.nodes_at((1, 1)))
        assert strings == [(("1", 1), ("2", 1)), (("2", 1), ("1", 1))]
        assert all(string_sequence(node) == node.string for node in rho_crystal)

    def test_raise_undoes_lower(self, rho_crystal):
        for node in rho_crystal:
            if node.height >= rho_crystal.height:
                continue
            for v in rho_crystal.quiver.vertices:
                image = rho_crystal.f(v, node)
                if image is not None:
                    assert rho_crystal.e(v, image) is node
                    assert image.eps[v] == node.eps[v] + 1

    def test_phi_minus_eps_is_weight(self, rho_crystal):
        for node in rho_crystal:
            for v in rho_crystal.quiver.vertices:
                assert node.phi[v] - node.eps[v] == node.weight[v]

    def test_representatives_replay_strings(self, rho_crystal):
        for node in rho_crystal:
            if node.height == 0:
                continue
            (v, a), rest = node.string[0], node.string[1:]
            x = rho_crystal.find(rest).vector_rep
            for _ in range(a):
                x = kashiwara("f", v, x)
            assert x == node.vector_rep

    def test_identify(self, rho_crystal):
        for node in rho_crystal:
            assert rho_crystal.identify(node.vector_rep) is node
            assert rho_crystal.identify(node.vector_rep * V) is None

    def test_find(self, rho_crystal):
        node = rho_crystal.find([("1", 1), ("2", 1)])
        assert node is not None
        assert node.content == (1, 1)
        assert rho_crystal.find([("1", 3)]) is None

    def test_lowering_beyond_bound(self, sl2):
        crystal = enumerate_crystal(sl2, sl2.weight([3]), 1)
        top = crystal.find([("1", 1)])
        with pytest.raises(CrystalError):
            crystal.f("1", top)

    def test_negative_height(self, sl2):
        with pytest.raises(ValueError):
            enumerate_crystal(sl2, sl2.weight([1]), -1)

    def test_order_must_be_permutation(self, a2):
        with pytest.raises(WeightMismatchError):
            enumerate_crystal(a2, a2.weight([1, 1]), 2, order=["1", "3"])

    def test_zero_weight_strings_under_reversed_order(self, a2):
        crystal = enumerate_crystal(a2, a2.weight([1, 1]), 2, order=["2", "1"])
        assert crystal.vertex_order == ("2", "1")
        strings = sorted(node.string for node in crystal.nodes_at((1, 1)))
        assert strings == [(("1", 1), ("2", 1)), (("2", 1), ("1", 1))]

    def test_format_string(self):
        assert format_string((("2", 1), ("1", 3))) == "(2^1,1^3)"


class TestStringOrder:
    """Test the lexicographic refinement of the string order."""

    def test_compare(self):
        order = ["1", "2"]
        assert string_order_compare([("1", 1), ("2", 1)], [("2", 1), ("1", 1)], order) is Comparison.LESS
        assert string_order_compare([("1", 2)], [("1", 1)], order) is Comparison.GREATER
        assert string_order_compare([("1", 1)], [("1", 1)], order) is Comparison.EQUAL

    def test_prefix_is_incomparable(self):
        result = string_order_compare([("1", 1)], [("1", 1), ("2", 1)], ["1", "2"])
        assert result is Comparison.INCOMPARABLE

    def test_vertex_order_reverses(self):
        left, right = [("1", 1)], [("2", 1)]
        assert string_order_compare(left, right, ["2", "1"]) is Comparison.GREATER

    def test_string_key(self):
        assert string_key([("2", 1), ("1", 3)], ["1", "2"]) == ((1, 1), (0, 3))

    def test_linear_extension(self, rho_crystal):
        ordered = linear_extension(rho_crystal.nodes_at((1, 1)), rho_crystal.vertex_order)
        assert [node.string[0][0] for node in ordered] == ["1", "2"]
        descending = linear_extension(rho_crystal.nodes_at((1, 1)), rho_crystal.vertex_order, descending=True)
        assert descending == list(reversed(ordered))


class TestTensorCrystal:
    """Test the signature rule against the module-level operators."""

    def test_signature_rule_sl2(self, sl2):
        crystal = TensorCrystal(TensorModule(sl2, sl2.weight([1]), sl2.weight([1])), 2)
        top2, top1 = crystal.crystal2.highest, crystal.crystal1.highest
        low1 = crystal.crystal1.f("1", top1)
        low2 = crystal.crystal2.f("1", top2)
        assert tensor_crystal_op("f", "1", (top2, top1), crystal.crystal2, crystal.crystal1) == (top2, low1)
        assert crystal.op("f", "1", (top2, low1)) == (low2, low1)
        assert crystal.op("e", "1", (low2, low1)) == (top2, low1)
        assert crystal.op("e", "1", (top2, top1)) is None

    def test_pairs_cover_weight_space(self, sl2):
        module = TensorModule(sl2, sl2.weight([1]), sl2.weight([1]))
        crystal = TensorCrystal(module, 2)
        assert len(crystal.pairs((1,))) == module.space((1,)).dim
        assert len(crystal.pairs()) == 4

    def test_identify_pair(self, sl2):
        module = TensorModule(sl2, sl2.weight([1]), sl2.weight([1]))
        crystal = TensorCrystal(module, 2)
        for pair in crystal.pairs():
            assert crystal.identify(crystal.representative(pair)) == pair

    def test_verify_tensor_rule_sl2(self, sl2):
        entries = verify_tensor_rule(sl2, sl2.weight([1]), sl2.weight([2]), 3)
        assert entries
        assert all(entry.passed for entry in entries)

    def test_verify_tensor_rule_a2(self, a2):
        entries = verify_tensor_rule(a2, a2.weight([1, 0]), a2.weight([0, 1]), 2)
        assert all(entry.passed for entry in entries), [e.detail for e in entries if not e.passed]


class TestCrystalRestriction:
    """Test replaying string data in a smaller module."""

    def test_restriction_survives(self, a2):
        node = crystal_restriction(a2, (("2", 1), ("1", 1)), a2.weight([1, 1]))
        assert node is not None
        assert node.content == (1, 1)

    def test_restriction_dies(self, a2):
        assert crystal_restriction(a2, (("1", 1),), a2.weight([0, 1])) is None

    def test_restriction_reuses_crystal(self, a2, rho_crystal):
        node = crystal_restriction(a2, (("1", 1),), a2.weight([1, 1]), crystal=rho_crystal)
        assert node is rho_crystal.find([("1", 1)])
