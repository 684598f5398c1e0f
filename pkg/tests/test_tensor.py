"""
Hopf YD Verifier - Tensor Engine Tests
Plans de contraction, applications linéaires et expressions de Sweedler
"""

import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.exceptions import BudgetExceededError, ShapeMismatchError
from src.core.field import Field
from src.core.linear_map import LinearMap
from src.core.sweedler import SweedlerExpr
from src.core.tensor import (
    ApplyMap, ContractPair, ContractionPlan, Leg, PermuteLegs, Tensor, TensorWith, contract,
    contract_with_stats, use_entry_limit,
)
from src.hopf.builtins import corpus_algebra


class TestContract:
    """Tests de l'exécution des plans"""

    @pytest.fixture
    def field(self):
        return Field.rationals()

    @pytest.fixture
    def matrix_tensor(self, field):
        return Tensor(field, (Leg("a", 2), Leg("b", 3)), field.array(np.arange(6).reshape(2, 3)))

    def test_empty_plan_is_identity(self, matrix_tensor):
        assert contract(ContractionPlan(), matrix_tensor) == matrix_tensor

    def test_double_permutation(self, matrix_tensor):
        plan = ContractionPlan().then(PermuteLegs((1, 0))).then(PermuteLegs((1, 0)))
        assert contract(plan, matrix_tensor) == matrix_tensor

    def test_single_permutation_transposes(self, field, matrix_tensor):
        result = contract(ContractionPlan().then(PermuteLegs((1, 0))), matrix_tensor)
        assert result.shape == (3, 2)
        assert result.data[2, 1] == 5

    def test_coproduct_of_group_element(self, field, kc2):
        """Δ(g) = g⊗g dans k[C_2]"""
        g = Tensor.basis(field, [Leg("H", 2)], [1])
        result = contract(ContractionPlan().then(ApplyMap((0,), kc2.comul, ("H", "H"))), g)
        assert result == Tensor.basis(field, [Leg("H", 2), Leg("H", 2)], [1, 1])

    def test_trace_by_contract_pair(self, field, matrix_tensor):
        square = Tensor(field, (Leg("a", 2), Leg("a", 2)), field.array([[1, 2], [3, 4]]))
        result = contract(ContractionPlan().then(ContractPair(0, 1)), square)
        assert result.data[()] == 5

    def test_tensor_with_constant_appends_legs(self, field, matrix_tensor):
        const = Tensor(field, (Leg("c", 2),), field.array([1, -1]))
        result = contract(ContractionPlan().then(TensorWith(const)), matrix_tensor)
        assert result.shape == (2, 3, 2)
        assert result.data[1, 2, 1] == -5

    def test_shape_mismatch_reports_step(self, field, matrix_tensor):
        plan = ContractionPlan().then(PermuteLegs((1, 0))).then(ApplyMap((5,), field.identity(2)))
        with pytest.raises(ShapeMismatchError) as exc_info:
            contract(plan, matrix_tensor)
        assert exc_info.value.step_index == 1

    def test_pairing_dimension_mismatch(self, matrix_tensor):
        with pytest.raises(ShapeMismatchError):
            contract(ContractionPlan().then(ContractPair(0, 1)), matrix_tensor)

    def test_bad_permutation(self, matrix_tensor):
        with pytest.raises(ShapeMismatchError):
            contract(ContractionPlan().then(PermuteLegs((0, 0))), matrix_tensor)

    def test_peak_size_reported(self, field, kc2):
        g = Tensor.basis(field, [Leg("H", 2)], [0])
        _, peak = contract_with_stats(ContractionPlan().then(ApplyMap((0,), kc2.comul, ("H", "H"))), g)
        assert peak >= 4

    @given(st.lists(st.integers(-50, 50), min_size=2, max_size=2),
           st.lists(st.integers(-50, 50), min_size=2, max_size=2))
    def test_contract_is_linear(self, u, v):
        field = Field.rationals()
        comul = corpus_algebra("cyclic2", field).comul
        plan = ContractionPlan().then(ApplyMap((0,), comul, ("H", "H")))
        a = Tensor(field, (Leg("H", 2),), field.array(u))
        b = Tensor(field, (Leg("H", 2),), field.array(v))
        assert contract(plan, a + b) == contract(plan, a) + contract(plan, b)

    def test_prime_field_reduction(self):
        F3 = Field.prime(3)
        t = Tensor(F3, (Leg("a", 2),), F3.array([2, 2]))
        doubled = contract(ContractionPlan().then(ApplyMap((0,), F3.array([[2, 0], [0, 2]]))), t)
        assert list(doubled.data) == [1, 1]

    def test_trace_over_prime_field(self):
        """Contraction complète sur F_3 : résultat scalaire réduit, toujours un tableau"""
        F3 = Field.prime(3)
        square = Tensor(F3, (Leg("a", 2), Leg("a", 2)), F3.array([[1, 2], [3, 4]]))
        result = contract(ContractionPlan().then(ContractPair(0, 1)), square)
        assert result.data[()] == 2

    def test_entry_limit(self, field, kc2):
        """Δ(g) a 4 coefficients : refusé sous un plafond de 3, accepté sous 4"""
        g = Tensor.basis(field, [Leg("H", 2)], [1])
        plan = ContractionPlan().then(ApplyMap((0,), kc2.comul, ("H", "H")))
        with use_entry_limit(3):
            with pytest.raises(BudgetExceededError):
                contract(plan, g)
        with use_entry_limit(4):
            assert contract(plan, g) == Tensor.basis(field, [Leg("H", 2), Leg("H", 2)], [1, 1])
        assert contract(plan, g).shape == (2, 2)


class TestLinearMap:
    """Tests des applications multilinéaires"""

    def test_then_composes_left_to_right(self, rationals):
        swap = LinearMap.from_matrix(rationals, rationals.array([[0, 1], [1, 0]]))
        scale = LinearMap.from_matrix(rationals, rationals.array([[2, 0], [0, 3]]))
        composed = swap.then(scale)
        assert list(composed.apply(rationals.array([1, 0]))) == [0, 3]

    def test_tensor_product(self, rationals):
        a = LinearMap.from_matrix(rationals, rationals.array([[1, 1], [0, 1]]))
        ident = LinearMap.identity(rationals, (2,))
        product = a.tensor(ident)
        assert product.src == (2, 2) and product.dst == (2, 2)
        assert product.data[0, 1, 1, 1] == 1

    def test_first_difference(self, rationals):
        ident = LinearMap.identity(rationals, (3,))
        other = LinearMap(rationals, (3,), (3,), ident.data.copy())
        assert ident.first_difference(other) is None
        other.data[2, 0] = 1
        assert ident.first_difference(other) == (2,)

    def test_incompatible_composition(self, rationals):
        with pytest.raises(ShapeMismatchError):
            LinearMap.identity(rationals, (2,)).then(LinearMap.identity(rationals, (3,)))


class TestSweedlerExpr:
    """Tests des expressions en notation de Sweedler"""

    def test_counit_after_coproduct(self, sweedler):
        """(ε⊗id)∘Δ = id"""
        expr = SweedlerExpr(sweedler.field, [("h", sweedler.dim)])
        expr.apply("h", sweedler.delta, ("a", "b"))
        expr.apply("a", sweedler.eps)
        assert expr.build(("b",)) == sweedler.identity()

    def test_antipode_convolution(self, sweedler):
        """m∘(S⊗id)∘Δ = η∘ε sur H4"""
        expr = SweedlerExpr(sweedler.field, [("h", sweedler.dim)])
        expr.apply("h", sweedler.delta, ("a", "b"))
        expr.apply("a", sweedler.S, "s")
        expr.apply(("s", "b"), sweedler.m, "out")
        built = expr.build(("out",))
        expected = LinearMap(sweedler.field, (4,), (4,),
                             np.multiply.outer(sweedler.counit, sweedler.unit))
        assert built == expected

    def test_dangling_wire(self, sweedler):
        expr = SweedlerExpr(sweedler.field, [("h", sweedler.dim)])
        expr.apply("h", sweedler.delta, ("a", "b"))
        with pytest.raises(ShapeMismatchError):
            expr.build(("a",))

    def test_consumed_wire(self, sweedler):
        expr = SweedlerExpr(sweedler.field, [("h", sweedler.dim)])
        expr.apply("h", sweedler.S, "s")
        with pytest.raises(ShapeMismatchError):
            expr.apply("h", sweedler.S, "t")

    def test_sampled_expression_has_batch_leg(self, sweedler):
        rows = np.array([[2], [3]])
        expr = SweedlerExpr(sweedler.field, [("h", sweedler.dim)], sample=rows)
        expr.apply("h", sweedler.S, "s")
        built = expr.build(("s",))
        assert built.src == (2,)
        # S(x) = -gx, S(gx) = x
        assert built.data[0, 3] == -1
        assert built.data[1, 2] == 1
