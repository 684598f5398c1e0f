"""
Hopf YD Verifier - Hopf Algebra Tests
Axiomes, automorphismes, dual et actions régulières
"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core import linalg
from src.core.exceptions import AxiomViolationError, MalformedInputError
from src.core.field import Field
from src.data.loader import parse_inputs
from src.hopf.automorphisms import (
    HopfAutomorphism, antipode_power, automorphism_report, check_automorphism, standard_automorphisms,
)
from src.hopf.axioms import check_hopf_axioms, validate_hopf_algebra
from src.hopf.builtins import build_builtin, corpus_algebra
from src.hopf.dual import DualBasisPairing, check_double_dual, check_regular_actions, dual_of, regular_action
from src.hopf.groups import GroupTable, cyclic_group_table, symmetric_group_table
from src.involution.search import characters


def _is_hopf_isomorphism(H, K, P):
    """P[i] = coordonnées dans K de l'image de e_i ; vérifie que e_i ↦ P[i] est un isomorphisme de Hopf"""
    field = H.field
    P = field.array(P)
    if not linalg.is_invertible(field, P):
        return False
    # φ(e_i)φ(e_j) = φ(e_i e_j)
    images = field.tensordot(P, K.mul, ([1], [0]))
    products = np.transpose(field.tensordot(images, P, ([1], [1])), (0, 2, 1))
    # Δφ(e_i) = (φ⊗φ)Δ(e_i)
    coproducts = field.tensordot(field.tensordot(H.comul, P, ([1], [0])), P, ([1], [0]))
    checks = [
        (products, field.tensordot(H.mul, P, ([2], [0]))),
        (field.tensordot(P, K.comul, ([1], [0])), coproducts),
        (field.matmul(H.unit, P), K.unit),
        (field.matmul(P, K.counit), H.counit),
        (field.matmul(H.antipode, P), field.matmul(P, K.antipode)),
    ]
    return all(bool(np.all(np.asarray(lhs == rhs, dtype=bool))) for lhs, rhs in checks)


@pytest.mark.algebra
class TestHopfAxioms:
    """Tests des axiomes sur le corpus et sur les entrées corrompues"""

    @pytest.mark.parametrize("name", ["cyclic2", "cyclic3", "symmetric3", "sweedler4", "dual_sweedler4"])
    def test_corpus_satisfies_axioms(self, name):
        report = check_hopf_axioms(corpus_algebra(name))
        assert report.passed, [c.check_id for c in report.failures]

    def test_sweedler_over_prime_field(self):
        assert check_hopf_axioms(build_builtin({"builtin": "sweedler4"}, Field.prime(5))).passed

    @pytest.mark.parametrize("name,p", [
        ("cyclic2", 5), ("cyclic3", 7), ("symmetric3", 5), ("sweedler4", 3), ("dual_sweedler4", 7),
    ])
    def test_corpus_over_prime_fields(self, name, p):
        """Les contractions sur F_p aboutissant à un scalaire ne font pas échouer les axiomes"""
        report = check_hopf_axioms(corpus_algebra(name, Field.prime(p)))
        assert report.passed, [c.check_id for c in report.failures]

    def test_sweedler_degenerate_in_characteristic_two(self):
        with pytest.raises(MalformedInputError):
            build_builtin({"builtin": "sweedler4"}, Field.prime(2))

    def test_corrupted_antipode_fails_at_x(self, fixtures_dir):
        inputs = parse_inputs([fixtures_dir / 'sweedler4_corrupted_antipode.json'], validate=False)
        H = inputs.algebras[0]
        report = check_hopf_axioms(H)
        failure = report.get("hopf.antipode_left[sweedler4_corrupted_antipode]")
        assert not failure.passed
        assert failure.counterexample == ("h=x",)
        assert report.get("hopf.associativity[sweedler4_corrupted_antipode]").passed
        with pytest.raises(AxiomViolationError):
            validate_hopf_algebra(H)

    def test_noncoassociative_comultiplication(self, fixtures_dir):
        H = parse_inputs([fixtures_dir / 'cyclic2_noncoassociative.json'], validate=False).algebras[0]
        failure = check_hopf_axioms(H).get("hopf.coassociativity[cyclic2_noncoassociative]")
        assert failure.counterexample == ("h=g",)
        with pytest.raises(AxiomViolationError) as exc_info:
            H.iterated_coproduct(3)
        assert exc_info.value.axiom == "coassociativity"

    def test_unknown_corpus_name(self):
        with pytest.raises(MalformedInputError):
            corpus_algebra("quaternions")


@pytest.mark.algebra
class TestSweedlerStructure:
    """Tests des calculs explicites dans H4"""

    def test_antipode_squared(self, sweedler, s2):
        expected = np.diag([1, 1, -1, -1]).astype(object)
        assert np.all(s2.matrix == expected)
        assert s2.name == "S^2"

    def test_antipode_values(self, sweedler):
        x = sweedler.element({"x": 1})
        assert sweedler.format_element(sweedler.S.apply(x)) == "-gx"
        assert sweedler.format_element(sweedler.S_inv.apply(x)) == "gx"

    def test_product_relations(self, sweedler):
        g, x = sweedler.element({"g": 1}), sweedler.element({"x": 1})
        assert sweedler.format_element(sweedler.product(g, g)) == "1"
        assert sweedler.format_element(sweedler.product(x, x)) == "0"
        assert sweedler.format_element(sweedler.product(x, g)) == "-gx"

    def test_iterated_coproduct_of_x(self, sweedler):
        """Δ²(x) = x⊗1⊗1 + g⊗x⊗1 + g⊗g⊗x"""
        image = sweedler.iterated_coproduct(3).apply(sweedler.element({"x": 1}))
        one, g, x = sweedler.index("1"), sweedler.index("g"), sweedler.index("x")
        assert image[x, one, one] == 1
        assert image[g, x, one] == 1
        assert image[g, g, x] == 1
        assert sum(1 for c in image.reshape(-1) if c != 0) == 3

    def test_group_likes_and_characters(self, sweedler):
        assert sweedler.is_group_like(sweedler.element({"g": 1}))
        assert not sweedler.is_group_like(sweedler.element({"x": 1}))
        assert sweedler.is_character(sweedler.counit)
        assert sweedler.is_character(sweedler.element({"1": 1, "g": -1}))

    def test_unknown_label(self, sweedler):
        with pytest.raises(MalformedInputError):
            sweedler.index("y")


@pytest.mark.algebra
class TestAutomorphisms:
    """Tests des automorphismes de Hopf"""

    def test_standard_set_on_cyclic2(self, kc2):
        auts = standard_automorphisms(kc2, 1, kc2.group.automorphisms())
        assert [a.name for a in auts] == ["id"]

    @pytest.mark.parametrize("l_max", [1, 2])
    def test_standard_set_on_sweedler(self, sweedler, l_max):
        assert [a.name for a in standard_automorphisms(sweedler, l_max)] == ["id", "S^2"]

    def test_group_inversion_on_cyclic3(self, kc3):
        auts = standard_automorphisms(kc3, 1, kc3.group.automorphisms())
        assert [a.name for a in auts] == ["id", "inv"]
        assert automorphism_report(kc3, auts[1]).passed

    def test_scaling_x_is_automorphism(self, sweedler):
        assert check_automorphism(sweedler, np.diag([1, 1, 2, 2]).astype(object))

    def test_non_automorphisms(self, sweedler):
        assert not check_automorphism(sweedler, np.diag([1, 1, 0, 0]).astype(object))
        swap = np.array([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], dtype=object)
        assert not check_automorphism(sweedler, swap)
        assert not check_automorphism(sweedler, np.eye(3, dtype=int).astype(object))

    def test_from_matrix_rejects(self, sweedler):
        with pytest.raises(AxiomViolationError):
            HopfAutomorphism.from_matrix(sweedler, np.diag([1, 1, 0, 0]), "singular")

    def test_composition_and_powers(self, sweedler, s2):
        assert s2.compose(s2).is_identity()
        assert s2.compose(s2).name == "id"
        assert s2.power(2).name == "id"
        assert s2.inverse() == s2
        assert antipode_power(sweedler, 4).is_identity()
        assert antipode_power(sweedler, -2) == s2

    def test_odd_antipode_power(self, sweedler):
        with pytest.raises(ValueError):
            antipode_power(sweedler, 1)


@pytest.mark.algebra
class TestDual:
    """Tests du dual et des actions régulières"""

    @pytest.mark.parametrize("name", ["cyclic3", "sweedler4"])
    def test_dual_structures(self, name):
        H = corpus_algebra(name)
        assert DualBasisPairing(H).check().passed
        assert check_regular_actions(H).passed
        assert check_double_dual(H).passed

    def test_dual_labels(self, sweedler):
        assert dual_of(sweedler).basis == ("e^1", "e^g", "e^x", "e^gx")
        assert dual_of(sweedler).name == "dual(sweedler4)"

    def test_left_regular_action_on_cyclic(self, kc2, kc3):
        """g⇀e^1 = e^{g⁻¹}"""
        for H, expected in ((kc2, "g"), (kc3, "g^2")):
            image = regular_action("left", H, H.element({"g": 1}), H.element({"1": 1}))
            assert list(image) == list(H.element({expected: 1}))

    def test_right_regular_action_on_cyclic(self, kc3):
        image = regular_action("right", kc3, kc3.element({"g": 1}), kc3.element({"1": 1}))
        assert list(image) == list(kc3.element({"g^2": 1}))

    def test_cyclic2_is_self_dual_through_characters(self, kc2):
        """k[C_2] ≅ k[C_2]* : 1 ↦ ε, g ↦ χ avec χ(g) = -1"""
        fs = characters(kc2)
        assert [list(f) for f in fs] == [[1, 1], [1, -1]]
        assert _is_hopf_isomorphism(kc2, dual_of(kc2), fs)
        # la base duale elle-même n'est pas un isomorphisme
        assert not _is_hopf_isomorphism(kc2, dual_of(kc2), np.eye(2, dtype=int).astype(object))

    def test_cyclic3_self_dual_needs_cube_roots(self):
        """Sur F_7 les trois caractères de k[C_3] donnent k[C_3] ≅ k[C_3]*"""
        H = corpus_algebra("cyclic3", Field.prime(7))
        fs = characters(H)
        assert len(fs) == 3
        g = H.index("g")
        # e_g ↦ caractère de valeur 2 en g, e_{g²} ↦ son carré
        by_value = {f[g]: f for f in fs}
        P = [by_value[1], by_value[2], by_value[4]]
        assert _is_hopf_isomorphism(H, dual_of(H), P)

    def test_bad_side(self, kc2):
        with pytest.raises(ValueError):
            regular_action("up", kc2, kc2.unit, kc2.counit)


class TestGroups:
    """Tests des tables de groupes"""

    def test_cyclic_labels(self):
        assert cyclic_group_table(3).labels == ("1", "g", "g^2")

    def test_symmetric_group_is_nonabelian(self):
        S3 = symmetric_group_table(3)
        assert S3.order == 6
        assert not S3.is_abelian()
        assert len(S3.automorphisms()) == 6

    def test_non_group_table(self):
        with pytest.raises(MalformedInputError):
            GroupTable(("a", "b"), np.array([[0, 0], [0, 1]]))
