"""
Hopf YD Verifier - Yetter-Drinfeld Module Tests
Composantes (α,β), modules H_{α,β}, compatibilité, morphismes et perturbations
"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.exceptions import AxiomViolationError, ComponentMismatchError, ShapeMismatchError
from src.data.loader import parse_inputs
from src.hopf.automorphisms import HopfAutomorphism
from src.modules.compatibility import (
    check_anti_yd_compat, check_l_yd_compat, check_module_axioms, check_morphism, check_yd_compat,
    compat_21, compat_22, equivalence_21_22, equivalence_property, morphism_report, perturbed_candidates,
)
from src.modules.component import GroupElementG
from src.modules.yd_module import (
    PairInInvolution, YDModule, build_H_alpha_beta, build_pii_module, check_pair_in_involution, trivial_module,
)


class TestGroupElementG:
    """Tests de la loi (α,β)∗(γ,δ) = (αγ, δγ⁻¹βγ)"""

    def test_product(self, identity_aut, s2):
        product = GroupElementG(s2, identity_aut) * GroupElementG(identity_aut, s2)
        assert product == GroupElementG(s2, s2)
        assert product.name == "(S^2,S^2)"

    def test_square_is_unit(self, identity_aut, s2):
        p = GroupElementG(s2, identity_aut)
        assert (p * p).is_unit()
        assert p.inverse() == p

    def test_inverse_and_conjugate(self, sweedler, identity_aut, s2):
        p = GroupElementG(s2, identity_aut)
        q = GroupElementG(identity_aut, s2)
        assert (p * p.inverse()).is_unit()
        assert (p.inverse() * p) == GroupElementG.unit(sweedler)
        assert p.conjugate(q) == p * q * p.inverse()


@pytest.mark.algebra
class TestHAlphaBeta:
    """Tests des modules H_{α,β}"""

    @pytest.mark.parametrize("a,b", [(0, 0), (0, 1), (1, 0), (1, 1)])
    def test_all_components_are_yd(self, identity_aut, s2, sweedler, a, b):
        auts = (identity_aut, s2)
        M = build_H_alpha_beta(sweedler, auts[a], auts[b])
        assert check_module_axioms(M).passed
        report = check_yd_compat(M)
        assert report.passed, [c.check_id for c in report.failures]

    def test_name_and_action(self, sweedler, identity_aut):
        """g·x = g x g⁻¹ = -x"""
        M = build_H_alpha_beta(sweedler, identity_aut, identity_aut)
        assert M.name == "H_{id,id}"
        assert M.action[1, 2, 2] == -1
        # x·1 = ε(x)1 = 0
        assert all(c == 0 for c in M.action[2, 0, :])

    def test_cyclic_group_algebra(self, kc3):
        auts = [HopfAutomorphism.identity(kc3)]
        assert check_yd_compat(build_H_alpha_beta(kc3, auts[0], auts[0])).passed

    def test_anti_yd_and_l_yd_forms(self, sweedler, identity_aut, s2):
        M = build_H_alpha_beta(sweedler, s2, identity_aut)
        assert check_anti_yd_compat(M).passed
        assert check_l_yd_compat(M, 1).passed
        assert not check_anti_yd_compat(build_H_alpha_beta(sweedler, identity_aut, identity_aut)).passed


@pytest.mark.algebra
class TestFixtureModules:
    """Tests des modules chargés depuis data/fixtures"""

    def test_regular_module_is_yd(self, fixtures_dir):
        M = parse_inputs([fixtures_dir / 'sweedler4_regular_module.json']).modules[0]
        assert M.name == "H_id_id"
        assert M.component.is_unit()
        assert check_yd_compat(M).passed

    def test_mislabeled_module_fails_at_x(self, fixtures_dir):
        M = parse_inputs([fixtures_dir / 'sweedler4_mislabeled_module.json']).modules[0]
        assert M.component.name == "(S^2,id)"
        assert check_module_axioms(M).passed
        result = compat_21(M)
        assert not result.passed
        assert result.check_id == "yd.compat[sweedler4:H_id_id_mislabeled:(S^2,id)]"
        assert result.counterexample == ("h=x", "m=1")
        assert not compat_22(M).passed
        assert equivalence_21_22(M)


class TestMorphisms:
    """Tests des morphismes de modules YD"""

    def test_identity_is_morphism(self, kc2):
        ident = HopfAutomorphism.identity(kc2)
        M = build_H_alpha_beta(kc2, ident, ident)
        assert check_morphism(M, M, kc2.field.identity(2))

    def test_swap_is_not_colinear(self, kc2):
        ident = HopfAutomorphism.identity(kc2)
        M = build_H_alpha_beta(kc2, ident, ident)
        swap = np.array([[0, 1], [1, 0]], dtype=object)
        assert not check_morphism(M, M, swap)
        assert not check_morphism(M, M, np.eye(3, dtype=int).astype(object))

    def test_component_mismatch(self, sweedler, identity_aut, s2):
        M = build_H_alpha_beta(sweedler, identity_aut, identity_aut)
        N = build_H_alpha_beta(sweedler, s2, identity_aut)
        with pytest.raises(ComponentMismatchError):
            morphism_report(M, N, sweedler.field.identity(4))


class TestEquivalentForms:
    """Les deux formes de la compatibilité donnent le même verdict"""

    def test_perturbed_candidates_agree(self, sweedler, identity_aut, s2):
        M = build_H_alpha_beta(sweedler, identity_aut, identity_aut)
        components = [GroupElementG(a, b) for a in (identity_aut, s2) for b in (identity_aut, s2)]
        candidates = perturbed_candidates(M, 6, seed=7, components=components)
        assert len(candidates) == 6
        assert all(check_module_axioms(c).passed for c in candidates)
        agreed, first_disagreement = equivalence_property(candidates)
        assert agreed == 6
        assert first_disagreement is None

    def test_perturbation_is_deterministic(self, kc3):
        ident = HopfAutomorphism.identity(kc3)
        M = build_H_alpha_beta(kc3, ident, ident)
        first = perturbed_candidates(M, 3, seed=11)
        second = perturbed_candidates(M, 3, seed=11)
        assert all(a.same_structure(b) for a, b in zip(first, second))


class TestSmallModules:
    """Tests du module trivial et des modules _f k^g"""

    def test_trivial_module(self, sweedler):
        k = trivial_module(sweedler)
        assert k.name == "k" and k.basis == ("1",)
        assert check_module_axioms(k).passed
        assert check_yd_compat(k).passed

    def test_pair_module(self, sweedler, identity_aut, s2):
        """(ε, g) est une paire en involution pour (S², id)"""
        pii = PairInInvolution(sweedler.counit, sweedler.element({"g": 1}),
                               GroupElementG(s2, identity_aut), "ε", "g")
        assert check_pair_in_involution(sweedler, pii).passed
        M = build_pii_module(sweedler, pii)
        assert M.name == "_εk^g"
        assert check_yd_compat(M).passed
        V = build_pii_module(sweedler, pii, d=2)
        assert V.basis == ("v1", "v2")
        assert check_yd_compat(V).passed

    def test_invalid_pair_is_rejected(self, sweedler, identity_aut, s2):
        pii = PairInInvolution(sweedler.counit, sweedler.unit, GroupElementG(s2, identity_aut), "ε", "1")
        assert not check_pair_in_involution(sweedler, pii).passed
        with pytest.raises(AxiomViolationError):
            build_pii_module(sweedler, pii)

    def test_wrong_action_shape(self, sweedler):
        with pytest.raises(ShapeMismatchError):
            YDModule(sweedler, GroupElementG.unit(sweedler), sweedler.field.zeros((4, 2, 2)),
                     sweedler.field.zeros((1, 1, 4)), ("1",))
