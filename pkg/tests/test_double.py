"""
Hopf YD Verifier - Drinfeld Double and Crossed Product Tests
D(H), A(α,β) = H*⋈H(α,β), bicomodules et correspondance des modules
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.field import Field
from src.crossed.bicomodule import (
    AlgebraData, DatumModule, build_H_ab_bicomodule, check_bicomodule, check_yd_datum_module,
)
from src.crossed.correspondence import check_module_roundtrip, dcp_module_to_yd, yd_to_dcp_module
from src.crossed.crossed_product import a_alpha_beta, check_anti_yd_algebra, check_crossed_specialization
from src.crossed.double import build_drinfeld_double, check_drinfeld_double, dh_bicomodule_on_A
from src.hopf.automorphisms import HopfAutomorphism
from src.hopf.builtins import corpus_algebra
from src.modules.yd_module import build_H_alpha_beta


@pytest.mark.algebra
class TestDrinfeldDouble:
    """Tests du double D(H)"""

    def test_double_of_cyclic(self, kc2):
        D = build_drinfeld_double(kc2)
        assert D.dim == 4
        assert D.name == "D(kC2)"
        assert D.basis[0] == "e^1⋈1"
        report = check_drinfeld_double(D)
        assert report.passed, [c.check_id for c in report.failures]

    def test_double_is_memoized(self, kc3):
        assert build_drinfeld_double(kc3) is build_drinfeld_double(kc3)

    def test_double_of_cyclic3(self, kc3):
        """D(k[C_3]) : g ≠ g⁻¹, la R-matrice et son inverse sont distinctes"""
        D = build_drinfeld_double(kc3)
        assert D.dim == 9
        assert D.R.shape == (9, 9)
        report = check_drinfeld_double(D)
        assert report.passed, [c.check_id for c in report.failures]
        assert report.get("dcp.r_intertwines[D(kC3)]").passed

    @pytest.mark.parametrize("p", [5, 7])
    def test_double_over_prime_field(self, p):
        D = build_drinfeld_double(corpus_algebra("cyclic3", Field.prime(p)))
        assert D.field.name == f"F{p}"
        report = check_drinfeld_double(D)
        assert report.passed, [c.check_id for c in report.failures]

    @pytest.mark.slow
    def test_double_of_sweedler(self, sweedler):
        D = build_drinfeld_double(sweedler)
        assert D.dim == 16
        assert D.R.shape == (16, 16)
        report = check_drinfeld_double(D)
        assert report.passed, [c.check_id for c in report.failures]
        assert report.get("dcp.r_intertwines[D(sweedler4)]").passed

    def test_dh_bicomodule_on_cyclic(self, kc2):
        ident = HopfAutomorphism.identity(kc2)
        B, result = dh_bicomodule_on_A(kc2, ident, ident)
        assert result.passed
        assert B.H.name == "D(kC2)"
        assert B.dim == 4

    @pytest.mark.slow
    def test_dh_bicomodule_on_sweedler(self, sweedler, identity_aut, s2):
        _, result = dh_bicomodule_on_A(sweedler, s2, identity_aut)
        assert result.passed


@pytest.mark.algebra
class TestCrossedProducts:
    """Tests des produits croisés diagonaux"""

    def test_regular_bicomodule(self, sweedler, identity_aut, s2):
        for alpha, beta in ((identity_aut, identity_aut), (s2, identity_aut), (identity_aut, s2)):
            assert check_bicomodule(build_H_ab_bicomodule(sweedler, alpha, beta)).passed

    def test_a_alpha_beta(self, sweedler, identity_aut, s2):
        A = a_alpha_beta(sweedler, s2, identity_aut)
        assert A.name == "A(S^2,id)"
        assert A.dim == 16
        assert A.check_algebra("dcp.crossed_algebra").passed

    @pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (0, 1), (1, 1)])
    def test_crossed_specialization(self, sweedler, identity_aut, s2, a, b):
        auts = (identity_aut, s2)
        assert check_crossed_specialization(sweedler, auts[a], auts[b]).passed

    def test_anti_yd_algebra(self, sweedler):
        assert check_anti_yd_algebra(sweedler).passed

    def test_hopf_algebra_as_algebra(self, kc3):
        assert AlgebraData.of_hopf(kc3).check_algebra(f"dcp.crossed_algebra[{kc3.name}]").passed


class TestModuleCorrespondence:
    """Tests de l'équivalence entre modules YD et modules sur A(α,β)"""

    @pytest.mark.parametrize("a,b", [(0, 0), (1, 0)])
    def test_roundtrip(self, sweedler, identity_aut, s2, a, b):
        auts = (identity_aut, s2)
        M = build_H_alpha_beta(sweedler, auts[a], auts[b])
        report = check_module_roundtrip(M)
        assert report.passed, [c.check_id for c in report.failures]

    def test_explicit_round_trip(self, kc2):
        ident = HopfAutomorphism.identity(kc2)
        M = build_H_alpha_beta(kc2, ident, ident)
        module = yd_to_dcp_module(M)
        assert module.action.shape == (4, 2, 2)
        back = dcp_module_to_yd(module, kc2, M.component)
        assert back.same_structure(M)

    def test_datum_module(self, sweedler, identity_aut, s2):
        A = build_H_ab_bicomodule(sweedler, s2, identity_aut)
        good = DatumModule.of_yd_module(A, build_H_alpha_beta(sweedler, s2, identity_aut))
        assert check_yd_datum_module(A, good).passed

    def test_datum_module_forms_agree_on_failure(self, sweedler, identity_aut, s2):
        A = build_H_ab_bicomodule(sweedler, s2, identity_aut)
        wrong = DatumModule.of_yd_module(A, build_H_alpha_beta(sweedler, identity_aut, identity_aut))
        report = check_yd_datum_module(A, wrong)
        assert not report.passed
        assert len(report.failures) == 2
        assert report.checks[-1].passed
