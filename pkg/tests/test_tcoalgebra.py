"""
Hopf YD Verifier - T-Coalgebra Tests
Partie finie P ⊆ G, structure de DT(H) et comparaison Rep(DT(H)) / YD(H)
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.exceptions import BudgetExceededError
from src.modules.component import GroupElementG
from src.modules.yd_module import PairInInvolution, build_H_alpha_beta, build_pii_module
from src.tcoalgebra.structure import TCoalgebraData, closure
from src.tcoalgebra.verification import verify_rep_equivalence, verify_rep_equivalences, verify_tcoalgebra


@pytest.fixture(scope="module")
def t_sweedler(sweedler, identity_aut, s2):
    """DT(H4) sur P = {(id,id), (S²,id)}"""
    return TCoalgebraData.generate(sweedler, [GroupElementG(s2, identity_aut)])


class TestClosure:
    """Tests du sous-groupe engendré"""

    def test_single_generator(self, t_sweedler):
        assert len(t_sweedler.elements) == 2
        assert t_sweedler.unit.is_unit()
        assert t_sweedler.dim == 16

    def test_two_generators(self, sweedler, identity_aut, s2):
        P = closure(sweedler, [GroupElementG(s2, identity_aut), GroupElementG(identity_aut, s2)])
        assert len(P) == 4
        assert P[0].is_unit()

    def test_budget_exceeded(self, sweedler, identity_aut, s2):
        with pytest.raises(BudgetExceededError):
            closure(sweedler, [GroupElementG(s2, identity_aut), GroupElementG(identity_aut, s2)], cap=3)

    def test_trivial_closure(self, kc2):
        T = TCoalgebraData.generate(kc2, [])
        assert len(T.elements) == 1
        assert T.dim == 4


class TestTCoalgebraStructure:
    """Tests des identités de DT(H)"""

    def test_unit_component_only(self, kc2):
        report = verify_tcoalgebra(TCoalgebraData.generate(kc2, []))
        assert report.passed
        assert len(report) == 10

    def test_sweedler_two_components(self, t_sweedler):
        report = verify_tcoalgebra(t_sweedler)
        assert report.passed, [c.check_id for c in report.failures]

    def test_components_are_algebras(self, t_sweedler):
        for p in t_sweedler.elements:
            assert t_sweedler.component(p).check_algebra(f"dcp.crossed_algebra[DT:{p.name}]").passed

    def test_rmatrix_shapes(self, t_sweedler):
        p, q = t_sweedler.elements
        R, R_inv = t_sweedler.rmatrix(p, q)
        assert R.shape == R_inv.shape


class TestRepresentations:
    """Rep(DT(H)) comparée aux constructions de YD(H)"""

    @pytest.fixture(scope="class")
    def modules(self, sweedler, identity_aut, s2):
        pii = PairInInvolution(sweedler.counit, sweedler.element({"g": 1}),
                               GroupElementG(s2, identity_aut), "ε", "g")
        return [build_H_alpha_beta(sweedler, s2, identity_aut), build_pii_module(sweedler, pii)]

    def test_single_equivalence(self, modules, identity_aut, s2):
        M, N = modules
        report = verify_rep_equivalence(M, N, GroupElementG(s2, identity_aut))
        assert report.passed, [c.check_id for c in report.failures]
        assert len(report) == 3

    @pytest.mark.slow
    def test_all_equivalences(self, t_sweedler, modules):
        report = verify_rep_equivalences(t_sweedler, modules)
        assert report.passed, [c.check_id for c in report.failures]
        assert len(report) == 2 * 4 + 2 * 2
