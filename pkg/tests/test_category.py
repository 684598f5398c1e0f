"""
Hopf YD Verifier - T-Category Tests
Loi de groupe, produit tensoriel, conjugaison, tressage et duaux
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.category.braiding import braiding, check_braiding, check_braiding_conjugation, verify_hexagons
from src.category.duality import check_duality, left_dual, right_dual
from src.category.group_law import check_group_axioms, g_law, generate_elements
from src.category.monoidal import (
    YDMorphism, check_conjugate_compat, check_conjugate_composite, check_conjugate_tensor,
    check_conjugation_functorial, check_tensor_assoc, check_tensor_compat, check_tensor_unit,
    conjugate_module, same_object, tensor_module,
)
from src.core.exceptions import MalformedInputError
from src.hopf.automorphisms import HopfAutomorphism, standard_automorphisms
from src.hopf.builtins import corpus_algebra
from src.modules.compatibility import check_yd_compat
from src.modules.component import GroupElementG
from src.modules.yd_module import PairInInvolution, build_H_alpha_beta, build_pii_module, trivial_module


@pytest.fixture(scope="module")
def components(identity_aut, s2):
    return generate_elements([identity_aut, s2])


@pytest.fixture(scope="module")
def regular_s2(sweedler, identity_aut, s2):
    """H_{S²,id}, dimension 4"""
    return build_H_alpha_beta(sweedler, s2, identity_aut)


@pytest.fixture(scope="module")
def line_module(sweedler, identity_aut, s2):
    """_εk^g dans la composante (S²,id)"""
    pii = PairInInvolution(sweedler.counit, sweedler.element({"g": 1}),
                           GroupElementG(s2, identity_aut), "ε", "g")
    return build_pii_module(sweedler, pii)


@pytest.fixture(scope="module")
def ks3_automorphisms():
    """k[S_3] et ses automorphismes : id puis les 5 automorphismes de groupe non triviaux"""
    H = corpus_algebra("symmetric3")
    return H, standard_automorphisms(H, 1, H.group.automorphisms())


@pytest.mark.category
class TestGroupLaw:
    """Tests de la loi de groupe sur G"""

    def test_generated_elements(self, components):
        assert [p.name for p in components] == ["(id,id)", "(id,S^2)", "(S^2,id)", "(S^2,S^2)"]

    def test_group_axioms(self, sweedler, components):
        report = check_group_axioms(sweedler, components)
        assert report.passed
        assert len(report) == 3

    def test_g_law_operations(self, components):
        p, q = components[2], components[1]
        assert g_law("multiply", p, q) == components[3]
        assert g_law("invert", p) == p

    def test_g_law_errors(self, components):
        with pytest.raises(ValueError):
            g_law("multiply", components[0])
        with pytest.raises(ValueError):
            g_law("divide", components[0], components[1])


@pytest.mark.category
class TestMonoidalStructure:
    """Tests du produit tensoriel et de la conjugaison"""

    def test_tensor_lands_in_product_component(self, regular_s2, line_module):
        MN = tensor_module(regular_s2, line_module)
        assert MN.component == regular_s2.component * line_module.component
        assert MN.component.is_unit()
        assert MN.basis[0] == "1⊗1"
        assert check_yd_compat(MN).passed

    def test_tensor_checks(self, regular_s2, line_module, sweedler):
        k = trivial_module(sweedler)
        assert check_tensor_compat(regular_s2, line_module).passed
        assert check_tensor_unit(regular_s2).passed
        assert check_tensor_assoc(line_module, regular_s2, k).passed

    def test_tensor_over_different_algebras(self, regular_s2, kc2):
        with pytest.raises(MalformedInputError):
            tensor_module(regular_s2, trivial_module(kc2))

    def test_conjugation(self, components, regular_s2, line_module):
        for p in components:
            assert check_conjugate_compat(p, regular_s2).passed
            assert check_conjugate_tensor(p, regular_s2, line_module).passed
        assert check_conjugate_composite(components[1], components[2], regular_s2).passed

    def test_conjugation_by_unit_keeps_object(self, sweedler, regular_s2):
        conj = conjugate_module(GroupElementG.unit(sweedler), regular_s2)
        assert conj.name == regular_s2.name
        assert same_object(f"tcat.conjugate_composite[{sweedler.name}:unit]", conj, regular_s2).passed

    def test_same_object_detects_component(self, sweedler, regular_s2, components):
        other = regular_s2.with_component(components[1])
        result = same_object(f"tcat.tensor_assoc[{sweedler.name}]", regular_s2, other)
        assert not result.passed
        assert result.counterexample == (f"M={regular_s2.name}",)

    def test_conjugation_is_functorial(self, components, regular_s2, sweedler):
        ident = YDMorphism(regular_s2, regular_s2, sweedler.field.identity(4), "id")
        assert ident.verify().passed
        assert ident.then(ident).name == "id∘id"
        for p in components:
            assert check_conjugation_functorial(p, ident).passed


@pytest.mark.category
class TestBraiding:
    """Tests du tressage c_{M,N} : M⊗N → ^MN⊗M"""

    def test_braiding_is_invertible_morphism(self, regular_s2, line_module):
        assert check_braiding(regular_s2, line_module).passed
        assert check_braiding(line_module, regular_s2).passed

    def test_braiding_shapes(self, regular_s2, line_module):
        c, c_inv = braiding(regular_s2, line_module)
        assert c.matrix.shape == (4, 4)
        assert c_inv.target is c.source

    def test_braiding_conjugation(self, components, regular_s2, line_module):
        for p in components:
            assert check_braiding_conjugation(p, regular_s2, line_module).passed

    @pytest.mark.slow
    def test_hexagons(self, regular_s2, line_module, sweedler):
        report = verify_hexagons(regular_s2, line_module, trivial_module(sweedler))
        assert report.passed, [c.check_id for c in report.failures]

    def test_hexagons_on_group_algebra(self, kc2):
        ident = HopfAutomorphism.identity(kc2)
        M = build_H_alpha_beta(kc2, ident, ident)
        assert verify_hexagons(M, M, trivial_module(kc2)).passed

    @pytest.mark.slow
    def test_hexagons_on_symmetric_group(self, ks3_automorphisms):
        """k[S_3] non commutatif, composantes tordues par un automorphisme intérieur θ"""
        H, auts = ks3_automorphisms
        assert len(auts) == 6
        ident, theta = auts[0], auts[1]
        assert not theta.is_identity()
        twisted_left = build_H_alpha_beta(H, theta, ident)
        twisted_right = build_H_alpha_beta(H, ident, theta)
        k = trivial_module(H)
        for M, N, P in [(twisted_left, twisted_right, k), (k, twisted_left, twisted_right)]:
            report = verify_hexagons(M, N, P)
            assert report.passed, [c.check_id for c in report.failures]


@pytest.mark.category
class TestDuality:
    """Tests des duaux à gauche et à droite"""

    def test_duals_lie_in_inverse_component(self, regular_s2):
        Mstar, b, d = left_dual(regular_s2)
        starM, _, _ = right_dual(regular_s2)
        expected = regular_s2.component.inverse()
        assert Mstar.component == expected
        assert starM.component == expected
        assert b.matrix.shape == (1, 16)
        assert d.matrix.shape == (16, 1)

    @pytest.mark.parametrize("which", ["regular", "line"])
    def test_duality_report(self, which, regular_s2, line_module):
        M = regular_s2 if which == "regular" else line_module
        report = check_duality(M)
        assert report.passed, [c.check_id for c in report.failures]
        assert len(report) == 4

    @pytest.mark.slow
    @pytest.mark.parametrize("twist", ["id", "theta"])
    def test_snake_identities_on_symmetric_group(self, ks3_automorphisms, twist):
        """Zigzags de M* et *M pour H_{id,id} et H_{θ,id} sur k[S_3]"""
        H, auts = ks3_automorphisms
        alpha = auts[0] if twist == "id" else auts[1]
        M = build_H_alpha_beta(H, alpha, auts[0])
        Mstar, b, d = left_dual(M)
        assert Mstar.component == M.component.inverse()
        assert check_yd_compat(Mstar).passed
        assert b.matrix.shape == (1, 36)
        report = check_duality(M)
        assert report.passed, [c.check_id for c in report.failures]
