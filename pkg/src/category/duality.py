"""
Hopf YD Verifier - Duals
Duaux à gauche M* et à droite *M, évaluation d, coévaluation b, identités de zigzag
"""
from typing import Tuple
import logging

import numpy as np

from src.core.exceptions import ComponentMismatchError
from src.core.linear_map import LinearMap
from src.core.report import CheckResult, Report, compare_maps, first_failure, make_result
from src.category.monoidal import YDMorphism, tensor_module
from src.hopf.dual import dual_label
from src.modules.compatibility import check_yd_compat
from src.modules.yd_module import YDModule, trivial_module

logger = logging.getLogger(__name__)


def _dual_structures(M: YDModule, acting: np.ndarray, coacting: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """(h·f)(m) = f(T(h)·m), f_(0)(m) f_(1) = f(m_(0)) U(m_(1))"""
    field = M.field
    action = np.tensordot(acting, np.transpose(M.action, (0, 2, 1)), axes=([1], [0]))
    coaction = np.tensordot(np.transpose(M.coaction, (1, 0, 2)), coacting, axes=([2], [0]))
    return (np.asarray(field.normalize(action), dtype=object),
            np.asarray(field.normalize(coaction), dtype=object))


def _pairing(M: YDModule) -> np.ndarray:
    return M.field.identity(M.dim).reshape(M.dim * M.dim)


def left_dual(M: YDModule) -> Tuple[YDModule, YDMorphism, YDMorphism]:
    """
    M* : (h·f)(m) = f(β⁻¹α⁻¹S(h)·m), coaction f(m_(0)) ⊗ S⁻¹(m_(1)),
    b(1) = Σ e_i⊗e^i, d(f⊗m) = f(m).
    """
    H = M.H
    field = H.field
    alpha, beta = M.component.alpha, M.component.beta
    acting = field.normalize(np.dot(np.dot(H.antipode, alpha.inverse_matrix), beta.inverse_matrix))
    action, coaction = _dual_structures(M, acting, H.antipode_inv)
    Mstar = YDModule(H, M.component.inverse(), action, coaction,
                     tuple(dual_label(b) for b in M.basis), name=f"{M.name}*")
    k = trivial_module(H)
    b = YDMorphism(k, tensor_module(M, Mstar), _pairing(M).reshape(1, -1), name=f"b_{M.name}")
    d = YDMorphism(tensor_module(Mstar, M), k, _pairing(M).reshape(-1, 1), name=f"d_{M.name}")
    return Mstar, b, d


def right_dual(M: YDModule) -> Tuple[YDModule, YDMorphism, YDMorphism]:
    """
    *M : (h·f)(m) = f(α⁻¹β⁻¹S⁻¹(h)·m), coaction f(m_(0)) ⊗ S(m_(1)),
    b(1) = Σ e^i⊗e_i, d(m⊗f) = f(m).
    """
    H = M.H
    field = H.field
    alpha, beta = M.component.alpha, M.component.beta
    acting = field.normalize(np.dot(np.dot(H.antipode_inv, beta.inverse_matrix), alpha.inverse_matrix))
    action, coaction = _dual_structures(M, acting, H.antipode)
    starM = YDModule(H, M.component.inverse(), action, coaction,
                     tuple(dual_label(b) for b in M.basis), name=f"*{M.name}")
    k = trivial_module(H)
    b = YDMorphism(k, tensor_module(starM, M), _pairing(M).reshape(1, -1), name=f"b'_{M.name}")
    d = YDMorphism(tensor_module(M, starM), k, _pairing(M).reshape(-1, 1), name=f"d'_{M.name}")
    return starM, b, d


def _snake(check_id: str, first: LinearMap, second: LinearMap, labels) -> CheckResult:
    n = len(labels)
    composite = first.then(second).reshaped((n,), (n,))
    return compare_maps(check_id, composite, LinearMap.identity(first.field, (n,)), [("m", labels)])


def _morphisms_result(check_id: str, morphisms) -> CheckResult:
    try:
        result = first_failure([phi.verify() for phi in morphisms])
    except ComponentMismatchError as e:
        return make_result(check_id, False, (), str(e))
    return make_result(check_id, result.passed, result.counterexample, result.detail)


def check_duality(M: YDModule) -> Report:
    """Compatibilité des duaux, b et d morphismes, les quatre identités de zigzag"""
    H = M.H
    field = H.field
    tag = f"[{H.name}:{M.name}]"
    report = Report(f"duals of {M.name}")
    n = M.dim
    id_n = LinearMap.identity(field, (n,))
    expected = M.component.inverse()

    Mstar, b, d = left_dual(M)
    starM, b_r, d_r = right_dual(M)

    compat = [r for dual in (Mstar, starM) for r in check_yd_compat(dual).checks]
    compat = first_failure(compat)
    component_ok = Mstar.component == expected and starM.component == expected
    report.add(make_result("tcat.dual_compat" + tag, compat.passed and component_ok,
                           compat.counterexample if not compat.passed else None,
                           "" if component_ok else "dual lies in the wrong component"))

    report.add(_morphisms_result("tcat.dual_morphisms" + tag, (b, d, b_r, d_r)))

    left_id = "tcat.left_dual_snake" + tag
    report.add(first_failure([
        _snake(left_id, b.map.tensor(id_n), id_n.tensor(d.map), M.basis),
        _snake(left_id, id_n.tensor(b.map), d.map.tensor(id_n), Mstar.basis),
    ]))
    right_id = "tcat.right_dual_snake" + tag
    report.add(first_failure([
        _snake(right_id, id_n.tensor(b_r.map), d_r.map.tensor(id_n), M.basis),
        _snake(right_id, b_r.map.tensor(id_n), id_n.tensor(d_r.map), starM.basis),
    ]))
    return report
