"""
Hopf YD Verifier - Algebra Isomorphism
D(H) ≅ H*⋈H(α,β) induit par une paire en involution, et transport des modules le long de cet isomorphisme
"""
from typing import Sequence, Tuple
import logging

import numpy as np

from src.core.linear_map import LinearMap
from src.core.report import CheckResult, Report, check_identity, first_failure, make_result
from src.core.sweedler import SweedlerExpr
from src.crossed.bicomodule import AlgebraData
from src.crossed.correspondence import yd_to_dcp_module
from src.crossed.double import build_drinfeld_double, element_result
from src.hopf.algebra import HopfAlgebraData, split_left
from src.hopf.dual import left_harpoon
from src.involution.functors import functor_F, functor_G
from src.modules.yd_module import PairInInvolution, YDModule
from src.tcoalgebra.structure import dt_component

logger = logging.getLogger(__name__)


def _double_algebra(H: HopfAlgebraData) -> AlgebraData:
    return AlgebraData.of_hopf(build_drinfeld_double(H).hopf)


def pii_algebra_iso(H: HopfAlgebraData, pii: PairInInvolution) -> Tuple[LinearMap, LinearMap]:
    """
    (to_A, to_D) entre D(H) et A(α,β) = H*⋈H(α,β), sur les bases indexées i·dim(H) + h :

        to_A(p⋈h) = g⁻¹⇀p ⋈ f(β⁻¹(S(h_1))) β⁻¹(h_2)
        to_D(p⋈h) = g⇀p ⋈ f(h_1) β(h_2)
    """
    n = H.dim
    beta = pii.component.beta
    lh = left_harpoon(H)

    to_a = SweedlerExpr(H.field, [("p", n), ("h", n)])
    to_a.const(pii.g_inverse(H), "gi")
    to_a.apply(("gi", "p"), lh, "q")
    h1, h2 = split_left(to_a, H, "h", 2)
    to_a.apply(h1, H.S, "s")
    to_a.apply("s", beta.inverse_map, "bs")
    to_a.apply("bs", pii.f)
    to_a.apply(h2, beta.inverse_map, "b")

    to_d = SweedlerExpr(H.field, [("p", n), ("h", n)])
    to_d.const(pii.g, "gg")
    to_d.apply(("gg", "p"), lh, "q")
    h1, h2 = split_left(to_d, H, "h", 2)
    to_d.apply(h1, pii.f)
    to_d.apply(h2, beta.map, "b")

    flat = (n * n,)
    return (to_a.build(("q", "b")).reshaped(flat, flat),
            to_d.build(("q", "b")).reshaped(flat, flat))


def _multiplicative(check_id: str, phi: LinearMap, source: AlgebraData, target: AlgebraData) -> CheckResult:
    def lhs(e):
        e.apply(("x", "y"), source.m, "xy")
        e.apply("xy", phi, "out")
        return ("out",)

    def rhs(e):
        e.apply("x", phi, "a")
        e.apply("y", phi, "b")
        e.apply(("a", "b"), target.m, "out")
        return ("out",)

    return check_identity(check_id, source.field, [("x", source.basis), ("y", source.basis)], lhs, rhs)


def check_algebra_iso(H: HopfAlgebraData, pii: PairInInvolution) -> CheckResult:
    """to_A, to_D multiplicatives, unitaires et inverses l'une de l'autre"""
    check_id = f"pii.algebra_iso[{H.name}:{pii.component.name}:{pii.name}]"
    D = _double_algebra(H)
    A = dt_component(H, pii.component)
    to_a, to_d = pii_algebra_iso(H, pii)
    identity = LinearMap.identity(H.field, (D.dim,))
    results = [
        _multiplicative(check_id, to_a, D, A),
        _multiplicative(check_id, to_d, A, D),
        element_result(check_id, to_a.apply(D.unit), A.unit, A.basis, ("x=1",)),
        element_result(check_id, to_d.apply(A.unit), D.unit, D.basis, ("x=1",)),
    ]
    for label, composite in (("to_D∘to_A", to_a.then(to_d)), ("to_A∘to_D", to_d.then(to_a))):
        hit = composite.first_difference(identity)
        if hit is not None:
            results.append(make_result(check_id, False, (f"x={D.basis[hit[0]]}",), f"{label} is not the identity"))
    result = first_failure(results)
    if result.passed:
        logger.info(f"Verified algebra isomorphism D({H.name}) ≅ {A.name} of dimension {D.dim}")
    return result


def pullback(module_action: np.ndarray, phi: LinearMap, field) -> np.ndarray:
    """x·m = φ(x)·m : action[x, m, m′] = Σ_y φ[x, y] action[y, m, m′]"""
    return np.asarray(field.normalize(np.tensordot(phi.matrix, module_action, axes=([1], [0]))), dtype=object)


def _same_action(check_id: str, lhs: np.ndarray, rhs: np.ndarray, algebra: AlgebraData,
                 module: YDModule) -> CheckResult:
    diff = np.asarray(lhs != rhs, dtype=bool)
    if not diff.any():
        return make_result(check_id, True)
    x, m, _ = np.argwhere(diff)[0]
    return make_result(check_id, False, (f"x={algebra.basis[x]}", f"m={module.basis[m]}"), "actions differ")


def check_transport(pii: PairInInvolution, M: YDModule, N: YDModule) -> CheckResult:
    """
    M dans (α,β) : le A(α,β)-module de M tiré par to_A est le D(H)-module de F(M) ;
    N dans (id,id) : le D(H)-module de N tiré par to_D est le A(α,β)-module de G(N).
    """
    H = M.H
    check_id = f"pii.transport[{H.name}:{pii.component.name}:{M.name}:{N.name}]"
    D = _double_algebra(H)
    A = dt_component(H, pii.component)
    to_a, to_d = pii_algebra_iso(H, pii)
    field = H.field

    on_m = pullback(yd_to_dcp_module(M, A, verify=False).action, to_a, field)
    via_f = yd_to_dcp_module(functor_F(M, pii), D, verify=False).action
    on_n = pullback(yd_to_dcp_module(N, D, verify=False).action, to_d, field)
    via_g = yd_to_dcp_module(functor_G(N, pii), A, verify=False).action
    return first_failure([
        _same_action(check_id, on_m, np.asarray(via_f, dtype=object), D, M),
        _same_action(check_id, on_n, np.asarray(via_g, dtype=object), A, N),
    ])


def verify_algebra_iso(H: HopfAlgebraData, pii: PairInInvolution, modules: Sequence[YDModule],
                       unit_modules: Sequence[YDModule]) -> Report:
    report = Report(f"algebra isomorphism for {pii.component.name} with {pii.name}")
    report.add(check_algebra_iso(H, pii))
    for M in modules:
        for N in unit_modules:
            report.add(check_transport(pii, M, N))
    return report
