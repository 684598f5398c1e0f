"""
Hopf YD Verifier - Category Isomorphism
Foncteurs F : YD(α,β) → YD(id,id) et G : YD(id,id) → YD(α,β) induits par une paire en involution
"""
from typing import Sequence
import logging

from src.core.exceptions import ComponentMismatchError
from src.core.report import CheckResult, Report, first_failure, make_result
from src.core.sweedler import SweedlerExpr
from src.category.monoidal import YDMorphism, same_object, tensor_module
from src.hopf.algebra import split_left
from src.hopf.automorphisms import HopfAutomorphism
from src.modules.compatibility import check_module_axioms, check_yd_compat
from src.modules.component import GroupElementG
from src.modules.yd_module import PairInInvolution, YDModule, build_pii_module, check_pair_in_involution

logger = logging.getLogger(__name__)


def _require_component(M: YDModule, expected: GroupElementG, functor: str) -> None:
    if M.component != expected:
        raise ComponentMismatchError(
            f"{functor} expects a module in {expected.name}, {M.name} lies in {M.component.name}"
        )


def functor_F(M: YDModule, pii: PairInInvolution) -> YDModule:
    """h→m = f(β⁻¹(S(h_1))) β⁻¹(h_2)·m, m ↦ m_(0) ⊗ m_(1)g⁻¹"""
    _require_component(M, pii.component, "F")
    H = M.H
    beta = pii.component.beta

    act = SweedlerExpr(H.field, [("h", H.dim), ("m", M.dim)])
    h1, h2 = split_left(act, H, "h", 2)
    act.apply(h1, H.S, "s")
    act.apply("s", beta.inverse_map, "bs")
    act.apply("bs", pii.f)
    act.apply(h2, beta.inverse_map, "b")
    act.apply(("b", "m"), M.act, "out")

    coact = SweedlerExpr(H.field, [("m", M.dim)])
    coact.apply("m", M.coact, ("m0", "m1"))
    coact.const(pii.g_inverse(H), "gi")
    coact.apply(("m1", "gi"), H.m, "o1")

    return YDModule(H, GroupElementG.unit(H), act.build(("out",)).data, coact.build(("m0", "o1")).data,
                    M.basis, name=f"F({M.name})")


def functor_G(N: YDModule, pii: PairInInvolution) -> YDModule:
    """h⇀n = f(h_1) β(h_2)·n, n ↦ n_(0) ⊗ n_(1)g"""
    H = N.H
    _require_component(N, GroupElementG.unit(H), "G")
    beta = pii.component.beta

    act = SweedlerExpr(H.field, [("h", H.dim), ("n", N.dim)])
    h1, h2 = split_left(act, H, "h", 2)
    act.apply(h1, pii.f)
    act.apply(h2, beta.map, "b")
    act.apply(("b", "n"), N.act, "out")

    coact = SweedlerExpr(H.field, [("n", N.dim)])
    coact.apply("n", N.coact, ("n0", "n1"))
    coact.const(pii.g, "g")
    coact.apply(("n1", "g"), H.m, "o1")

    return YDModule(H, pii.component, act.build(("out",)).data, coact.build(("n0", "o1")).data,
                    N.basis, name=f"G({N.name})")


def _structure_result(check_id: str, M: YDModule) -> CheckResult:
    results = list(check_module_axioms(M).checks) + list(check_yd_compat(M).checks)
    failed = first_failure(results)
    if failed.passed:
        return make_result(check_id, True)
    return make_result(check_id, False, failed.counterexample, f"{M.name}: {failed.check_id}")


def check_functor_compat(pii: PairInInvolution, M: YDModule, N: YDModule) -> CheckResult:
    """F(M) dans (id,id) et G(N) dans (α,β) sont des modules de Yetter-Drinfeld"""
    H = M.H
    check_id = f"pii.functor_compat[{H.name}:{pii.component.name}:{pii.name}]"
    FM, GN = functor_F(M, pii), functor_G(N, pii)
    if not FM.component.is_unit() or GN.component != pii.component:
        return make_result(check_id, False, (f"M={M.name}",), "functor lands in the wrong component")
    return first_failure([_structure_result(check_id, FM), _structure_result(check_id, GN)])


def check_functor_inverse(pii: PairInInvolution, M: YDModule, N: YDModule) -> CheckResult:
    """F(G(N)) = N et G(F(M)) = M sur les tenseurs de structure"""
    check_id = f"pii.functor_inverse[{M.H.name}:{pii.component.name}:{pii.name}]"
    return first_failure([
        same_object(check_id, functor_F(functor_G(N, pii), pii), N),
        same_object(check_id, functor_G(functor_F(M, pii), pii), M),
    ])


def check_functor_morphisms(pii: PairInInvolution, source_side: Sequence[YDMorphism],
                            target_side: Sequence[YDMorphism]) -> CheckResult:
    """
    F et G sont l'identité sur les matrices de morphismes : φ : M → M′ dans (α,β)
    reste un morphisme F(M) → F(M′), et de même pour G depuis (id,id).
    """
    check_id = f"pii.functor_morphisms[{pii.component.name}:{pii.name}]"
    transported = [(phi, YDMorphism(functor_F(phi.source, pii), functor_F(phi.target, pii), phi.matrix,
                                    f"F({phi.name})")) for phi in source_side]
    transported += [(phi, YDMorphism(functor_G(phi.source, pii), functor_G(phi.target, pii), phi.matrix,
                                     f"G({phi.name})")) for phi in target_side]
    for phi, image in transported:
        before = phi.verify()
        if not before.passed:
            return make_result(check_id, False, (f"φ={phi.name}",) + (before.counterexample or ()),
                               "input is not a morphism")
        after = image.verify()
        if not after.passed:
            return make_result(check_id, False, (f"φ={image.name}",) + (after.counterexample or ()),
                               "transported matrix is not a morphism")
    logger.debug(f"{len(transported)} morphisms transported by F and G for {pii.name}")
    return make_result(check_id, True)


def check_g_factorization(pii: PairInInvolution, N: YDModule) -> CheckResult:
    """G(N) = _fk^g ⊗ N"""
    H = N.H
    K = build_pii_module(H, pii)
    return same_object(f"pii.g_factorization[{H.name}:{pii.component.name}:{pii.name}]",
                       functor_G(N, pii), tensor_module(K, N))


def check_anti_yd_factorization(pii: PairInInvolution, M: YDModule) -> CheckResult:
    """M = G(F(M)) = _fk^g ⊗ F(M) pour M dans la composante de la paire"""
    H = M.H
    check_id = f"pii.anti_yd_factorization[{H.name}:{pii.component.name}:{M.name}]"
    FM = functor_F(M, pii)
    return first_failure([
        same_object(check_id, functor_G(FM, pii), M),
        same_object(check_id, tensor_module(build_pii_module(H, pii), FM), M),
    ])


def check_alpha_alpha(H, alpha: HopfAutomorphism, modules: Sequence[YDModule],
                      unit_modules: Sequence[YDModule]) -> CheckResult:
    """(ε,1) est une paire pour (α,α) et ses foncteurs sont inverses l'un de l'autre"""
    component = GroupElementG(alpha, alpha)
    pii = PairInInvolution(H.counit, H.unit, component, "ε", "1")
    check_id = f"pii.alpha_alpha[{H.name}:{alpha.name}]"
    pair = check_pair_in_involution(H, pii)
    if not pair.passed:
        return make_result(check_id, False, pair.counterexample, "(ε,1) is not a pair for (α,α)")
    results = [make_result(check_id, True)]
    for M in modules:
        results.append(same_object(check_id, functor_G(functor_F(M, pii), pii), M))
    for N in unit_modules:
        results.append(same_object(check_id, functor_F(functor_G(N, pii), pii), N))
    return first_failure(results)


def verify_functors(pii: PairInInvolution, modules: Sequence[YDModule],
                    unit_modules: Sequence[YDModule]) -> Report:
    """Compatibilité, inversibilité et factorisation sur tous les modules donnés"""
    report = Report(f"functors F, G for {pii.component.name} with {pii.name}")
    for M in modules:
        for N in unit_modules:
            report.add(check_functor_compat(pii, M, N))
            report.add(check_functor_inverse(pii, M, N))
    for N in unit_modules:
        report.add(check_g_factorization(pii, N))
    for M in modules:
        report.add(check_anti_yd_factorization(pii, M))
    return report
