"""
Hopf YD Verifier - Module Correspondence
_H𝒴𝒟^H(α,β) ≅ modules à gauche sur A(α,β) = H*⋈H(α,β)
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple
import logging

import numpy as np

from src.core.exceptions import AxiomViolationError
from src.core.linear_map import LinearMap
from src.core.report import CheckResult, Report, check_identity, first_failure, make_result
from src.core.sweedler import SweedlerExpr
from src.crossed.bicomodule import AlgebraData
from src.crossed.crossed_product import a_alpha_beta
from src.modules.component import GroupElementG
from src.modules.yd_module import YDModule

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CrossedModule:
    """Module à gauche sur une algèbre : x·e_m = Σ action[x, m, m'] e_m'"""
    algebra: AlgebraData
    action: np.ndarray
    basis: Tuple[str, ...]
    name: str = "M"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def act(self) -> LinearMap:
        return LinearMap(self.algebra.field, (self.algebra.dim, self.dim), (self.dim,),
                         np.asarray(self.action, dtype=object))


def check_crossed_module_axioms(M: CrossedModule) -> CheckResult:
    """1·m = m et (xy)·m = x·(y·m)"""
    A = M.algebra
    check_id = f"dcp.module_axioms[{A.name}:{M.name}]"

    def unit_lhs(e):
        e.const(A.unit, "u")
        e.apply(("u", "m"), M.act, "out")
        return ("out",)

    def assoc_lhs(e):
        e.apply(("x", "y"), A.m, "xy")
        e.apply(("xy", "m"), M.act, "out")
        return ("out",)

    def assoc_rhs(e):
        e.apply(("y", "m"), M.act, "ym")
        e.apply(("x", "ym"), M.act, "out")
        return ("out",)

    return first_failure([
        check_identity(check_id, A.field, [("m", M.basis)], unit_lhs, lambda e: ("m",)),
        check_identity(check_id, A.field, [("x", A.basis), ("y", A.basis), ("m", M.basis)],
                       assoc_lhs, assoc_rhs),
    ])


def yd_to_dcp_module(M: YDModule, algebra: Optional[AlgebraData] = None,
                     verify: bool = True) -> CrossedModule:
    """(p⋈h)·m = p((h·m)_(1)) (h·m)_(0)"""
    H = M.H
    algebra = algebra or a_alpha_beta(H, M.component.alpha, M.component.beta)
    expr = SweedlerExpr(H.field, [("p", H.dim), ("h", H.dim), ("m", M.dim)])
    expr.apply(("h", "m"), M.act, "hm")
    expr.apply("hm", M.coact, ("o", "x1"))
    expr.pair("p", "x1")
    action = expr.build(("o",)).data.reshape(H.dim * H.dim, M.dim, M.dim)
    module = CrossedModule(algebra, action, M.basis, name=M.name)
    if verify:
        result = check_crossed_module_axioms(module)
        if not result.passed:
            raise AxiomViolationError(result.check_id, result.counterexample)
    return module


def dcp_module_to_yd(module: CrossedModule, H, component: GroupElementG) -> YDModule:
    """h·m = (ε⋈h)·m, m ↦ Σ (e^i⋈1)·m ⊗ e_i"""
    n = H.dim
    field = H.field
    blocks = np.asarray(module.action, dtype=object).reshape(n, n, module.dim, module.dim)
    action = field.normalize(np.tensordot(H.counit, blocks, axes=([0], [0])))
    coaction = field.normalize(np.transpose(np.tensordot(blocks, H.unit, axes=([1], [0])), (1, 2, 0)))
    return YDModule(H, component, np.asarray(action, dtype=object), np.asarray(coaction, dtype=object),
                    module.basis, name=module.name)


def check_module_roundtrip(M: YDModule, algebra: Optional[AlgebraData] = None) -> Report:
    """Aller-retour dans les deux sens, égalité exacte des tenseurs de structure"""
    tag = f"[{M.H.name}:{M.name}:{M.component.name}]"
    report = Report(f"module correspondence for {M.name}")
    module = yd_to_dcp_module(M, algebra, verify=False)
    report.add(check_crossed_module_axioms(module))

    back = dcp_module_to_yd(module, M.H, M.component)
    check_id = "dcp.module_roundtrip" + tag
    if not back.same_structure(M):
        report.add(make_result(check_id, False, (f"M={M.name}",), "yd -> dcp -> yd changed the structure"))
        return report
    again = yd_to_dcp_module(back, module.algebra, verify=False)
    same = bool(np.all(np.asarray(again.action == module.action, dtype=bool)))
    report.add(make_result(check_id, same, None if same else (f"M={M.name}",),
                           "" if same else "dcp -> yd -> dcp changed the action"))
    return report
