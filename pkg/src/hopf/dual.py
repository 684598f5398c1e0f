"""
Hopf YD Verifier - Dual Hopf Algebra
H* (produit de convolution), accouplement d'évaluation et actions régulières ⇀, ↼
"""
from dataclasses import dataclass
from typing import Literal
import logging

import numpy as np

from src.core.linear_map import LinearMap
from src.core.report import CheckResult, Report, check_identity, first_failure, make_result
from src.hopf.algebra import HopfAlgebraData

logger = logging.getLogger(__name__)

Side = Literal["left", "right"]


def dual_label(label: str) -> str:
    return f"e^{label}"


def dual_of(H: HopfAlgebraData) -> HopfAlgebraData:
    """
    Dual dans la base duale {e^i} : (pq)(h) = p(h_1)q(h_2), Δp(h⊗l) = p(hl),
    1* = ε, ε*(p) = p(1), S*(p) = p∘S.
    """
    dual = HopfAlgebraData(
        H.field,
        tuple(dual_label(b) for b in H.basis),
        mul=np.transpose(H.comul, (1, 2, 0)).copy(),
        unit=H.counit.copy(),
        comul=np.transpose(H.mul, (2, 0, 1)).copy(),
        counit=H.unit.copy(),
        antipode=H.antipode.T.copy(),
        antipode_inv=H.antipode_inv.T.copy(),
        name=f"dual({H.name})",
    )
    logger.info(f"Built dual Hopf algebra {dual.name}")
    return dual


@dataclass(frozen=True)
class DualBasisPairing:
    """Accouplement ⟨e^i, e_j⟩ = δ_ij entre H* et H"""
    H: HopfAlgebraData

    @property
    def matrix(self) -> np.ndarray:
        return self.H.field.identity(self.H.dim)

    def evaluate(self, p: np.ndarray, h: np.ndarray) -> object:
        return self.H.field.canonical(np.dot(np.asarray(p, dtype=object), np.asarray(h, dtype=object)))

    def dual_basis(self, i: int) -> np.ndarray:
        return self.H.basis_vector(i)

    def check(self) -> CheckResult:
        """e^i(e_j) = δ_ij et Σ e_i e^i(h) = h"""
        H = self.H
        check_id = f"hopf.dual_basis[{H.name}]"
        for i in range(H.dim):
            for j in range(H.dim):
                if self.evaluate(self.dual_basis(i), H.basis_vector(j)) != (1 if i == j else 0):
                    return make_result(check_id, False, (dual_label(H.basis[i]), H.basis[j]))

        def reconstruct(e):
            # Σ_i e_i ⊗ e^i, puis e^i évalué sur h
            e.const(self.matrix, ("e", "ed"))
            e.pair("ed", "h")
            return ("e",)

        return check_identity(check_id, H.field, [("h", H.basis)], reconstruct, lambda e: ("h",))


def left_harpoon(H: HopfAlgebraData) -> LinearMap:
    """H⊗H* → H*, (h⇀p)(l) = p(lh) : tableau [i, a, l] = mul[l, i, a]"""
    return LinearMap(H.field, (H.dim, H.dim), (H.dim,), np.transpose(H.mul, (1, 2, 0)).copy())


def right_harpoon(H: HopfAlgebraData) -> LinearMap:
    """H*⊗H → H*, (p↼h)(l) = p(hl) : tableau [a, i, l] = mul[i, l, a]"""
    return LinearMap(H.field, (H.dim, H.dim), (H.dim,), np.transpose(H.mul, (2, 0, 1)).copy())


def regular_action(side: Side, H: HopfAlgebraData, h: np.ndarray, p: np.ndarray) -> np.ndarray:
    """h⇀p (side="left") ou p↼h (side="right"), p donné par ses valeurs sur la base"""
    h = np.asarray(h, dtype=object)
    p = np.asarray(p, dtype=object)
    if side == "left":
        return left_harpoon(H).apply(np.multiply.outer(h, p))
    if side == "right":
        return right_harpoon(H).apply(np.multiply.outer(p, h))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def check_regular_actions(H: HopfAlgebraData) -> Report:
    """⇀ action à gauche, ↼ action à droite, unitaires"""
    report = Report(f"regular actions on {H.name}*")
    dual_labels = tuple(dual_label(b) for b in H.basis)
    lh, rh = left_harpoon(H), right_harpoon(H)
    field = H.field

    def left_assoc_lhs(e):
        e.apply(("h", "k"), H.m, "hk")
        e.apply(("hk", "p"), lh, "out")
        return ("out",)

    def left_assoc_rhs(e):
        e.apply(("k", "p"), lh, "kp")
        e.apply(("h", "kp"), lh, "out")
        return ("out",)

    def left_unit_lhs(e):
        e.const(H.unit, "u")
        e.apply(("u", "p"), lh, "out")
        return ("out",)

    inputs3 = [("h", H.basis), ("k", H.basis), ("p", dual_labels)]
    left_id = f"hopf.regular_action_left[{H.name}]"
    report.add(first_failure([
        check_identity(left_id, field, inputs3, left_assoc_lhs, left_assoc_rhs),
        check_identity(left_id, field, [("p", dual_labels)], left_unit_lhs, lambda e: ("p",)),
    ]))

    def right_assoc_lhs(e):
        e.apply(("h", "k"), H.m, "hk")
        e.apply(("p", "hk"), rh, "out")
        return ("out",)

    def right_assoc_rhs(e):
        e.apply(("p", "h"), rh, "ph")
        e.apply(("ph", "k"), rh, "out")
        return ("out",)

    def right_unit_lhs(e):
        e.const(H.unit, "u")
        e.apply(("p", "u"), rh, "out")
        return ("out",)

    inputs3r = [("p", dual_labels), ("h", H.basis), ("k", H.basis)]
    right_id = f"hopf.regular_action_right[{H.name}]"
    report.add(first_failure([
        check_identity(right_id, field, inputs3r, right_assoc_lhs, right_assoc_rhs),
        check_identity(right_id, field, [("p", dual_labels)], right_unit_lhs, lambda e: ("p",)),
    ]))
    return report


def check_double_dual(H: HopfAlgebraData) -> CheckResult:
    """(H*)* coïncide avec H sous e_i ↦ e_i, tableau par tableau"""
    dd = dual_of(dual_of(H))
    for attr in ("mul", "unit", "comul", "counit", "antipode", "antipode_inv"):
        if not np.all(np.asarray(getattr(dd, attr) == getattr(H, attr), dtype=bool)):
            return make_result(f"hopf.double_dual[{H.name}]", False, (attr,))
    return make_result(f"hopf.double_dual[{H.name}]", True)
