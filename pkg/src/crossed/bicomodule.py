"""
Hopf YD Verifier - Bicomodule Algebras
Algèbres associatives, H-bicomodule algèbres, H(α,β) et conditions du Yetter-Drinfeld datum
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple
import logging

import numpy as np

from src.core.linear_map import LinearMap
from src.core.report import CheckResult, Report, check_identity, first_failure, make_result
from src.core.sweedler import SweedlerExpr
from src.hopf.algebra import HopfAlgebraData
from src.hopf.automorphisms import HopfAutomorphism
from src.modules.yd_module import YDModule

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AlgebraData:
    """Algèbre associative unitaire : e_i e_j = Σ mul[i,j,k] e_k"""
    field: object
    basis: Tuple[str, ...]
    mul: np.ndarray
    unit: np.ndarray
    name: str = "A"

    def __post_init__(self) -> None:
        object.__setattr__(self, "mul", np.asarray(self.mul, dtype=object))
        object.__setattr__(self, "unit", np.asarray(self.unit, dtype=object))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def m(self) -> LinearMap:
        return LinearMap(self.field, (self.dim, self.dim), (self.dim,), self.mul)

    def product(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.m.apply(np.multiply.outer(np.asarray(a, dtype=object), np.asarray(b, dtype=object)))

    def check_algebra(self, check_id: str) -> CheckResult:
        """(xy)z = x(yz) sur les triplets de base, 1x = x = x1"""
        three = [("x", self.basis), ("y", self.basis), ("z", self.basis)]

        def assoc_lhs(e):
            e.apply(("x", "y"), self.m, "xy")
            e.apply(("xy", "z"), self.m, "out")
            return ("out",)

        def assoc_rhs(e):
            e.apply(("y", "z"), self.m, "yz")
            e.apply(("x", "yz"), self.m, "out")
            return ("out",)

        def unit_left(e):
            e.const(self.unit, "u")
            e.apply(("u", "x"), self.m, "out")
            return ("out",)

        def unit_right(e):
            e.const(self.unit, "u")
            e.apply(("x", "u"), self.m, "out")
            return ("out",)

        one = [("x", self.basis)]
        return first_failure([
            check_identity(check_id, self.field, three, assoc_lhs, assoc_rhs),
            check_identity(check_id, self.field, one, unit_left, lambda e: ("x",)),
            check_identity(check_id, self.field, one, unit_right, lambda e: ("x",)),
        ])

    @classmethod
    def of_hopf(cls, H: HopfAlgebraData) -> "AlgebraData":
        return cls(H.field, H.basis, H.mul, H.unit, H.name)


@dataclass(frozen=True, eq=False)
class BicomoduleAlgebra:
    """λ(a) = Σ left[a, h, a'] e_h⊗e_a', ρ(a) = Σ right[a, a', h] e_a'⊗e_h"""
    H: HopfAlgebraData
    algebra: AlgebraData
    left: np.ndarray
    right: np.ndarray
    name: str = "A"

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @cached_property
    def lam(self) -> LinearMap:
        return LinearMap(self.H.field, (self.dim,), (self.H.dim, self.dim), np.asarray(self.left, dtype=object))

    @cached_property
    def rho(self) -> LinearMap:
        return LinearMap(self.H.field, (self.dim,), (self.dim, self.H.dim), np.asarray(self.right, dtype=object))

    def three_leg(self, expr: SweedlerExpr, wire: str, prefix: str = "a") -> Tuple[str, str, str]:
        """a ↦ a_{−1}⊗a_{0}⊗a_{1} = a_[−1] ⊗ a_[0]<0> ⊗ a_[0]<1>"""
        minus, zero, plus = f"{prefix}{{-1}}", f"{prefix}{{0}}", f"{prefix}{{1}}"
        expr.apply(wire, self.lam, (minus, f"{prefix}#"))
        expr.apply(f"{prefix}#", self.rho, (zero, plus))
        return minus, zero, plus


def build_H_ab_bicomodule(H: HopfAlgebraData, alpha: HopfAutomorphism, beta: HopfAutomorphism) -> BicomoduleAlgebra:
    """H(α,β) : H comme algèbre, h ↦ α(h_1)⊗h_2 et h ↦ h_1⊗β(h_2)"""
    left = SweedlerExpr(H.field, [("h", H.dim)])
    left.apply("h", H.delta, ("h1", "h2"))
    left.apply("h1", alpha.map, "a")
    right = SweedlerExpr(H.field, [("h", H.dim)])
    right.apply("h", H.delta, ("h1", "h2"))
    right.apply("h2", beta.map, "b")
    return BicomoduleAlgebra(H, AlgebraData.of_hopf(H), left.build(("a", "h2")).data,
                             right.build(("h1", "b")).data, name=f"{H.name}({alpha.name},{beta.name})")


def check_bicomodule(B: BicomoduleAlgebra, check_id: Optional[str] = None) -> CheckResult:
    """λ et ρ coassociatives, counitaires, morphismes d'algèbres, et qui commutent"""
    H, A = B.H, B.algebra
    field = H.field
    check_id = check_id or f"dcp.bicomodule[{B.name}]"
    one = [("a", A.basis)]
    two = [("a", A.basis), ("b", A.basis)]

    def left_coassoc_lhs(e):
        e.apply("a", B.lam, ("x", "a0"))
        e.apply("x", H.delta, ("o1", "o2"))
        return ("o1", "o2", "a0")

    def left_coassoc_rhs(e):
        e.apply("a", B.lam, ("o1", "y"))
        e.apply("y", B.lam, ("o2", "a0"))
        return ("o1", "o2", "a0")

    def left_counit(e):
        e.apply("a", B.lam, ("x", "a0"))
        e.apply("x", H.eps)
        return ("a0",)

    def right_coassoc_lhs(e):
        e.apply("a", B.rho, ("a0", "x"))
        e.apply("x", H.delta, ("o1", "o2"))
        return ("a0", "o1", "o2")

    def right_coassoc_rhs(e):
        e.apply("a", B.rho, ("y", "o2"))
        e.apply("y", B.rho, ("a0", "o1"))
        return ("a0", "o1", "o2")

    def right_counit(e):
        e.apply("a", B.rho, ("a0", "x"))
        e.apply("x", H.eps)
        return ("a0",)

    def left_mult_lhs(e):
        e.apply(("a", "b"), A.m, "ab")
        e.apply("ab", B.lam, ("o1", "o2"))
        return ("o1", "o2")

    def left_mult_rhs(e):
        e.apply("a", B.lam, ("a1", "a0"))
        e.apply("b", B.lam, ("b1", "b0"))
        e.apply(("a1", "b1"), H.m, "o1")
        e.apply(("a0", "b0"), A.m, "o2")
        return ("o1", "o2")

    def right_mult_lhs(e):
        e.apply(("a", "b"), A.m, "ab")
        e.apply("ab", B.rho, ("o1", "o2"))
        return ("o1", "o2")

    def right_mult_rhs(e):
        e.apply("a", B.rho, ("a0", "a1"))
        e.apply("b", B.rho, ("b0", "b1"))
        e.apply(("a0", "b0"), A.m, "o1")
        e.apply(("a1", "b1"), H.m, "o2")
        return ("o1", "o2")

    def left_unit(e):
        e.const(A.unit, "u")
        e.apply("u", B.lam, ("o1", "o2"))
        return ("o1", "o2")

    def left_unit_rhs(e):
        e.const(H.unit, "o1")
        e.const(A.unit, "o2")
        return ("o1", "o2")

    def right_unit(e):
        e.const(A.unit, "u")
        e.apply("u", B.rho, ("o1", "o2"))
        return ("o1", "o2")

    def right_unit_rhs(e):
        e.const(A.unit, "o1")
        e.const(H.unit, "o2")
        return ("o1", "o2")

    def commute_lhs(e):
        e.apply("a", B.lam, ("o1", "x"))
        e.apply("x", B.rho, ("o2", "o3"))
        return ("o1", "o2", "o3")

    def commute_rhs(e):
        e.apply("a", B.rho, ("x", "o3"))
        e.apply("x", B.lam, ("o1", "o2"))
        return ("o1", "o2", "o3")

    results = []
    for condition, inputs, lhs, rhs in (
        ("left coaction coassociative", one, left_coassoc_lhs, left_coassoc_rhs),
        ("left coaction counital", one, left_counit, lambda e: ("a",)),
        ("left coaction multiplicative", two, left_mult_lhs, left_mult_rhs),
        ("left coaction unital", [], left_unit, left_unit_rhs),
        ("right coaction coassociative", one, right_coassoc_lhs, right_coassoc_rhs),
        ("right coaction counital", one, right_counit, lambda e: ("a",)),
        ("right coaction multiplicative", two, right_mult_lhs, right_mult_rhs),
        ("right coaction unital", [], right_unit, right_unit_rhs),
        ("coactions commute", one, commute_lhs, commute_rhs),
    ):
        r = check_identity(check_id, field, inputs, lhs, rhs)
        if not r.passed:
            r = make_result(check_id, False, r.counterexample, condition)
        results.append(r)
    return first_failure(results)


# === YETTER-DRINFELD DATUM ===
@dataclass(frozen=True, eq=False)
class DatumModule:
    """A-module à gauche et H-comodule à droite : action [a, m, m'], coaction [m, m', h]"""
    A: BicomoduleAlgebra
    action: np.ndarray
    coaction: np.ndarray
    basis: Tuple[str, ...]
    name: str = "M"

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def act(self) -> LinearMap:
        return LinearMap(self.A.H.field, (self.A.dim, self.dim), (self.dim,), np.asarray(self.action, dtype=object))

    @cached_property
    def coact(self) -> LinearMap:
        return LinearMap(self.A.H.field, (self.dim,), (self.dim, self.A.H.dim), np.asarray(self.coaction, dtype=object))

    @classmethod
    def of_yd_module(cls, A: BicomoduleAlgebra, M: YDModule) -> "DatumModule":
        """Un module sur H vu comme module sur H(α,β), qui est H comme algèbre"""
        return cls(A, M.action, M.coaction, M.basis, M.name)


def check_yd_datum_module(A: BicomoduleAlgebra, M: DatumModule) -> Report:
    """Les deux formes équivalentes de la compatibilité, vérifiées séparément, et leur accord"""
    H = A.H
    tag = f"[{A.name}:{M.name}]"
    report = Report(f"Yetter-Drinfeld datum compatibility of {M.name} over {A.name}")
    inputs = [("a", A.algebra.basis), ("m", M.basis)]

    def first_lhs(e):
        e.apply(("a", "m"), M.act, "am")
        e.apply("am", M.coact, ("o0", "o1"))
        return ("o0", "o1")

    def first_rhs(e):
        minus, zero, plus = A.three_leg(e, "a")
        e.apply("m", M.coact, ("m0", "m1"))
        e.apply((zero, "m0"), M.act, "o0")
        e.apply(minus, H.S_inv, "s")
        e.apply((plus, "m1"), H.m, "pm")
        e.apply(("pm", "s"), H.m, "o1")
        return ("o0", "o1")

    def second_lhs(e):
        e.apply("a", A.rho, ("a0", "a1"))
        e.apply("m", M.coact, ("m0", "m1"))
        e.apply(("a0", "m0"), M.act, "o0")
        e.apply(("a1", "m1"), H.m, "o1")
        return ("o0", "o1")

    def second_rhs(e):
        e.apply("a", A.lam, ("am1", "a0"))
        e.apply(("a0", "m"), M.act, "x")
        e.apply("x", M.coact, ("o0", "x1"))
        e.apply(("x1", "am1"), H.m, "o1")
        return ("o0", "o1")

    first = report.add(check_identity("dcp.datum_compat" + tag, H.field, inputs, first_lhs, first_rhs))
    second = report.add(check_identity("dcp.datum_compat_alt" + tag, H.field, inputs, second_lhs, second_rhs))
    agree = first.passed == second.passed
    report.add(make_result("dcp.datum_agree" + tag, agree, None if agree else (f"M={M.name}",),
                           "" if agree else f"datum_compat={first.passed}, datum_compat_alt={second.passed}"))
    return report
