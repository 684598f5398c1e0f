"""
Hopf YD Verifier - Yetter-Drinfeld Modules
Modules (α,β)-Yetter-Drinfeld : action [h, m, m'], coaction [m, m', h], composante (α,β)
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple
import logging

import numpy as np

from src.core.exceptions import AxiomViolationError, ShapeMismatchError
from src.core.linear_map import LinearMap
from src.core.report import CheckResult, check_identity, first_failure, make_result
from src.core.sweedler import SweedlerExpr
from src.hopf.algebra import HopfAlgebraData, split_left
from src.hopf.automorphisms import HopfAutomorphism
from src.modules.component import GroupElementG

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class YDModule:
    """h·e_m = Σ action[h, m, m'] e_m', ρ(e_m) = Σ coaction[m, m', h] e_m'⊗e_h"""
    H: HopfAlgebraData
    component: GroupElementG
    action: np.ndarray
    coaction: np.ndarray
    basis: Tuple[str, ...]
    name: str = "M"

    def __post_init__(self) -> None:
        d, n = self.H.dim, len(self.basis)
        if self.component.dim != d or self.component.beta.dim != d:
            raise ShapeMismatchError(
                f"component {self.component.name} acts on dimension {self.component.dim}, algebra has {d}"
            )
        action = np.asarray(self.action, dtype=object)
        coaction = np.asarray(self.coaction, dtype=object)
        if action.shape != (d, n, n):
            raise ShapeMismatchError(f"action of {self.name} has shape {action.shape}, expected {(d, n, n)}")
        if coaction.shape != (n, n, d):
            raise ShapeMismatchError(f"coaction of {self.name} has shape {coaction.shape}, expected {(n, n, d)}")
        object.__setattr__(self, "action", action)
        object.__setattr__(self, "coaction", coaction)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def field(self):
        return self.H.field

    @cached_property
    def act(self) -> LinearMap:
        return LinearMap(self.field, (self.H.dim, self.dim), (self.dim,), self.action)

    @cached_property
    def coact(self) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.dim, self.H.dim), self.coaction)

    def with_component(self, component: GroupElementG, name: Optional[str] = None) -> "YDModule":
        """Mêmes structures, composante réétiquetée (sans vérification)"""
        return YDModule(self.H, component, self.action, self.coaction, self.basis, name or self.name)

    def same_structure(self, other: "YDModule") -> bool:
        """Égalité stricte des objets : composante et tenseurs de structure identiques"""
        if self.H is not other.H and self.H.basis != other.H.basis:
            return False
        if self.action.shape != other.action.shape or self.coaction.shape != other.coaction.shape:
            return False
        return (self.component == other.component
                and bool(np.all(np.asarray(self.action == other.action, dtype=bool)))
                and bool(np.all(np.asarray(self.coaction == other.coaction, dtype=bool))))

    def __repr__(self) -> str:
        return f"YDModule({self.name}, dim={self.dim}, component={self.component.name})"


@dataclass(frozen=True, eq=False)
class PairInInvolution:
    """(f, g) : f caractère de H, g group-like, α(h) = g⁻¹ f(h_1) β(h_2) f(S(h_3)) g"""
    f: np.ndarray
    g: np.ndarray
    component: GroupElementG
    f_label: str = "f"
    g_label: str = "g"

    @property
    def name(self) -> str:
        return f"({self.f_label},{self.g_label})"

    def g_inverse(self, H: HopfAlgebraData) -> np.ndarray:
        return H.S.apply(self.g)


def check_pair_in_involution(H: HopfAlgebraData, pii: PairInInvolution) -> CheckResult:
    check_id = f"pii.pair[{H.name}:{pii.component.name}:{pii.name}]"
    f = np.asarray(pii.f, dtype=object)
    g = np.asarray(pii.g, dtype=object)
    if f.shape != (H.dim,) or g.shape != (H.dim,):
        return make_result(check_id, False, (), "f or g has the wrong dimension")
    if not H.is_character(f):
        return make_result(check_id, False, (), "f is not an algebra map")
    if not H.is_group_like(g):
        return make_result(check_id, False, (), "g is not group-like")
    alpha, beta = pii.component.alpha, pii.component.beta
    g_inv = pii.g_inverse(H)

    def rhs(e):
        h1, h2, h3 = split_left(e, H, "h", 3)
        e.apply(h1, f)
        e.apply(h2, beta.map, "b")
        e.apply(h3, H.S, "s")
        e.apply("s", f)
        e.const(g_inv, "gi")
        e.const(g, "gg")
        e.apply(("gi", "b"), H.m, "t")
        e.apply(("t", "gg"), H.m, "out")
        return ("out",)

    def lhs(e):
        e.apply("h", alpha.map, "out")
        return ("out",)

    return check_identity(check_id, H.field, [("h", H.basis)], lhs, rhs)


# === CONSTRUCTEURS ===
def trivial_module(H: HopfAlgebraData, component: Optional[GroupElementG] = None) -> YDModule:
    """k avec h·1 = ε(h), 1 ↦ 1⊗1"""
    field = H.field
    action = field.zeros((H.dim, 1, 1))
    action[:, 0, 0] = H.counit
    coaction = field.zeros((1, 1, H.dim))
    coaction[0, 0, :] = H.unit
    return YDModule(H, component or GroupElementG.unit(H), action, coaction, ("1",), name="k")


def build_H_alpha_beta(H: HopfAlgebraData, alpha: HopfAutomorphism, beta: HopfAutomorphism) -> YDModule:
    """H_{α,β} : h·h' = β(h_2) h' α(S⁻¹(h_1)), coaction Δ"""
    expr = SweedlerExpr(H.field, [("h", H.dim), ("x", H.dim)])
    h1, h2 = split_left(expr, H, "h", 2)
    expr.apply(h1, H.S_inv, "s")
    expr.apply("s", alpha.map, "a")
    expr.apply(h2, beta.map, "b")
    expr.apply(("b", "x"), H.m, "bx")
    expr.apply(("bx", "a"), H.m, "out")
    action = expr.build(("out",)).data
    module = YDModule(H, GroupElementG(alpha, beta), action, H.comul.copy(), H.basis,
                      name=f"H_{{{alpha.name},{beta.name}}}")
    logger.info(f"Built {module.name} over {H.name}")
    return module


def build_pii_module(H: HopfAlgebraData, pii: PairInInvolution, d: int = 1) -> YDModule:
    """_fV^g de dimension d : h·v = f(h)v, v ↦ v⊗g"""
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    result = check_pair_in_involution(H, pii)
    if not result.passed:
        raise AxiomViolationError(result.check_id, result.counterexample)
    field = H.field
    action = field.zeros((H.dim, d, d))
    coaction = field.zeros((d, d, H.dim))
    for i in range(d):
        action[:, i, i] = pii.f
        coaction[i, i, :] = pii.g
    basis = ("1",) if d == 1 else tuple(f"v{i + 1}" for i in range(d))
    return YDModule(H, pii.component, action, coaction, basis, name=f"_{pii.f_label}k^{pii.g_label}" if d == 1
                    else f"_{pii.f_label}V{d}^{pii.g_label}")
