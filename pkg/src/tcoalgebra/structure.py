"""
Hopf YD Verifier - DT(H) Structure Maps
Composantes DT(H)_p = H*⋈H(p), comultiplications Δ_{p,q}, conjugaisons φ_p^q, antipodes S_p, R-matrices R_{p,q}
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import logging

import numpy as np

from config.settings import VERIFICATION_CONFIG
from src.core.cache_manager import cached_function
from src.core.exceptions import BudgetExceededError
from src.core.linear_map import LinearMap
from src.core.sweedler import SweedlerExpr
from src.crossed.bicomodule import AlgebraData
from src.crossed.crossed_product import a_alpha_beta
from src.hopf.algebra import HopfAlgebraData, split_left
from src.hopf.automorphisms import HopfAutomorphism
from src.hopf.dual import dual_of
from src.modules.component import GroupElementG

logger = logging.getLogger(__name__)


@cached_function(lambda H, p: (H.key(), p.key()), key_prefix="dt.")
def dt_component(H: HopfAlgebraData, p: GroupElementG) -> AlgebraData:
    """DT(H)_{(α,β)} = A(α,β), mémoïsé par les matrices exactes de α et β"""
    component = a_alpha_beta(H, p.alpha, p.beta, verify=False)
    logger.info(f"Built T-coalgebra component DT({H.name})_{p.name}")
    return component


def dt_counit(H: HopfAlgebraData) -> np.ndarray:
    """ε(p⋈h) = p(1)ε(h) sur DT(H)_(id,id) = D(H)"""
    return np.asarray(H.field.normalize(np.multiply.outer(H.unit, H.counit)), dtype=object).reshape(-1)


def _dual_h_expr(H: HopfAlgebraData) -> SweedlerExpr:
    return SweedlerExpr(H.field, [("f", H.dim), ("h", H.dim)])


def _precompose(H: HopfAlgebraData, theta: HopfAutomorphism) -> LinearMap:
    # f ↦ f∘θ sur H*
    return LinearMap.from_matrix(H.field, np.ascontiguousarray(theta.matrix.T))


@cached_function(lambda H, p, q: (H.key(), p.key(), q.key()), key_prefix="dt.")
def dt_delta(H: HopfAlgebraData, p: GroupElementG, q: GroupElementG) -> LinearMap:
    """Δ_{p,q} : DT(H)_{p∗q} → DT(H)_p ⊗ DT(H)_q, f⋈h ↦ (f_2⋈γ(h_1)) ⊗ (f_1⋈γ⁻¹βγ(h_2))"""
    n = H.dim
    beta, gamma = p.beta, q.alpha
    twist = gamma.inverse().compose(beta).compose(gamma)
    expr = _dual_h_expr(H)
    expr.apply("f", dual_of(H).delta, ("f1", "f2"))
    h1, h2 = split_left(expr, H, "h", 2)
    expr.apply(h1, gamma.map, "a")
    expr.apply(h2, twist.map, "b")
    return expr.build(("f2", "a", "f1", "b")).reshaped((n * n,), (n * n, n * n))


@cached_function(lambda H, p, q: (H.key(), p.key(), q.key()), key_prefix="dt.")
def dt_phi(H: HopfAlgebraData, p: GroupElementG, q: GroupElementG) -> LinearMap:
    """φ_p^q : DT(H)_q → DT(H)_{p∗q∗p⁻¹}, f⋈h ↦ f∘βα⁻¹ ⋈ αγ⁻¹β⁻¹γ(h)"""
    n = H.dim
    alpha, beta, gamma = p.alpha, p.beta, q.alpha
    on_dual = beta.compose(alpha.inverse())
    on_h = alpha.compose(gamma.inverse()).compose(beta.inverse()).compose(gamma)
    return _precompose(H, on_dual).tensor(on_h.map).reshaped((n * n,), (n * n,))


@cached_function(lambda H, p: (H.key(), p.key()), key_prefix="dt.")
def dt_antipode(H: HopfAlgebraData, p: GroupElementG) -> LinearMap:
    """S_p : DT(H)_p → DT(H)_{p⁻¹}, f⋈h ↦ (ε⋈αβ(S(h)))·(f∘S⁻¹⋈1), produit dans DT(H)_{p⁻¹}"""
    n = H.dim
    field = H.field
    target = dt_component(H, p.inverse())
    mul = LinearMap(field, (n, n, n, n), (n, n), target.mul.reshape((n,) * 6))
    twist = p.alpha.compose(p.beta)

    expr = _dual_h_expr(H)
    expr.apply("h", H.S, "s")
    expr.apply("s", twist.map, "t")
    expr.apply("f", dual_of(H).S_inv, "fs")
    expr.const(H.counit, "e")
    expr.const(H.unit, "one")
    expr.apply(("e", "t", "fs", "one"), mul, ("o1", "o2"))
    return expr.build(("o1", "o2")).reshaped((n * n,), (n * n,))


def _r_element(H: HopfAlgebraData, left: np.ndarray) -> np.ndarray:
    """Σ_i (ε⋈L(e_i)) ⊗ (e^i⋈1) en tableau [(a,h), (b,k)]"""
    n = H.dim
    outer = np.multiply.outer(np.multiply.outer(H.counit, left), H.unit)
    data = np.transpose(outer, (0, 2, 1, 3)).reshape(n * n, n * n)
    return np.asarray(H.field.normalize(data), dtype=object)


def dt_rmatrix(H: HopfAlgebraData, p: GroupElementG,
               q: Optional[GroupElementG] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    R_{p,q} = Σ_i (ε⋈β⁻¹(e_i)) ⊗ (e^i⋈1) dans DT(H)_p ⊗ DT(H)_q et son inverse
    Σ_i (ε⋈β⁻¹(S(e_i))) ⊗ (e^i⋈1). Aucune dépendance en q.
    """
    beta_inv = p.beta.inverse_matrix
    R = _r_element(H, beta_inv)
    R_inv = _r_element(H, H.field.normalize(np.dot(H.antipode, beta_inv)))
    return R, R_inv


# === PARTIE FINIE P ⊆ G ===
def closure(H: HopfAlgebraData, generators: Sequence[GroupElementG],
            cap: Optional[int] = None) -> Tuple[GroupElementG, ...]:
    """Sous-groupe engendré, unité en tête ; au-delà de cap éléments lève BudgetExceededError"""
    cap = cap or int(VERIFICATION_CONFIG.get('closure_cap', 64))
    elements: List[GroupElementG] = [GroupElementG.unit(H)]
    steps = list(generators) + [g.inverse() for g in generators]

    def known(x: GroupElementG) -> bool:
        return any(x == y for y in elements)

    frontier = list(elements)
    for g in generators:
        if not known(g):
            elements.append(g)
            frontier.append(g)
    while frontier:
        x = frontier.pop(0)
        for s in steps:
            y = x * s
            if known(y):
                continue
            if len(elements) >= cap:
                raise BudgetExceededError(f"subgroup of G generated over {H.name} exceeds {cap} elements")
            elements.append(y)
            frontier.append(y)
    logger.info(f"Closure over {H.name}: {[e.name for e in elements]}")
    return tuple(elements)


@dataclass(frozen=True, eq=False)
class TCoalgebraData:
    """DT(H) restreinte à une partie finie P ⊆ G stable par ∗ et inverse"""
    H: HopfAlgebraData
    elements: Tuple[GroupElementG, ...]

    @classmethod
    def generate(cls, H: HopfAlgebraData, generators: Sequence[GroupElementG],
                 cap: Optional[int] = None) -> "TCoalgebraData":
        return cls(H, closure(H, generators, cap))

    @property
    def unit(self) -> GroupElementG:
        return self.elements[0]

    @property
    def dim(self) -> int:
        return self.H.dim ** 2

    @property
    def counit(self) -> np.ndarray:
        return dt_counit(self.H)

    def component(self, p: GroupElementG) -> AlgebraData:
        return dt_component(self.H, p)

    def delta(self, p: GroupElementG, q: GroupElementG) -> LinearMap:
        return dt_delta(self.H, p, q)

    def phi(self, p: GroupElementG, q: GroupElementG) -> LinearMap:
        return dt_phi(self.H, p, q)

    def antipode(self, p: GroupElementG) -> LinearMap:
        return dt_antipode(self.H, p)

    def rmatrix(self, p: GroupElementG, q: GroupElementG) -> Tuple[np.ndarray, np.ndarray]:
        return dt_rmatrix(self.H, p, q)

    def __repr__(self) -> str:
        return f"TCoalgebraData(DT({self.H.name}), |P|={len(self.elements)})"
