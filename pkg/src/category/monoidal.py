"""
Hopf YD Verifier - Tensor Products and Conjugation
Produit tensoriel M⊗N, foncteurs de conjugaison ^{(α,β)}N et morphismes de la catégorie
"""
from dataclasses import dataclass
from functools import cached_property
import logging

import numpy as np

from src.core.exceptions import MalformedInputError
from src.core.linear_map import LinearMap
from src.core.report import CheckResult, first_failure, make_result
from src.core.sweedler import SweedlerExpr
from src.hopf.algebra import split_left
from src.modules.compatibility import check_yd_compat, morphism_report
from src.modules.component import GroupElementG
from src.modules.yd_module import YDModule, trivial_module

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class YDMorphism:
    """Morphisme source → target donné par sa matrice [i_source, j_target]"""
    source: YDModule
    target: YDModule
    matrix: np.ndarray
    name: str = "φ"

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", np.asarray(self.matrix, dtype=object))

    @cached_property
    def map(self) -> LinearMap:
        return LinearMap(self.source.field, (self.source.dim,), (self.target.dim,), self.matrix)

    def verify(self) -> CheckResult:
        """H-linéarité et H-colinéarité ; lève ComponentMismatchError si les composantes diffèrent"""
        return morphism_report(self.source, self.target, self.matrix)

    def then(self, other: "YDMorphism") -> "YDMorphism":
        return YDMorphism(self.source, other.target, self.map.then(other.map).matrix,
                          f"{other.name}∘{self.name}")

    def __repr__(self) -> str:
        return f"YDMorphism({self.name}: {self.source.name} -> {self.target.name})"


def _same_algebra(M: YDModule, N: YDModule) -> None:
    if M.H is not N.H and (M.H.basis != N.H.basis or M.H.name != N.H.name):
        raise MalformedInputError(f"{M.name} is over {M.H.name} but {N.name} is over {N.H.name}")


def _tensor_labels(M: YDModule, N: YDModule):
    return tuple(f"{a}⊗{b}" for a in M.basis for b in N.basis)


def tensor_module(M: YDModule, N: YDModule) -> YDModule:
    """
    M⊗N pour M dans (α,β), N dans (γ,δ) : composante (α,β)∗(γ,δ),
    h·(m⊗n) = γ(h_1)·m ⊗ γ⁻¹βγ(h_2)·n et m⊗n ↦ m_(0)⊗n_(0) ⊗ n_(1)m_(1).
    """
    _same_algebra(M, N)
    H = M.H
    field = H.field
    beta = M.component.beta
    gamma = N.component.alpha
    twist = gamma.inverse().compose(beta).compose(gamma)

    act = SweedlerExpr(field, [("h", H.dim), ("m", M.dim), ("n", N.dim)])
    h1, h2 = split_left(act, H, "h", 2)
    act.apply(h1, gamma.map, "g")
    act.apply(("g", "m"), M.act, "om")
    act.apply(h2, twist.map, "t")
    act.apply(("t", "n"), N.act, "on")
    action = act.build(("om", "on")).data.reshape(H.dim, M.dim * N.dim, M.dim * N.dim)

    coact = SweedlerExpr(field, [("m", M.dim), ("n", N.dim)])
    coact.apply("m", M.coact, ("m0", "m1"))
    coact.apply("n", N.coact, ("n0", "n1"))
    coact.apply(("n1", "m1"), H.m, "o1")
    coaction = coact.build(("m0", "n0", "o1")).data.reshape(M.dim * N.dim, M.dim * N.dim, H.dim)

    return YDModule(H, M.component * N.component, action, coaction, _tensor_labels(M, N),
                    name=f"{M.name}⊗{N.name}")


def conjugate_module(p: GroupElementG, N: YDModule) -> YDModule:
    """
    ^pN pour p = (α,β) et N dans (γ,δ) : h⇀n = γ⁻¹βγα⁻¹(h)·n,
    n ↦ n_(0) ⊗ αβ⁻¹(n_(1)), composante p∗(γ,δ)∗p⁻¹.
    """
    field = N.field
    alpha, beta = p.alpha, p.beta
    gamma = N.component.alpha
    acting = gamma.inverse().compose(beta).compose(gamma).compose(alpha.inverse())
    coacting = alpha.compose(beta.inverse())
    action = field.normalize(np.tensordot(acting.matrix, N.action, axes=([1], [0])))
    coaction = field.normalize(np.tensordot(N.coaction, coacting.matrix, axes=([2], [0])))
    name = N.name if p.is_unit() else f"^{p.name}{N.name}"
    return YDModule(N.H, p.conjugate(N.component), np.asarray(action, dtype=object),
                    np.asarray(coaction, dtype=object), N.basis, name=name)


def same_object(check_id: str, lhs: YDModule, rhs: YDModule) -> CheckResult:
    """Égalité stricte de deux objets, le premier désaccord en détail"""
    if lhs.component != rhs.component:
        return make_result(check_id, False, (f"M={lhs.name}",), "components differ")
    if lhs.action.shape != rhs.action.shape:
        return make_result(check_id, False, (f"M={lhs.name}",), "dimensions differ")
    diff = np.asarray(lhs.action != rhs.action, dtype=bool)
    if diff.any():
        h, m, _ = np.argwhere(diff)[0]
        return make_result(check_id, False, (f"h={lhs.H.basis[h]}", f"m={lhs.basis[m]}"), "actions differ")
    diff = np.asarray(lhs.coaction != rhs.coaction, dtype=bool)
    if diff.any():
        m = np.argwhere(diff)[0][0]
        return make_result(check_id, False, (f"m={lhs.basis[m]}",), "coactions differ")
    return make_result(check_id, True)


def check_conjugate_composite(p: GroupElementG, q: GroupElementG, N: YDModule) -> CheckResult:
    """^{p∗q}N = ^p(^qN)"""
    return same_object(f"tcat.conjugate_composite[{N.H.name}:{p.name}:{q.name}:{N.name}]",
                       conjugate_module(p * q, N), conjugate_module(p, conjugate_module(q, N)))


def check_conjugate_tensor(p: GroupElementG, M: YDModule, N: YDModule) -> CheckResult:
    """^p(M⊗N) = ^pM ⊗ ^pN"""
    return same_object(f"tcat.conjugate_tensor[{M.H.name}:{p.name}:{M.name}:{N.name}]",
                       conjugate_module(p, tensor_module(M, N)),
                       tensor_module(conjugate_module(p, M), conjugate_module(p, N)))


def check_tensor_unit(M: YDModule) -> CheckResult:
    """k⊗M = M = M⊗k sur les tenseurs de structure"""
    k = trivial_module(M.H)
    check_id = f"tcat.tensor_unit[{M.H.name}:{M.name}]"
    left, right = tensor_module(k, M), tensor_module(M, k)
    for candidate in (left, right):
        result = same_object(check_id, candidate, M)
        if not result.passed:
            return result
    return make_result(check_id, True)


def check_tensor_assoc(M: YDModule, N: YDModule, P: YDModule) -> CheckResult:
    """(M⊗N)⊗P = M⊗(N⊗P)"""
    return same_object(f"tcat.tensor_assoc[{M.H.name}:{M.name}:{N.name}:{P.name}]",
                       tensor_module(tensor_module(M, N), P), tensor_module(M, tensor_module(N, P)))


def check_conjugation_functorial(p: GroupElementG, phi: YDMorphism) -> CheckResult:
    """Un morphisme φ: M → N vérifié reste un morphisme ^pM → ^pN avec la même matrice"""
    check_id = f"tcat.conjugate_functorial[{phi.source.H.name}:{p.name}:{phi.name}]"
    if not phi.verify().passed:
        return make_result(check_id, False, (f"φ={phi.name}",), "not a morphism before conjugation")
    conjugated = YDMorphism(conjugate_module(p, phi.source), conjugate_module(p, phi.target),
                            phi.matrix, phi.name).verify()
    if conjugated.passed:
        return make_result(check_id, True)
    return make_result(check_id, False, conjugated.counterexample, "not a morphism after conjugation")


def _compat_result(check_id: str, module: YDModule) -> CheckResult:
    result = first_failure(check_yd_compat(module).checks)
    return make_result(check_id, result.passed, result.counterexample, result.detail)


def check_tensor_compat(M: YDModule, N: YDModule) -> CheckResult:
    """M⊗N est un objet de la composante (α,β)∗(γ,δ)"""
    return _compat_result(f"tcat.tensor_compat[{M.H.name}:{M.name}:{N.name}]", tensor_module(M, N))


def check_conjugate_compat(p: GroupElementG, N: YDModule) -> CheckResult:
    """^pN est un objet de la composante p∗(γ,δ)∗p⁻¹"""
    return _compat_result(f"tcat.conjugate_compat[{N.H.name}:{p.name}:{N.name}]", conjugate_module(p, N))
