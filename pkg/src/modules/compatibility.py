"""
Hopf YD Verifier - Yetter-Drinfeld Compatibility
Axiomes de module/comodule, compatibilité (α,β)-YD sous ses deux formes, morphismes
"""
from typing import List, Optional, Sequence, Tuple
import logging

import numpy as np

from src.core import linalg
from src.core.exceptions import ComponentMismatchError
from src.core.linear_map import LinearMap
from src.core.report import CheckResult, Report, check_identity, first_failure
from src.hopf.algebra import split_left
from src.modules.component import GroupElementG
from src.modules.yd_module import YDModule

logger = logging.getLogger(__name__)


def _tag(M: YDModule) -> str:
    return f"[{M.H.name}:{M.name}:{M.component.name}]"


def _inputs(M: YDModule):
    return [("h", M.H.basis), ("m", M.basis)]


def check_module_axioms(M: YDModule) -> Report:
    """1·m = m, (hh')·m = h·(h'·m), (id⊗ε)ρ = id, (ρ⊗id)ρ = (id⊗Δ)ρ"""
    H = M.H
    report = Report(f"module/comodule axioms of {M.name}")
    field = M.field

    def unit_lhs(e):
        e.const(H.unit, "u")
        e.apply(("u", "m"), M.act, "out")
        return ("out",)

    def assoc_lhs(e):
        e.apply(("h", "k"), H.m, "hk")
        e.apply(("hk", "m"), M.act, "out")
        return ("out",)

    def assoc_rhs(e):
        e.apply(("k", "m"), M.act, "km")
        e.apply(("h", "km"), M.act, "out")
        return ("out",)

    report.add(first_failure([
        check_identity("yd.module" + _tag(M), field, [("m", M.basis)], unit_lhs, lambda e: ("m",)),
        check_identity("yd.module" + _tag(M), field, [("h", H.basis), ("k", H.basis), ("m", M.basis)],
                       assoc_lhs, assoc_rhs),
    ]))

    def counit_lhs(e):
        e.apply("m", M.coact, ("m0", "m1"))
        e.apply("m1", H.eps)
        return ("m0",)

    def coassoc_lhs(e):
        e.apply("m", M.coact, ("a", "a1"))
        e.apply("a", M.coact, ("o0", "o1"))
        return ("o0", "o1", "a1")

    def coassoc_rhs(e):
        e.apply("m", M.coact, ("o0", "a"))
        e.apply("a", H.delta, ("o1", "o2"))
        return ("o0", "o1", "o2")

    report.add(first_failure([
        check_identity("yd.comodule" + _tag(M), field, [("m", M.basis)], counit_lhs, lambda e: ("m",)),
        check_identity("yd.comodule" + _tag(M), field, [("m", M.basis)], coassoc_lhs, coassoc_rhs),
    ]))
    return report


def _coaction_of_action(M: YDModule):
    """(h·m)_(0) ⊗ (h·m)_(1)"""
    def side(e):
        e.apply(("h", "m"), M.act, "hm")
        e.apply("hm", M.coact, ("o0", "o1"))
        return ("o0", "o1")
    return side


def compat_21(M: YDModule) -> CheckResult:
    """(h·m)_(0)⊗(h·m)_(1) = h_2·m_(0) ⊗ β(h_3) m_(1) α(S⁻¹(h_1))"""
    H, alpha, beta = M.H, M.component.alpha, M.component.beta

    def rhs(e):
        h1, h2, h3 = split_left(e, H, "h", 3)
        e.apply("m", M.coact, ("m0", "m1"))
        e.apply((h2, "m0"), M.act, "o0")
        e.apply(h3, beta.map, "b")
        e.apply(h1, H.S_inv, "s")
        e.apply("s", alpha.map, "a")
        e.apply(("b", "m1"), H.m, "bm")
        e.apply(("bm", "a"), H.m, "o1")
        return ("o0", "o1")

    return check_identity("yd.compat" + _tag(M), M.field, _inputs(M), _coaction_of_action(M), rhs)


def compat_22(M: YDModule) -> CheckResult:
    """h_1·m_(0) ⊗ β(h_2)m_(1) = (h_2·m)_(0) ⊗ (h_2·m)_(1) α(h_1)"""
    H, alpha, beta = M.H, M.component.alpha, M.component.beta

    def lhs(e):
        h1, h2 = split_left(e, H, "h", 2)
        e.apply("m", M.coact, ("m0", "m1"))
        e.apply((h1, "m0"), M.act, "o0")
        e.apply(h2, beta.map, "b")
        e.apply(("b", "m1"), H.m, "o1")
        return ("o0", "o1")

    def rhs(e):
        h1, h2 = split_left(e, H, "h", 2)
        e.apply((h2, "m"), M.act, "x")
        e.apply("x", M.coact, ("o0", "x1"))
        e.apply(h1, alpha.map, "a")
        e.apply(("x1", "a"), H.m, "o1")
        return ("o0", "o1")

    return check_identity("yd.compat_alt" + _tag(M), M.field, _inputs(M), lhs, rhs)


def check_yd_compat(M: YDModule) -> Report:
    """Les deux formes de la compatibilité, vérifiées indépendamment"""
    report = Report(f"YD compatibility of {M.name} in {M.component.name}")
    report.add(compat_21(M))
    report.add(compat_22(M))
    return report


def equivalence_21_22(M: YDModule) -> bool:
    """Vrai ssi les deux formes donnent le même verdict"""
    return compat_21(M).passed == compat_22(M).passed


def _twisted_compat(M: YDModule, twist: np.ndarray, check_id: str) -> CheckResult:
    """(h·m)_(0)⊗(h·m)_(1) = h_2·m_(0) ⊗ h_3 m_(1) T(h_1)"""
    H = M.H
    twist_map = LinearMap(M.field, (H.dim,), (H.dim,), twist)

    def rhs(e):
        h1, h2, h3 = split_left(e, H, "h", 3)
        e.apply("m", M.coact, ("m0", "m1"))
        e.apply((h2, "m0"), M.act, "o0")
        e.apply(h1, twist_map, "t")
        e.apply((h3, "m1"), H.m, "hm")
        e.apply(("hm", "t"), H.m, "o1")
        return ("o0", "o1")

    return check_identity(check_id, M.field, _inputs(M), _coaction_of_action(M), rhs)


def check_anti_yd_compat(M: YDModule) -> CheckResult:
    """Forme anti-Yetter-Drinfeld, sans regarder la composante portée par M"""
    return _twisted_compat(M, M.H.antipode, "yd.anti_yd" + _tag(M))


def check_l_yd_compat(M: YDModule, l: int) -> CheckResult:
    """Forme l-Yetter-Drinfeld avec S^{2l-1}(h_1)"""
    H = M.H
    twist = linalg.matrix_power(H.field, H.antipode, 2 * l - 1, inverse_matrix=H.antipode_inv)
    return _twisted_compat(M, twist, f"yd.l_yd[{H.name}:{M.name}:l={l}]")


# === MORPHISMES ===
def morphism_report(M: YDModule, N: YDModule, phi: np.ndarray) -> CheckResult:
    """φ(h·m) = h·φ(m) et ρ_N∘φ = (φ⊗id)∘ρ_M sur toutes les entrées de base"""
    if not M.component == N.component:
        raise ComponentMismatchError(
            f"{M.name} lies in {M.component.name} but {N.name} lies in {N.component.name}"
        )
    phi_map = LinearMap(M.field, (M.dim,), (N.dim,), np.asarray(phi, dtype=object))
    check_id = f"yd.morphism[{M.H.name}:{M.name}->{N.name}]"

    def linear_lhs(e):
        e.apply(("h", "m"), M.act, "hm")
        e.apply("hm", phi_map, "out")
        return ("out",)

    def linear_rhs(e):
        e.apply("m", phi_map, "pm")
        e.apply(("h", "pm"), N.act, "out")
        return ("out",)

    def colinear_lhs(e):
        e.apply("m", phi_map, "pm")
        e.apply("pm", N.coact, ("o0", "o1"))
        return ("o0", "o1")

    def colinear_rhs(e):
        e.apply("m", M.coact, ("m0", "o1"))
        e.apply("m0", phi_map, "o0")
        return ("o0", "o1")

    return first_failure([
        check_identity(check_id, M.field, _inputs(M), linear_lhs, linear_rhs),
        check_identity(check_id, M.field, [("m", M.basis)], colinear_lhs, colinear_rhs),
    ])


def check_morphism(M: YDModule, N: YDModule, phi: np.ndarray) -> bool:
    phi = np.asarray(phi, dtype=object)
    if phi.shape != (M.dim, N.dim):
        return False
    return morphism_report(M, N, phi).passed


# === PERTURBATIONS ===
def perturbed_candidates(M: YDModule, count: int, seed: int = 42,
                         components: Sequence[GroupElementG] = ()) -> List[YDModule]:
    """
    Candidats qui restent des modules et comodules sans être forcément compatibles :
    action conjuguée par une diagonale inversible aléatoire, composante tirée
    parmi components (si donnée).
    """
    rng = np.random.default_rng(seed)
    field = M.field
    nonzero = [v for v in (-3, -2, -1, 1, 2, 3) if not field.is_zero(v)]
    candidates = []
    for k in range(count):
        diag = [field.canonical(int(rng.choice(nonzero))) for _ in range(M.dim)]
        d = field.zeros((M.dim, M.dim))
        d_inv = field.zeros((M.dim, M.dim))
        for i, v in enumerate(diag):
            d[i, i] = v
            d_inv[i, i] = field.inv(v)
        # h·'m = D(h·(D⁻¹m)) en convention ligne
        action = np.tensordot(np.tensordot(d_inv, M.action, axes=([1], [1])), d, axes=([2], [0]))
        action = field.normalize(np.transpose(action, (1, 0, 2)))
        component = M.component
        if components:
            component = components[int(rng.integers(len(components)))]
        candidates.append(YDModule(M.H, component, np.asarray(action, dtype=object), M.coaction,
                                   M.basis, name=f"{M.name}~{k}"))
    return candidates


def equivalence_property(candidates: Sequence[YDModule]) -> Tuple[int, Optional[str]]:
    """Nombre de candidats pour lesquels les deux formes s'accordent, premier désaccord éventuel"""
    agreed, first_disagreement = 0, None
    for c in candidates:
        if equivalence_21_22(c):
            agreed += 1
        elif first_disagreement is None:
            first_disagreement = c.name
    return agreed, first_disagreement
