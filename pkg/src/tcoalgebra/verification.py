"""
Hopf YD Verifier - DT(H) Verification
Identités de T-coalgèbre quasitriangulaire sur P et équivalence Rep(DT(H)) ≅ YD(H)
"""
from itertools import product
from typing import Callable, Iterable, Sequence, Tuple
import logging

import numpy as np

from src.core import linalg
from src.core.exceptions import SingularMatrixError
from src.core.linear_map import LinearMap
from src.core.report import CheckResult, Report, check_identity, compare_maps, first_failure, make_result
from src.category.braiding import braiding
from src.category.monoidal import conjugate_module, tensor_module
from src.crossed.bicomodule import AlgebraData
from src.crossed.correspondence import yd_to_dcp_module
from src.crossed.double import build_drinfeld_double, element_result, tensor_pair_product
from src.modules.component import GroupElementG
from src.modules.yd_module import YDModule
from src.tcoalgebra.structure import TCoalgebraData, dt_component, dt_delta, dt_phi, dt_rmatrix

logger = logging.getLogger(__name__)

Instance = Tuple[Tuple[str, ...], Callable[[], CheckResult]]


def _aggregate(check_id: str, instances: Iterable[Instance]) -> CheckResult:
    """Première instance en échec, préfixée par ses éléments de P"""
    for where, run in instances:
        result = run()
        if not result.passed:
            return make_result(check_id, False, where + (result.counterexample or ()), result.detail)
    return make_result(check_id, True)


def _names(**elements: GroupElementG) -> Tuple[str, ...]:
    return tuple(f"{k}={v.name}" for k, v in elements.items())


# === Δ ===
def check_delta_algebra(T: TCoalgebraData, p: GroupElementG, q: GroupElementG) -> CheckResult:
    """Δ_{p,q}(xy) = Δ_{p,q}(x)Δ_{p,q}(y) et Δ_{p,q}(1) = 1⊗1"""
    H = T.H
    check_id = f"dt.delta_algebra[{H.name}]"
    source, left, right = T.component(p * q), T.component(p), T.component(q)
    delta = T.delta(p, q)

    def mult_lhs(e):
        e.apply(("x", "y"), source.m, "xy")
        e.apply("xy", delta, ("o1", "o2"))
        return ("o1", "o2")

    def mult_rhs(e):
        e.apply("x", delta, ("x1", "x2"))
        e.apply("y", delta, ("y1", "y2"))
        e.apply(("x1", "y1"), left.m, "o1")
        e.apply(("x2", "y2"), right.m, "o2")
        return ("o1", "o2")

    def unit_lhs(e):
        e.const(source.unit, "u")
        e.apply("u", delta, ("o1", "o2"))
        return ("o1", "o2")

    def unit_rhs(e):
        e.const(left.unit, "o1")
        e.const(right.unit, "o2")
        return ("o1", "o2")

    two = [("x", source.basis), ("y", source.basis)]
    return first_failure([
        check_identity(check_id, H.field, two, mult_lhs, mult_rhs),
        check_identity(check_id, H.field, [], unit_lhs, unit_rhs),
    ])


def check_delta_coassoc(T: TCoalgebraData, p: GroupElementG, q: GroupElementG,
                        r: GroupElementG) -> CheckResult:
    """(Δ_{p,q}⊗id)∘Δ_{p∗q,r} = (id⊗Δ_{q,r})∘Δ_{p,q∗r}"""
    H = T.H

    def lhs(e):
        e.apply("x", T.delta(p * q, r), ("a", "o3"))
        e.apply("a", T.delta(p, q), ("o1", "o2"))
        return ("o1", "o2", "o3")

    def rhs(e):
        e.apply("x", T.delta(p, q * r), ("o1", "b"))
        e.apply("b", T.delta(q, r), ("o2", "o3"))
        return ("o1", "o2", "o3")

    return check_identity(f"dt.delta_coassoc[{H.name}]", H.field, [("x", T.component(p * q * r).basis)], lhs, rhs)


def check_delta_counit(T: TCoalgebraData, p: GroupElementG) -> CheckResult:
    """(ε⊗id)∘Δ_{(id,id),p} = id = (id⊗ε)∘Δ_{p,(id,id)}"""
    H = T.H
    check_id = f"dt.delta_counit[{H.name}]"
    eps = LinearMap(H.field, (T.dim,), (), T.counit)
    ident = LinearMap.identity(H.field, (T.dim,))
    labels = [("x", T.component(p).basis)]
    left = T.delta(T.unit, p).then(eps.tensor(ident))
    right = T.delta(p, T.unit).then(ident.tensor(eps))
    return first_failure([compare_maps(check_id, left, ident, labels),
                          compare_maps(check_id, right, ident, labels)])


# === φ ===
def check_phi_algebra(T: TCoalgebraData, p: GroupElementG, q: GroupElementG) -> CheckResult:
    """φ_p^q bijective, multiplicative et unitaire"""
    H = T.H
    check_id = f"dt.phi_algebra[{H.name}]"
    phi = T.phi(p, q)
    source, target = T.component(q), T.component(p.conjugate(q))
    try:
        linalg.inverse(H.field, phi.matrix)
    except SingularMatrixError:
        return make_result(check_id, False, (), "not bijective")

    def mult_lhs(e):
        e.apply(("x", "y"), source.m, "xy")
        e.apply("xy", phi, "out")
        return ("out",)

    def mult_rhs(e):
        e.apply("x", phi, "a")
        e.apply("y", phi, "b")
        e.apply(("a", "b"), target.m, "out")
        return ("out",)

    def unit_lhs(e):
        e.const(source.unit, "u")
        e.apply("u", phi, "out")
        return ("out",)

    def unit_rhs(e):
        e.const(target.unit, "out")
        return ("out",)

    two = [("x", source.basis), ("y", source.basis)]
    return first_failure([
        check_identity(check_id, H.field, two, mult_lhs, mult_rhs),
        check_identity(check_id, H.field, [], unit_lhs, unit_rhs),
    ])


def check_phi_group(T: TCoalgebraData, p: GroupElementG, p2: GroupElementG, q: GroupElementG) -> CheckResult:
    """φ_{p∗p′}^q = φ_p^{p′∗q∗p′⁻¹}∘φ_{p′}^q"""
    lhs = T.phi(p * p2, q)
    rhs = T.phi(p2, q).then(T.phi(p, p2.conjugate(q)))
    return compare_maps(f"dt.phi_group[{T.H.name}]", lhs, rhs, [("x", T.component(q).basis)])


def check_phi_delta(T: TCoalgebraData, p: GroupElementG, q: GroupElementG, r: GroupElementG) -> CheckResult:
    """(φ_p^q⊗φ_p^r)∘Δ_{q,r} = Δ_{p∗q∗p⁻¹,p∗r∗p⁻¹}∘φ_p^{q∗r}"""
    def lhs(e):
        e.apply("x", T.delta(q, r), ("a", "b"))
        e.apply("a", T.phi(p, q), "o1")
        e.apply("b", T.phi(p, r), "o2")
        return ("o1", "o2")

    def rhs(e):
        e.apply("x", T.phi(p, q * r), "y")
        e.apply("y", T.delta(p.conjugate(q), p.conjugate(r)), ("o1", "o2"))
        return ("o1", "o2")

    return check_identity(f"dt.phi_delta[{T.H.name}]", T.H.field, [("x", T.component(q * r).basis)], lhs, rhs)


def check_phi_counit(T: TCoalgebraData, p: GroupElementG) -> CheckResult:
    """ε∘φ_p = ε sur DT(H)_(id,id)"""
    H = T.H
    eps = LinearMap(H.field, (T.dim,), (), T.counit)
    return compare_maps(f"dt.phi_counit[{H.name}]", T.phi(p, T.unit).then(eps), eps,
                        [("x", T.component(T.unit).basis)])


# === ANTIPODES ET R-MATRICES ===
def check_antipode(T: TCoalgebraData, p: GroupElementG) -> CheckResult:
    """m∘(S_{p⁻¹}⊗id)∘Δ_{p⁻¹,p} = 1_p ε = m∘(id⊗S_{p⁻¹})∘Δ_{p,p⁻¹} sur DT(H)_(id,id)"""
    H = T.H
    check_id = f"dt.antipode[{H.name}]"
    p_inv = p.inverse()
    target = T.component(p)
    S = T.antipode(p_inv)
    labels = [("x", T.component(T.unit).basis)]

    def left(e):
        e.apply("x", T.delta(p_inv, p), ("a", "b"))
        e.apply("a", S, "s")
        e.apply(("s", "b"), target.m, "out")
        return ("out",)

    def right(e):
        e.apply("x", T.delta(p, p_inv), ("a", "b"))
        e.apply("b", S, "s")
        e.apply(("a", "s"), target.m, "out")
        return ("out",)

    def expected(e):
        e.apply("x", T.counit)
        e.const(target.unit, "out")
        return ("out",)

    return first_failure([check_identity(check_id, H.field, labels, left, expected),
                          check_identity(check_id, H.field, labels, right, expected)])


def check_antipode_unit_component(T: TCoalgebraData) -> CheckResult:
    """S_(id,id) coïncide avec l'antipode de D(H) obtenue par inverse de convolution"""
    D = build_drinfeld_double(T.H)
    return compare_maps(f"dt.antipode_unit_component[{T.H.name}]", T.antipode(T.unit), D.hopf.S,
                        [("x", D.basis)])


def check_r_invertible(T: TCoalgebraData, p: GroupElementG, q: GroupElementG) -> CheckResult:
    """R_{p,q}·R_{p,q}⁻¹ = 1⊗1 = R_{p,q}⁻¹·R_{p,q} dans DT(H)_p ⊗ DT(H)_q"""
    H = T.H
    check_id = f"dt.r_invertible[{H.name}]"
    left, right = T.component(p), T.component(q)
    R, R_inv = T.rmatrix(p, q)
    one_one = H.field.normalize(np.multiply.outer(left.unit, right.unit))
    return first_failure([
        element_result(check_id, tensor_pair_product(H.field, left.mul, right.mul, R, R_inv), one_one, left.basis),
        element_result(check_id, tensor_pair_product(H.field, left.mul, right.mul, R_inv, R), one_one, left.basis),
    ])


def verify_tcoalgebra(T: TCoalgebraData) -> Report:
    """Toutes les identités de DT(H) sur P, une ligne par identité"""
    H = T.H
    P = T.elements
    report = Report(f"T-coalgebra DT({H.name}) over |P|={len(P)}")
    logger.info(f"Verifying DT({H.name}) on {len(P)} components")

    report.add(_aggregate(f"dt.delta_algebra[{H.name}]", (
        (_names(p=p, q=q), lambda p=p, q=q: check_delta_algebra(T, p, q)) for p, q in product(P, repeat=2))))
    report.add(_aggregate(f"dt.delta_coassoc[{H.name}]", (
        (_names(p=p, q=q, r=r), lambda p=p, q=q, r=r: check_delta_coassoc(T, p, q, r))
        for p, q, r in product(P, repeat=3))))
    report.add(_aggregate(f"dt.delta_counit[{H.name}]", (
        (_names(p=p), lambda p=p: check_delta_counit(T, p)) for p in P)))
    report.add(_aggregate(f"dt.phi_algebra[{H.name}]", (
        (_names(p=p, q=q), lambda p=p, q=q: check_phi_algebra(T, p, q)) for p, q in product(P, repeat=2))))
    report.add(_aggregate(f"dt.phi_group[{H.name}]", (
        (_names(p=p, p2=p2, q=q), lambda p=p, p2=p2, q=q: check_phi_group(T, p, p2, q))
        for p, p2, q in product(P, repeat=3))))
    report.add(_aggregate(f"dt.phi_delta[{H.name}]", (
        (_names(p=p, q=q, r=r), lambda p=p, q=q, r=r: check_phi_delta(T, p, q, r))
        for p, q, r in product(P, repeat=3))))
    report.add(_aggregate(f"dt.phi_counit[{H.name}]", (
        (_names(p=p), lambda p=p: check_phi_counit(T, p)) for p in P)))
    report.add(_aggregate(f"dt.antipode[{H.name}]", (
        (_names(p=p), lambda p=p: check_antipode(T, p)) for p in P)))
    report.add(check_antipode_unit_component(T))
    report.add(_aggregate(f"dt.r_invertible[{H.name}]", (
        (_names(p=p, q=q), lambda p=p, q=q: check_r_invertible(T, p, q)) for p, q in product(P, repeat=2))))
    return report


# === Rep(DT(H)) ET YD(H) ===
def _action_result(check_id: str, lhs: np.ndarray, rhs: np.ndarray, algebra: AlgebraData,
                   labels: Tuple[str, ...]) -> CheckResult:
    if lhs.shape != rhs.shape:
        return make_result(check_id, False, (), f"shape {lhs.shape} vs {rhs.shape}")
    diff = np.asarray(lhs != rhs, dtype=bool)
    if not diff.any():
        return make_result(check_id, True)
    x, m, _ = np.argwhere(diff)[0]
    return make_result(check_id, False, (f"x={algebra.basis[x]}", f"m={labels[m]}"), "actions differ")


def _module(M: YDModule):
    return yd_to_dcp_module(M, dt_component(M.H, M.component), verify=False)


def induced_tensor_action(M: YDModule, N: YDModule) -> np.ndarray:
    """x·(m⊗n) = x_(1)·m ⊗ x_(2)·n avec Δ_{p,q}, p et q les composantes de M et N"""
    field = M.field
    delta = dt_delta(M.H, M.component, N.component)
    step = np.tensordot(delta.data, _module(M).action, axes=([1], [0]))
    step = np.tensordot(step, _module(N).action, axes=([1], [0]))
    data = np.transpose(step, (0, 1, 3, 2, 4)).reshape(delta.data.shape[0], M.dim * N.dim, M.dim * N.dim)
    return np.asarray(field.normalize(data), dtype=object)


def pulled_back_action(p: GroupElementG, N: YDModule) -> np.ndarray:
    """Module sur DT(H)_{p∗q∗p⁻¹} obtenu le long de φ_{p⁻¹}, inverse de φ_p^q"""
    phi = dt_phi(N.H, p.inverse(), p.conjugate(N.component))
    data = np.tensordot(phi.data, _module(N).action, axes=([1], [0]))
    return np.asarray(N.field.normalize(data), dtype=object)


def r_braiding_matrix(M: YDModule, N: YDModule) -> np.ndarray:
    """flip∘(R_{p,q}·) sur M⊗N, en matrice [(m,n), (n',m')]"""
    R, _ = dt_rmatrix(M.H, M.component, N.component)
    step = np.tensordot(R, _module(M).action, axes=([0], [0]))
    step = np.tensordot(step, _module(N).action, axes=([0], [0]))
    data = np.transpose(step, (0, 2, 3, 1)).reshape(M.dim * N.dim, N.dim * M.dim)
    return np.asarray(M.field.normalize(data), dtype=object)


def check_rep_tensor(M: YDModule, N: YDModule) -> CheckResult:
    """Module induit par Δ_{p,q} sur M⊗N = M⊗N de YD(H)"""
    H = M.H
    MN = tensor_module(M, N)
    return _action_result(f"dt.rep_tensor[{H.name}:{M.name},{N.name}]", induced_tensor_action(M, N),
                          _module(MN).action, dt_component(H, MN.component), MN.basis)


def check_rep_conjugation(p: GroupElementG, N: YDModule) -> CheckResult:
    """Module tiré en arrière le long de φ = ^pN"""
    pN = conjugate_module(p, N)
    return _action_result(f"dt.rep_conjugation[{N.H.name}:{p.name}:{N.name}]", pulled_back_action(p, N),
                          _module(pN).action, dt_component(N.H, pN.component), N.basis)


def check_rep_braiding(M: YDModule, N: YDModule) -> CheckResult:
    """flip∘(R_{p,q}·) = c_{M,N}"""
    check_id = f"dt.rep_braiding[{M.H.name}:{M.name},{N.name}]"
    c, _ = braiding(M, N)
    hit = linalg.first_nonzero(np.asarray(r_braiding_matrix(M, N) != c.matrix, dtype=bool).astype(int))
    if hit is None:
        return make_result(check_id, True)
    labels = tensor_module(M, N).basis
    return make_result(check_id, False, (f"m⊗n={labels[hit[0]]}",), "flip∘R differs from c")


def verify_rep_equivalence(M: YDModule, N: YDModule, p: GroupElementG) -> Report:
    """Produit tensoriel, conjugaison et tressage de Rep(DT(H)) comparés aux constructions de YD(H)"""
    report = Report(f"Rep(DT({M.H.name})) against YD({M.H.name}) on {M.name}, {N.name}")
    report.add(check_rep_tensor(M, N))
    report.add(check_rep_conjugation(p, N))
    report.add(check_rep_braiding(M, N))
    return report


def verify_rep_equivalences(T: TCoalgebraData, modules: Sequence[YDModule]) -> Report:
    """Toutes les paires de modules, et la conjugaison de chaque module par chaque élément de P"""
    report = Report(f"Rep(DT({T.H.name})) equivalence")
    for M, N in product(modules, repeat=2):
        report.add(check_rep_tensor(M, N))
        report.add(check_rep_braiding(M, N))
    for p, N in product(T.elements, modules):
        report.add(check_rep_conjugation(p, N))
    logger.info(f"Rep(DT({T.H.name})) equivalence: {len(report.failures)} failure(s) in {len(report)} checks")
    return report
