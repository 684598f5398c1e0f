"""
Hopf YD Verifier - Drinfeld Double
D(H) = H*⋈H avec la cogèbre H^{*cop}⊗H, R = Σ (ε⋈e_i)⊗(e^i⋈1), et A(α,β) comme D(H)-bicomodule algèbre
"""
from dataclasses import dataclass
from typing import Optional, Tuple
import logging

import numpy as np

from src.core import linalg
from src.core.cache_manager import cached_function
from src.core.exceptions import AxiomViolationError, SingularMatrixError
from src.core.field import Field
from src.core.report import CheckResult, Report, make_result
from src.core.sweedler import SweedlerExpr
from src.crossed.bicomodule import BicomoduleAlgebra, build_H_ab_bicomodule, check_bicomodule
from src.crossed.crossed_product import a_alpha_beta, diagonal_crossed_product
from src.hopf.algebra import HopfAlgebraData
from src.hopf.automorphisms import HopfAutomorphism
from src.hopf.axioms import check_hopf_axioms
from src.hopf.dual import dual_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QTHopfAlgebraData:
    """Algèbre de Hopf quasitriangulaire : R, R⁻¹ ∈ D⊗D en tableaux [x, y]"""
    hopf: HopfAlgebraData
    R: np.ndarray
    R_inv: np.ndarray

    @property
    def name(self) -> str:
        return self.hopf.name

    @property
    def dim(self) -> int:
        return self.hopf.dim

    @property
    def field(self) -> Field:
        return self.hopf.field

    @property
    def basis(self) -> Tuple[str, ...]:
        return self.hopf.basis


# === PRODUITS DANS D⊗D ET D⊗D⊗D ===
def tensor_pair_product(field: Field, left_mul: np.ndarray, right_mul: np.ndarray,
                        u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """(u·v)[z1, z2] = Σ u[x1,x2] v[y1,y2] left_mul[x1,y1,z1] right_mul[x2,y2,z2] dans A⊗B"""
    step = np.tensordot(u, left_mul, axes=([0], [0]))
    step = np.tensordot(step, v, axes=([1], [0]))
    out = np.tensordot(step, right_mul, axes=([0, 2], [0, 1]))
    return np.asarray(field.normalize(out), dtype=object)


def tensor_square_product(D: HopfAlgebraData, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return tensor_pair_product(D.field, D.mul, D.mul, u, v)


def convolution_inverse_of_identity(D: HopfAlgebraData) -> np.ndarray:
    """
    Résout Σ S(x_1) x_2 = ε(x)1 en l'inconnue S :
    coefficient de S[j, l] dans l'équation (x, o) = Σ_k comul[x,j,k] mul[l,k,o].
    """
    field = D.field
    n = D.dim
    coefficients = np.tensordot(D.comul, D.mul, axes=([2], [1]))
    system = field.normalize(np.transpose(coefficients, (0, 3, 1, 2)).reshape(n * n, n * n))
    rhs = field.normalize(np.multiply.outer(D.counit, D.unit)).reshape(n * n)
    solution = linalg.solve(field, np.asarray(system, dtype=object), np.asarray(rhs, dtype=object))
    return solution.reshape(n, n)


@cached_function(lambda H: H.key(), key_prefix="dcp.")
def build_drinfeld_double(H: HopfAlgebraData) -> QTHopfAlgebraData:
    """D(H) sur la base (e^i⋈e_h) indexée i·dim(H) + h"""
    field = H.field
    n = H.dim
    Hd = dual_of(H)
    algebra = diagonal_crossed_product(H, build_H_ab_bicomodule(H, HopfAutomorphism.identity(H),
                                                                HopfAutomorphism.identity(H)))

    expr = SweedlerExpr(field, [("p", n), ("h", n)])
    expr.apply("p", Hd.delta, ("p1", "p2"))
    expr.apply("h", H.delta, ("h1", "h2"))
    comul = expr.build(("p2", "h1", "p1", "h2")).data.reshape(n * n, n * n, n * n)
    counit = field.normalize(np.multiply.outer(H.unit, H.counit)).reshape(n * n)

    name = f"D({H.name})"
    skeleton = HopfAlgebraData(field, algebra.basis, algebra.mul, algebra.unit, comul,
                               np.asarray(counit, dtype=object), field.identity(n * n),
                               field.identity(n * n), name=name)
    try:
        antipode = convolution_inverse_of_identity(skeleton)
        antipode_inv = linalg.inverse(field, antipode)
    except SingularMatrixError as e:
        raise AxiomViolationError(f"antipode of {name}") from e
    hopf = HopfAlgebraData(field, algebra.basis, algebra.mul, algebra.unit, comul,
                           skeleton.counit, antipode, antipode_inv, name=name)

    R = field.zeros((n, n, n, n))
    block = field.normalize(np.multiply.outer(H.counit, H.unit))
    for i in range(n):
        R[:, i, i, :] = block
    R = R.reshape(n * n, n * n)
    R_inv = np.asarray(field.normalize(np.dot(antipode.T, R)), dtype=object)
    logger.info(f"Built Drinfeld double {name} of dimension {n * n}")
    return QTHopfAlgebraData(hopf, R, R_inv)


def _tensor_labels(labels: Tuple[str, ...], index: Tuple[int, ...]) -> Tuple[str, ...]:
    return ("⊗".join(labels[i] for i in index),)


def element_result(check_id: str, lhs: np.ndarray, rhs: np.ndarray, labels: Tuple[str, ...],
                    where: Optional[Tuple[str, ...]] = None) -> CheckResult:
    hit = linalg.first_nonzero(np.asarray(lhs != rhs, dtype=bool).astype(int))
    if hit is None:
        return make_result(check_id, True)
    return make_result(check_id, False, (where or ()) + _tensor_labels(labels, hit), "coefficients differ")


def check_drinfeld_double(D: QTHopfAlgebraData) -> Report:
    """Axiomes de Hopf, R inversible, RΔ(x) = Δ^cop(x)R, (Δ⊗id)(R) = R₁₃R₂₃, (id⊗Δ)(R) = R₁₃R₁₂"""
    H = D.hopf
    field = H.field
    tag = f"[{H.name}]"
    report = Report(f"quasitriangular structure of {H.name}")
    report.extend(check_hopf_axioms(H))

    one_one = field.normalize(np.multiply.outer(H.unit, H.unit))
    r_id = "dcp.r_invertible" + tag
    first = element_result(r_id, tensor_square_product(H, D.R, D.R_inv), one_one, H.basis)
    report.add(first if not first.passed else
               element_result(r_id, tensor_square_product(H, D.R_inv, D.R), one_one, H.basis))

    intertwine_id = "dcp.r_intertwines" + tag
    result = make_result(intertwine_id, True)
    for x, label in enumerate(H.basis):
        delta_x = H.comul[x]
        lhs = tensor_square_product(H, D.R, delta_x)
        rhs = tensor_square_product(H, np.ascontiguousarray(delta_x.T), D.R)
        result = element_result(intertwine_id, lhs, rhs, H.basis, (f"x={label}",))
        if not result.passed:
            break
    report.add(result)

    # (Δ⊗id)(R)[a,b,c] = Σ R[z,c] comul[z,a,b] ; R₁₃R₂₃[a,b,c] = Σ R[a,x] R[b,y] mul[x,y,c]
    delta_left = np.tensordot(H.comul, D.R, axes=([0], [0]))
    r_mul = np.tensordot(D.R, H.mul, axes=([1], [0]))
    r13_r23 = np.transpose(np.tensordot(r_mul, D.R, axes=([1], [1])), (0, 2, 1))
    report.add(element_result("dcp.r_coproduct_left" + tag, field.normalize(delta_left),
                               field.normalize(r13_r23), H.basis))

    # (id⊗Δ)(R)[a,b,c] = Σ R[a,z] comul[z,b,c] ; R₁₃R₁₂[a,b,c] = Σ mul[x,y,a] R[y,b] R[x,c]
    delta_right = np.tensordot(D.R, H.comul, axes=([1], [0]))
    r13_r12 = np.tensordot(np.tensordot(H.mul, D.R, axes=([1], [0])), D.R, axes=([0], [0]))
    report.add(element_result("dcp.r_coproduct_right" + tag, field.normalize(delta_right),
                               field.normalize(r13_r12), H.basis))
    return report


def dh_bicomodule_on_A(H: HopfAlgebraData, alpha: HopfAutomorphism, beta: HopfAutomorphism,
                       D: Optional[QTHopfAlgebraData] = None) -> Tuple[BicomoduleAlgebra, CheckResult]:
    """
    A(α,β) comme D(H)-bicomodule algèbre :
    p⋈h ↦ (p_2⊗α(h_1))⊗(p_1⋈h_2) à gauche, p⋈h ↦ (p_2⋈h_1)⊗(p_1⊗β(h_2)) à droite.
    """
    D = D or build_drinfeld_double(H)
    field = H.field
    n = H.dim
    Hd = dual_of(H)
    algebra = a_alpha_beta(H, alpha, beta)

    left = SweedlerExpr(field, [("p", n), ("h", n)])
    left.apply("p", Hd.delta, ("p1", "p2"))
    left.apply("h", H.delta, ("h1", "h2"))
    left.apply("h1", alpha.map, "a")
    left_data = left.build(("p2", "a", "p1", "h2")).data.reshape(n * n, n * n, n * n)

    right = SweedlerExpr(field, [("p", n), ("h", n)])
    right.apply("p", Hd.delta, ("p1", "p2"))
    right.apply("h", H.delta, ("h1", "h2"))
    right.apply("h2", beta.map, "b")
    right_data = right.build(("p2", "h1", "p1", "b")).data.reshape(n * n, n * n, n * n)

    bicomodule = BicomoduleAlgebra(D.hopf, algebra, left_data, right_data, name=algebra.name)
    result = check_bicomodule(bicomodule, f"dcp.dh_bicomodule[{H.name}:{alpha.name},{beta.name}]")
    return bicomodule, result
