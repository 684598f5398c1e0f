"""
Hopf YD Verifier - Braiding
Tressage c_{M,N}: M⊗N → ^MN ⊗ M, son inverse et les deux hexagones
"""
from typing import Tuple
import logging

from src.core.exceptions import ComponentMismatchError
from src.core.linear_map import LinearMap
from src.core.report import CheckResult, Report, compare_maps, first_failure, make_result
from src.core.sweedler import SweedlerExpr
from src.category.monoidal import YDMorphism, conjugate_module, same_object, tensor_module
from src.modules.component import GroupElementG
from src.modules.yd_module import YDModule

logger = logging.getLogger(__name__)


def braiding(M: YDModule, N: YDModule) -> Tuple[YDMorphism, YDMorphism]:
    """
    c(m⊗n) = n_(0) ⊗ β⁻¹(n_(1))·m et c⁻¹(n⊗m) = β⁻¹(S(n_(1)))·m ⊗ n_(0),
    (α,β) composante de M, coaction de N.
    """
    H = M.H
    field = H.field
    beta_inv = M.component.beta.inverse()

    forward = SweedlerExpr(field, [("m", M.dim), ("n", N.dim)])
    forward.apply("n", N.coact, ("n0", "n1"))
    forward.apply("n1", beta_inv.map, "b")
    forward.apply(("b", "m"), M.act, "om")
    c_matrix = forward.build(("n0", "om")).matrix

    backward = SweedlerExpr(field, [("n", N.dim), ("m", M.dim)])
    backward.apply("n", N.coact, ("n0", "n1"))
    backward.apply("n1", H.S, "s")
    backward.apply("s", beta_inv.map, "b")
    backward.apply(("b", "m"), M.act, "om")
    c_inv_matrix = backward.build(("om", "n0")).matrix

    source = tensor_module(M, N)
    target = tensor_module(conjugate_module(M.component, N), M)
    c = YDMorphism(source, target, c_matrix, name=f"c_{{{M.name},{N.name}}}")
    c_inv = YDMorphism(target, source, c_inv_matrix, name=f"c⁻¹_{{{M.name},{N.name}}}")
    return c, c_inv


def _pair_inputs(M: YDModule, N: YDModule):
    return [("m", M.basis), ("n", N.basis)]


def check_braiding(M: YDModule, N: YDModule) -> Report:
    """c et c⁻¹ sont des morphismes, mutuellement inverses"""
    tag = f"[{M.H.name}:{M.name}:{N.name}]"
    report = Report(f"braiding of {M.name} and {N.name}")
    c, c_inv = braiding(M, N)

    check_id = "tcat.braiding_morphism" + tag
    try:
        result = first_failure([c.verify(), c_inv.verify()])
        report.add(make_result(check_id, result.passed, result.counterexample, result.detail))
    except ComponentMismatchError as e:
        report.add(make_result(check_id, False, (), str(e)))

    field = M.field
    check_id = "tcat.braiding_inverse" + tag
    there_and_back = c.map.then(c_inv.map).reshaped((M.dim, N.dim), (M.dim * N.dim,))
    back_and_there = c_inv.map.then(c.map).reshaped((N.dim, M.dim), (N.dim * M.dim,))
    report.add(first_failure([
        compare_maps(check_id, there_and_back,
                     LinearMap.identity(field, (M.dim * N.dim,)).reshaped((M.dim, N.dim), (M.dim * N.dim,)),
                     _pair_inputs(M, N)),
        compare_maps(check_id, back_and_there,
                     LinearMap.identity(field, (N.dim * M.dim,)).reshaped((N.dim, M.dim), (N.dim * M.dim,)),
                     [("n", N.basis), ("m", M.basis)]),
    ]))
    return report


def check_braiding_conjugation(p: GroupElementG, M: YDModule, N: YDModule) -> CheckResult:
    """c_{^pM,^pN} = c_{M,N} comme matrices"""
    check_id = f"tcat.braiding_conjugation[{M.H.name}:{p.name}:{M.name}:{N.name}]"
    c, _ = braiding(M, N)
    c_conj, _ = braiding(conjugate_module(p, M), conjugate_module(p, N))
    shape = ((M.dim, N.dim), (N.dim * M.dim,))
    return compare_maps(check_id, c_conj.map.reshaped(*shape), c.map.reshaped(*shape), _pair_inputs(M, N))


def verify_hexagons(M: YDModule, N: YDModule, P: YDModule) -> Report:
    """
    c_{M⊗N,P} = (c_{M,^NP} ⊗ id_N)∘(id_M ⊗ c_{N,P}) et
    c_{M,N⊗P} = (id_{^MN} ⊗ c_{M,P})∘(c_{M,N} ⊗ id_P), avec les égalités d'objets utilisées.
    """
    H = M.H
    field = H.field
    tag = f"[{H.name}:{M.name}:{N.name}:{P.name}]"
    report = Report(f"hexagons for {M.name}, {N.name}, {P.name}")
    m, n, p = M.dim, N.dim, P.dim
    inputs = [("m", M.basis), ("n", N.basis), ("p", P.basis)]
    MN = tensor_module(M, N)

    objects_id = "tcat.hexagon_objects" + tag
    report.add(first_failure([
        same_object(objects_id, conjugate_module(M.component, conjugate_module(N.component, P)),
                    conjugate_module(MN.component, P)),
        same_object(objects_id, conjugate_module(M.component, tensor_module(N, P)),
                    tensor_module(conjugate_module(M.component, N), conjugate_module(M.component, P))),
    ]))

    id_m = LinearMap.identity(field, (m,))
    id_n = LinearMap.identity(field, (n,))
    id_p = LinearMap.identity(field, (p,))

    c_mn_p, _ = braiding(MN, P)
    c_n_p, _ = braiding(N, P)
    c_m_np, _ = braiding(M, conjugate_module(N.component, P))
    left_rhs = id_m.tensor(c_n_p.map).then(c_m_np.map.tensor(id_n))
    shape = ((m, n, p), (m * n * p,))
    report.add(compare_maps("tcat.hexagon_left" + tag, c_mn_p.map.reshaped(*shape),
                            left_rhs.reshaped(*shape), inputs))

    c_m_ntp, _ = braiding(M, tensor_module(N, P))
    c_m_n, _ = braiding(M, N)
    c_m_p, _ = braiding(M, P)
    id_conj_n = LinearMap.identity(field, (n,))
    right_rhs = c_m_n.map.tensor(id_p).then(id_conj_n.tensor(c_m_p.map))
    report.add(compare_maps("tcat.hexagon_right" + tag, c_m_ntp.map.reshaped(*shape),
                            right_rhs.reshaped(*shape), inputs))

    logger.debug(f"Hexagons {tag}: {len(report.failures)} failure(s)")
    return report
