"""
Hopf YD Verifier - Pairs in Involution
Éléments group-like, caractères et recherche des paires (f, g) pour une composante (α,β)
"""
from typing import List, Sequence, Tuple
import logging

import numpy as np

from src.core import linalg
from src.core.exceptions import NoPairInInvolutionError
from src.core.field import Scalar
from src.core.report import CheckResult, first_failure, make_result
from src.core.sweedler import SweedlerExpr
from src.hopf.algebra import HopfAlgebraData, split_left
from src.hopf.automorphisms import HopfAutomorphism
from src.hopf.dual import dual_of
from src.modules.component import GroupElementG
from src.modules.yd_module import PairInInvolution, check_pair_in_involution

logger = logging.getLogger(__name__)


def _search_order(v: np.ndarray, unit: np.ndarray) -> Tuple:
    # l'unité en tête, puis par support
    is_unit = bool(np.all(np.asarray(v == unit, dtype=bool)))
    nonzero = [(i, str(c)) for i, c in enumerate(v) if c != 0]
    return (not is_unit, len(nonzero), nonzero)


def characters(H: HopfAlgebraData) -> List[np.ndarray]:
    """
    Morphismes d'algèbres H → k, résolus exactement.

    f vérifie f∘L_x = f(x)·f pour tout x (L_x multiplication à gauche) : c'est un
    vecteur propre commun des L_{e_i} agissant sur H*, de valeur propre f(e_i).
    On raffine base par base le sous-espace des solutions, en ne gardant que les
    valeurs propres dans k ; chaque branche non vide donne un caractère.
    """
    field = H.field
    n = H.dim
    branches: List[Tuple[List[Scalar], np.ndarray]] = [([], field.identity(n))]
    for i in range(n):
        # (f∘L_{e_i})(e_j) = Σ_k mul[i,j,k] f(e_k)
        op = np.asarray(H.mul[i], dtype=object)
        spectrum = linalg.eigenvalues(field, op)
        refined = []
        for values, span in branches:
            for lam in spectrum:
                shifted = field.normalize(op - lam * field.identity(n))
                kernel = linalg.nullspace(field, field.matmul(shifted, span.T))
                if kernel.shape[0]:
                    refined.append((values + [lam], field.matmul(kernel, span)))
        branches = refined
        if not branches:
            break
    found = [np.asarray(values, dtype=object) for values, _ in branches]
    found = [f for f in found if H.is_character(f)]
    found.sort(key=lambda f: _search_order(f, H.counit))
    logger.debug(f"Characters of {H.name}: {[[field.format(x) for x in f] for f in found]}")
    return found


def group_likes(H: HopfAlgebraData) -> List[np.ndarray]:
    """
    Solutions de Δ(g) = g⊗g, ε(g) = 1. Pour une algèbre de groupe, la base du groupe ;
    sinon les caractères de H*, lus dans la base de H.
    """
    if H.group is not None:
        return [H.basis_vector(i) for i in range(H.dim)]
    found = [g for g in characters(dual_of(H)) if H.is_group_like(g)]
    found.sort(key=lambda g: _search_order(g, H.unit))
    logger.debug(f"Group-likes of {H.name}: {[H.format_element(g) for g in found]}")
    return found


def character_label(H: HopfAlgebraData, f: np.ndarray, index: int) -> str:
    if bool(np.all(np.asarray(f == H.counit, dtype=bool))):
        return "ε"
    return f"χ{index}"


def _involution_holds(H: HopfAlgebraData, f: np.ndarray, g: np.ndarray,
                      alpha: HopfAutomorphism, beta: HopfAutomorphism) -> bool:
    """α(h) = g⁻¹ f(h_1) β(h_2) f(S(h_3)) g sur la base, sans journaliser les candidats rejetés"""
    expr = SweedlerExpr(H.field, [("h", H.dim)])
    h1, h2, h3 = split_left(expr, H, "h", 3)
    expr.apply(h1, f)
    expr.apply(h2, beta.map, "b")
    expr.apply(h3, H.S, "s")
    expr.apply("s", f)
    expr.const(H.S.apply(g), "gi")
    expr.const(g, "gg")
    expr.apply(("gi", "b"), H.m, "t")
    expr.apply(("t", "gg"), H.m, "out")
    return expr.build(("out",)) == alpha.map


def find_pairs_in_involution(H: HopfAlgebraData, alpha: HopfAutomorphism,
                             beta: HopfAutomorphism) -> List[PairInInvolution]:
    """Toutes les paires (f, g) pour (α,β), ordonnées par (indice de g, indice de f)"""
    component = GroupElementG(alpha, beta)
    gs = group_likes(H)
    fs = characters(H)
    pairs = []
    for g in gs:
        for fi, f in enumerate(fs):
            if _involution_holds(H, f, g, alpha, beta):
                pairs.append(PairInInvolution(f, g, component, character_label(H, f, fi),
                                              H.format_element(g)))
    logger.info(f"Pairs in involution for {component.name} over {H.name}: {[p.name for p in pairs]}")
    return pairs


def require_pair(H: HopfAlgebraData, alpha: HopfAutomorphism, beta: HopfAutomorphism) -> PairInInvolution:
    """Première paire pour (α,β) ; NoPairInInvolutionError si aucune"""
    pairs = find_pairs_in_involution(H, alpha, beta)
    if not pairs:
        raise NoPairInInvolutionError(f"no pair in involution for ({alpha.name},{beta.name}) over {H.name}")
    return pairs[0]


def recheck_pairs(H: HopfAlgebraData, pairs: Sequence[PairInInvolution]) -> CheckResult:
    """Chaque paire retournée vérifie l'identité d'involution exhaustivement"""
    if not pairs:
        return make_result(f"pii.pair[{H.name}]", True, detail="no pair found")
    return first_failure([check_pair_in_involution(H, p) for p in pairs])
