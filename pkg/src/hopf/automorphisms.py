"""
Hopf YD Verifier - Hopf Automorphisms
Automorphismes de Hopf : vérification, composition, puissances de l'antipode
"""
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple
import logging

import numpy as np

from src.core import linalg
from src.core.exceptions import AxiomViolationError, MalformedInputError, SingularMatrixError
from src.core.field import Field
from src.core.linear_map import LinearMap
from src.core.report import CheckResult, check_identity, first_failure, make_result
from src.hopf.algebra import HopfAlgebraData
from src.hopf.builtins import group_permutation_matrix

logger = logging.getLogger(__name__)


def _compose_name(outer: str, inner: str) -> str:
    if outer == "id":
        return inner
    if inner == "id":
        return outer
    return f"{outer}∘{inner}"


@dataclass(frozen=True, eq=False)
class HopfAutomorphism:
    """θ[i, j] = coefficient de e_j dans θ(e_i) ; l'inverse est gardé"""
    field: Field
    matrix: np.ndarray
    inverse_matrix: np.ndarray
    name: str = "θ"

    @classmethod
    def identity(cls, H: HopfAlgebraData) -> "HopfAutomorphism":
        return cls(H.field, H.field.identity(H.dim), H.field.identity(H.dim), "id")

    @classmethod
    def from_matrix(cls, H: HopfAlgebraData, matrix: np.ndarray, name: str = "θ",
                    verify: bool = True) -> "HopfAutomorphism":
        matrix = H.field.canonicalize(np.asarray(matrix, dtype=object))
        if matrix.shape != (H.dim, H.dim):
            raise MalformedInputError(f"automorphism {name} has shape {matrix.shape}, expected {(H.dim, H.dim)}")
        try:
            inverse = linalg.inverse(H.field, matrix)
        except SingularMatrixError as e:
            raise AxiomViolationError(f"Hopf automorphism {name}: invertible") from e
        aut = cls(H.field, matrix, inverse, name)
        if verify:
            result = automorphism_report(H, aut)
            if not result.passed:
                raise AxiomViolationError(f"Hopf automorphism {name}: {result.detail}", result.counterexample)
        return aut

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def map(self) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.dim,), self.matrix)

    @cached_property
    def inverse_map(self) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.dim,), self.inverse_matrix)

    def compose(self, other: "HopfAutomorphism") -> "HopfAutomorphism":
        """self∘other : d'abord other, puis self"""
        matrix = self.field.normalize(np.dot(other.matrix, self.matrix))
        inverse = self.field.normalize(np.dot(self.inverse_matrix, other.inverse_matrix))
        result = HopfAutomorphism(self.field, matrix, inverse, _compose_name(self.name, other.name))
        if result.is_identity():
            return HopfAutomorphism(self.field, matrix, inverse, "id")
        for known in (self, other):
            if result == known:
                return HopfAutomorphism(self.field, matrix, inverse, known.name)
        return result

    def inverse(self) -> "HopfAutomorphism":
        if self.name == "id" or self == HopfAutomorphism(self.field, self.inverse_matrix, self.matrix):
            name = self.name
        else:
            name = f"{self.name}⁻¹"
        return HopfAutomorphism(self.field, self.inverse_matrix, self.matrix, name)

    def power(self, k: int) -> "HopfAutomorphism":
        base = self if k >= 0 else self.inverse()
        result = HopfAutomorphism(self.field, self.field.identity(self.dim), self.field.identity(self.dim), "id")
        for _ in range(abs(k)):
            result = result.compose(base)
        return result

    def is_identity(self) -> bool:
        return bool(np.all(np.asarray(self.matrix == self.field.identity(self.dim), dtype=bool)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HopfAutomorphism):
            return NotImplemented
        return (self.matrix.shape == other.matrix.shape
                and bool(np.all(np.asarray(self.matrix == other.matrix, dtype=bool))))

    __hash__ = None  # type: ignore[assignment]

    def key(self) -> Tuple[str, ...]:
        return tuple(self.field.format(x) for x in self.matrix.reshape(-1))

    def __repr__(self) -> str:
        return f"HopfAutomorphism({self.name})"


def hopf_map_report(H: HopfAlgebraData, K: HopfAlgebraData, theta: np.ndarray,
                    check_id: str) -> CheckResult:
    """θ: H → K commute au produit, à l'unité, au coproduit, à la counité et à l'antipode"""
    theta_map = LinearMap(H.field, (H.dim,), (K.dim,), np.asarray(theta, dtype=object))
    field = H.field
    one = [("h", H.basis)]
    two = [("h", H.basis), ("l", H.basis)]

    def mul_lhs(e):
        e.apply(("h", "l"), H.m, "hl")
        e.apply("hl", theta_map, "out")
        return ("out",)

    def mul_rhs(e):
        e.apply("h", theta_map, "th")
        e.apply("l", theta_map, "tl")
        e.apply(("th", "tl"), K.m, "out")
        return ("out",)

    def unit_lhs(e):
        e.const(H.unit, "u")
        e.apply("u", theta_map, "out")
        return ("out",)

    def unit_rhs(e):
        e.const(K.unit, "out")
        return ("out",)

    def comul_lhs(e):
        e.apply("h", theta_map, "t")
        e.apply("t", K.delta, ("o1", "o2"))
        return ("o1", "o2")

    def comul_rhs(e):
        e.apply("h", H.delta, ("h1", "h2"))
        e.apply("h1", theta_map, "o1")
        e.apply("h2", theta_map, "o2")
        return ("o1", "o2")

    def counit_lhs(e):
        e.apply("h", theta_map, "t")
        e.apply("t", K.eps)
        return ()

    def counit_rhs(e):
        e.apply("h", H.eps)
        return ()

    def antipode_lhs(e):
        e.apply("h", theta_map, "t")
        e.apply("t", K.S, "out")
        return ("out",)

    def antipode_rhs(e):
        e.apply("h", H.S, "s")
        e.apply("s", theta_map, "out")
        return ("out",)

    results = []
    for condition, inputs, lhs, rhs in (
        ("multiplicative", two, mul_lhs, mul_rhs),
        ("unital", [], unit_lhs, unit_rhs),
        ("comultiplicative", one, comul_lhs, comul_rhs),
        ("counital", one, counit_lhs, counit_rhs),
        ("commutes with S", one, antipode_lhs, antipode_rhs),
    ):
        r = check_identity(check_id, field, inputs, lhs, rhs)
        if not r.passed:
            r = make_result(check_id, False, r.counterexample, condition)
        results.append(r)
    return first_failure(results)


def automorphism_report(H: HopfAlgebraData, theta: HopfAutomorphism) -> CheckResult:
    return hopf_map_report(H, H, theta.matrix, f"hopf.automorphism[{H.name}:{theta.name}]")


def check_automorphism(H: HopfAlgebraData, theta: np.ndarray) -> bool:
    """θ inversible et compatible avec les cinq applications de structure"""
    theta = np.asarray(theta, dtype=object)
    if theta.shape != (H.dim, H.dim):
        return False
    if not linalg.is_invertible(H.field, theta):
        return False
    return hopf_map_report(H, H, theta, f"hopf.automorphism[{H.name}]").passed


def antipode_power(H: HopfAlgebraData, k: int) -> HopfAutomorphism:
    """S^k comme automorphisme (k pair), S⁻¹ utilisé pour k < 0"""
    if k % 2:
        raise ValueError("only even powers of the antipode are Hopf automorphisms")
    matrix = linalg.matrix_power(H.field, H.antipode, k, inverse_matrix=H.antipode_inv)
    inverse = linalg.matrix_power(H.field, H.antipode_inv, k, inverse_matrix=H.antipode)
    name = "id" if k == 0 else f"S^{k}"
    return HopfAutomorphism(H.field, matrix, inverse, name)


def from_group_automorphism(H: HopfAlgebraData, perm: Sequence[int], name: Optional[str] = None) -> HopfAutomorphism:
    matrix = group_permutation_matrix(H, perm)
    return HopfAutomorphism.from_matrix(H, matrix, name or "σ[" + ",".join(str(int(p)) for p in perm) + "]", verify=False)


def standard_automorphisms(H: HopfAlgebraData, l_max: int,
                           group_automorphisms: Sequence[Sequence[int]] = (),
                           extra: Sequence[HopfAutomorphism] = ()) -> List[HopfAutomorphism]:
    """
    id, S², ..., S^{2 l_max} sans doublons, puis les automorphismes induits par les
    automorphismes de groupe donnés et les automorphismes supplémentaires.
    Chaque candidat est vérifié ; un échec lève AxiomViolationError.
    """
    if l_max < 0:
        raise ValueError(f"l_max must be >= 0, got {l_max}")
    found: List[HopfAutomorphism] = []

    def add(candidate: HopfAutomorphism) -> None:
        if any(candidate == known for known in found):
            return
        result = automorphism_report(H, candidate)
        if not result.passed:
            raise AxiomViolationError(f"Hopf automorphism {candidate.name}: {result.detail}", result.counterexample)
        found.append(candidate)

    for l in range(l_max + 1):
        add(antipode_power(H, 2 * l))
    for k, perm in enumerate(group_automorphisms):
        add(from_group_automorphism(H, perm, _group_aut_name(H, perm, k)))
    for aut in extra:
        add(aut)
    logger.info(f"Standard automorphisms of {H.name}: {[a.name for a in found]}")
    return found


def _group_aut_name(H: HopfAlgebraData, perm: Sequence[int], k: int) -> str:
    group = H.group
    if group is not None and all(int(perm[i]) == group.inverse(i) for i in range(group.order)):
        return "inv"
    return f"σ{k}"
