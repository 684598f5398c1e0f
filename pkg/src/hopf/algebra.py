"""
Hopf YD Verifier - Hopf Algebra Data
Algèbre de Hopf de dimension finie donnée par ses constantes de structure
"""
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Dict, Mapping, Optional, Sequence, Tuple
import logging
import threading

import numpy as np

from src.core.exceptions import AxiomViolationError, MalformedInputError, ShapeMismatchError
from src.core.field import Field, Scalar
from src.core.linear_map import LinearMap
from src.core.report import check_identity
from src.core.sweedler import SweedlerExpr
from src.hopf.groups import GroupTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class HopfAlgebraData:
    """
    Constantes de structure en convention ligne :
    e_i e_j = Σ mul[i,j,k] e_k, Δe_i = Σ comul[i,j,k] e_j⊗e_k, S(e_i) = Σ antipode[i,j] e_j.
    """
    field: Field
    basis: Tuple[str, ...]
    mul: np.ndarray
    unit: np.ndarray
    comul: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    antipode_inv: np.ndarray
    name: str = "H"
    group: Optional[GroupTable] = None
    _iterates: Dict[int, LinearMap] = dc_field(default_factory=dict, init=False, repr=False)
    _verified: set = dc_field(default_factory=set, init=False, repr=False)
    _lock: threading.Lock = dc_field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self) -> None:
        d = len(self.basis)
        if d == 0:
            raise MalformedInputError("Hopf algebra of dimension 0")
        if len(set(self.basis)) != d:
            raise MalformedInputError(f"duplicate basis labels in {self.basis}")
        expected = {
            "mul": (d, d, d), "unit": (d,), "comul": (d, d, d),
            "counit": (d,), "antipode": (d, d), "antipode_inv": (d, d),
        }
        for attr, shape in expected.items():
            arr = np.asarray(getattr(self, attr), dtype=object)
            if arr.shape != shape:
                raise ShapeMismatchError(f"{attr} has shape {arr.shape}, expected {shape} for dim {d}")
            object.__setattr__(self, attr, arr)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise MalformedInputError(f"unknown basis label '{label}' in {self.name}") from None

    # === VUES EN APPLICATIONS LINÉAIRES ===
    @cached_property
    def m(self) -> LinearMap:
        return LinearMap(self.field, (self.dim, self.dim), (self.dim,), self.mul)

    @cached_property
    def delta(self) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.dim, self.dim), self.comul)

    @cached_property
    def eta(self) -> LinearMap:
        return LinearMap(self.field, (), (self.dim,), self.unit)

    @cached_property
    def eps(self) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (), self.counit)

    @cached_property
    def S(self) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.dim,), self.antipode)

    @cached_property
    def S_inv(self) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.dim,), self.antipode_inv)

    @cached_property
    def delta_cop(self) -> LinearMap:
        return LinearMap(self.field, (self.dim,), (self.dim, self.dim), np.transpose(self.comul, (0, 2, 1)))

    def identity(self) -> LinearMap:
        return LinearMap.identity(self.field, (self.dim,))

    # === ÉLÉMENTS ===
    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def element(self, coefficients: Mapping[str, Scalar]) -> np.ndarray:
        """Vecteur depuis {label: coefficient}"""
        v = self.field.zeros(self.dim)
        for label, c in coefficients.items():
            v[self.index(label)] = self.field.element(c)
        return v

    def product(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = np.tensordot(np.multiply.outer(a, b), self.mul, axes=([0, 1], [0, 1]))
        return self.field.normalize(np.asarray(out, dtype=object))

    def coproduct(self, a: np.ndarray) -> np.ndarray:
        return self.delta.apply(a)

    def is_group_like(self, g: np.ndarray) -> bool:
        g = np.asarray(g, dtype=object)
        if self.field.canonical(np.dot(g, self.counit)) != self.field.one:
            return False
        return bool(np.all(np.asarray(self.coproduct(g) == self.field.normalize(np.multiply.outer(g, g)), dtype=bool)))

    def is_character(self, f: np.ndarray) -> bool:
        """f algèbre-morphisme H → k : f(e_i e_j) = f(e_i)f(e_j), f(1) = 1"""
        f = np.asarray(f, dtype=object)
        if self.field.canonical(np.dot(self.unit, f)) != self.field.one:
            return False
        lhs = self.field.normalize(np.tensordot(self.mul, f, axes=([2], [0])))
        rhs = self.field.normalize(np.multiply.outer(f, f))
        return bool(np.all(np.asarray(lhs == rhs, dtype=bool)))

    def format_element(self, v: np.ndarray) -> str:
        return format_tensor(self.field, v, [self.basis] * np.ndim(v))

    def key(self) -> Tuple:
        """Clé hachable exacte des constantes de structure"""
        return (self.name, self.field.name, self.basis, self.m.key(), self.delta.key(), self.S.key())

    # === COPRODUITS ITÉRÉS ===
    def iterated_coproduct(self, n: int) -> LinearMap:
        """
        H → H^{⊗n}, h ↦ h_1⊗...⊗h_n calculé comme (Δ⊗id...)∘...∘Δ.

        Au premier appel avec n ≥ 3, les deux parenthésages de Δ² sont comparés ;
        une différence lève AxiomViolationError.
        """
        if n < 1:
            raise ValueError(f"iterated coproduct needs n >= 1, got {n}")
        with self._lock:
            cached = self._iterates.get(n)
        if cached is not None:
            return cached
        if n >= 3:
            self._verify_bracketing()
        if n == 1:
            result = self.identity()
        else:
            expr = SweedlerExpr(self.field, [("h", self.dim)])
            result = expr.build(split_left(expr, self, "h", n))
        with self._lock:
            self._iterates.setdefault(n, result)
        return result

    def _verify_bracketing(self) -> None:
        with self._lock:
            if "bracketing" in self._verified:
                return
        result = check_identity(
            f"kernel.coproduct_bracketing[{self.name}]", self.field, [("h", self.basis)],
            lambda e: split_left(e, self, "h", 3),
            lambda e: split_right(e, self, "h", 3),
        )
        if not result.passed:
            raise AxiomViolationError("coassociativity", result.counterexample)
        with self._lock:
            self._verified.add("bracketing")


def split_left(expr: SweedlerExpr, H: HopfAlgebraData, wire: str, n: int,
               prefix: Optional[str] = None) -> Tuple[str, ...]:
    """Éclate le fil en n fils prefix_1..prefix_n par (Δ⊗id...)∘...∘Δ"""
    prefix = prefix or wire
    if n == 1:
        return (wire,)
    current, rest = wire, []
    for k in range(n - 1, 0, -1):
        head, tail = f"{prefix}#{k}", f"{prefix}_{k + 1}"
        expr.apply(current, H.delta, (head, tail))
        rest.insert(0, tail)
        current = head
    expr.rename(current, f"{prefix}_1")
    return (f"{prefix}_1",) + tuple(rest)


def split_right(expr: SweedlerExpr, H: HopfAlgebraData, wire: str, n: int,
                prefix: Optional[str] = None) -> Tuple[str, ...]:
    """Même éclatement par (id...⊗Δ)∘...∘Δ"""
    prefix = prefix or wire
    if n == 1:
        return (wire,)
    current, done = wire, []
    for k in range(1, n):
        head, tail = f"{prefix}_{k}", f"{prefix}#{k}"
        expr.apply(current, H.delta, (head, tail))
        done.append(head)
        current = tail
    expr.rename(current, f"{prefix}_{n}")
    return tuple(done) + (f"{prefix}_{n}",)


def format_tensor(field: Field, data: np.ndarray, labels: Sequence[Sequence[str]]) -> str:
    """Écriture lisible : "x⊗1 + g⊗x", "0" pour le tenseur nul"""
    data = np.asarray(data, dtype=object)
    terms = []
    for idx in zip(*np.nonzero(np.asarray(data != 0, dtype=bool))):
        c = field.canonical(data[idx])
        if field.is_zero(c):
            continue
        word = "⊗".join(labels[leg][i] for leg, i in enumerate(idx)) or "1"
        coef = field.format(c)
        if coef == "1":
            terms.append(word)
        elif coef == "-1":
            terms.append(f"-{word}")
        else:
            terms.append(f"{coef}*{word}")
    if data.ndim == 0:
        return field.format(field.canonical(data[()]))
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"
