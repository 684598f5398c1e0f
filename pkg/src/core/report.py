"""
Hopf YD Verifier - Verification Reports
Résultats de vérification et comparaison exacte d'identités en notation de Sweedler
"""
from contextlib import contextmanager
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterator, List, Optional, Sequence, Tuple
import logging

import numpy as np

from config.constants import anchor_for
from src.core.field import Field
from src.core.linear_map import LinearMap
from src.core.sweedler import SweedlerExpr, Wires

logger = logging.getLogger(__name__)

Labels = Sequence[str]
Side = Callable[[SweedlerExpr], Wires]


@dataclass(frozen=True)
class CheckResult:
    """Une vérification : identifiant, identité vérifiée, verdict, contre-exemple"""
    check_id: str
    anchor: str
    passed: bool
    counterexample: Optional[Tuple[str, ...]] = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "passed": self.passed,
            "counterexample": list(self.counterexample) if self.counterexample is not None else None,
            "detail": self.detail,
        }


@dataclass
class Report:
    """Liste ordonnée de vérifications"""
    title: str
    checks: List[CheckResult] = dc_field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        return result

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def get(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def __len__(self) -> int:
        return len(self.checks)


# === POLITIQUE D'ÉCHANTILLONNAGE ===
_sampling: Optional[Tuple[int, int]] = None


def set_sampling(n: Optional[int], seed: int = 42) -> None:
    """n tuples de base tirés avec une graine fixe ; None rétablit le mode exhaustif"""
    global _sampling
    _sampling = (int(n), int(seed)) if n else None


def get_sampling() -> Optional[Tuple[int, int]]:
    return _sampling


@contextmanager
def use_sampling(n: Optional[int], seed: int = 42) -> Iterator[None]:
    previous = _sampling
    set_sampling(n, seed)
    try:
        yield
    finally:
        globals()["_sampling"] = previous


def _sample_rows(dims: Sequence[int]) -> Optional[np.ndarray]:
    if _sampling is None or not dims:
        return None
    n, seed = _sampling
    total = int(np.prod(dims))
    if n >= total:
        return None
    rng = np.random.default_rng(seed)
    flat = np.sort(rng.choice(total, size=n, replace=False))
    return np.stack(np.unravel_index(flat, tuple(dims)), axis=1)


def format_counterexample(inputs: Sequence[Tuple[str, Labels]],
                          index: Sequence[int]) -> Tuple[str, ...]:
    return tuple(f"{name}={labels[i]}" for (name, labels), i in zip(inputs, index))


def make_result(check_id: str, passed: bool,
                counterexample: Optional[Sequence[str]] = None, detail: str = "") -> CheckResult:
    result = CheckResult(check_id, anchor_for(check_id), bool(passed),
                         tuple(counterexample) if counterexample is not None else None, detail)
    if not result.passed:
        logger.warning(f"Check failed: {check_id} at {result.counterexample} {detail}".rstrip())
    return result


def first_failure(results: Sequence[CheckResult]) -> CheckResult:
    """Regroupe des sous-vérifications : la première en échec, sinon la première"""
    for r in results:
        if not r.passed:
            return r
    return results[0]


def compare_maps(check_id: str, lhs: LinearMap, rhs: LinearMap,
                 inputs: Sequence[Tuple[str, Labels]],
                 rows: Optional[np.ndarray] = None) -> CheckResult:
    """Compare deux applications ; le premier multi-indice différent devient le contre-exemple"""
    if lhs.src != rhs.src or lhs.dst != rhs.dst:
        return make_result(check_id, False, (), f"shape {lhs.src}->{lhs.dst} vs {rhs.src}->{rhs.dst}")
    where = lhs.first_difference(rhs)
    if where is None:
        return make_result(check_id, True)
    index = rows[where[0]] if rows is not None else where
    return make_result(check_id, False, format_counterexample(inputs, index))


def check_identity(check_id: str, field: Field, inputs: Sequence[Tuple[str, Labels]],
                   lhs: Side, rhs: Side) -> CheckResult:
    """
    Vérifie lhs = rhs comme applications linéaires sur les entrées nommées.

    Chaque côté reçoit une SweedlerExpr neuve dont les fils d'entrée portent les
    noms donnés, et renvoie ses fils de sortie. En mode échantillonné seuls
    quelques multi-indices de base sont évalués.
    """
    dims = [len(labels) for _, labels in inputs]
    rows = _sample_rows(dims)
    wires = [(name, d) for (name, _), d in zip(inputs, dims)]

    left_expr = SweedlerExpr(field, wires, sample=rows)
    left = left_expr.build(lhs(left_expr))
    right_expr = SweedlerExpr(field, wires, sample=rows)
    right = right_expr.build(rhs(right_expr))
    return compare_maps(check_id, left, right, inputs, rows)
