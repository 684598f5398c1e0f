"""
Hopf YD Verifier - Sweedler Expressions
Compilation d'expressions à fils nommés (h_1, m_(0), ...) en plans de contraction
"""
from typing import Dict, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from src.core.exceptions import ShapeMismatchError
from src.core.field import Field
from src.core.linear_map import LinearMap
from src.core.tensor import (ApplyMap, ContractionPlan, ContractPair, Leg, PermuteLegs,
                             Tensor, TensorWith, contract_with_stats)

logger = logging.getLogger(__name__)

Wires = Union[str, Sequence[str]]
MapLike = Union[LinearMap, np.ndarray]

_SOURCE_PREFIX = "@"
_BATCH = "@batch"


def _as_tuple(wires: Wires) -> Tuple[str, ...]:
    if isinstance(wires, str):
        return (wires,)
    return tuple(wires)


class SweedlerExpr:
    """
    Expression linéaire en notation de Sweedler.

    Chaque entrée est un fil nommé ; apply() consomme des fils et en crée de
    nouveaux. build() renvoie l'application linéaire entrées -> sorties.
    Avec sample, l'expression est évaluée seulement sur les multi-indices
    donnés (une patte de lot remplace les entrées).
    """

    def __init__(self, field: Field, inputs: Sequence[Tuple[str, int]],
                 sample: Optional[np.ndarray] = None):
        self.field = field
        self.inputs = tuple((name, int(dim)) for name, dim in inputs)
        self.sample = sample
        self._order: List[str] = []
        self._dims: Dict[str, int] = {}
        self._plan = ContractionPlan()

        if sample is None:
            for name, dim in self.inputs:
                delta = Tensor(field, (Leg(_SOURCE_PREFIX + name, dim), Leg(name, dim)), field.identity(dim))
                self._push(TensorWith(delta), [_SOURCE_PREFIX + name, name], [dim, dim])
        else:
            sample = np.asarray(sample, dtype=int).reshape(-1, len(self.inputs))
            dims = [dim for _, dim in self.inputs]
            data = field.zeros((sample.shape[0], *dims))
            for row, index in enumerate(sample):
                data[(row, *index)] = field.one
            legs = (Leg(_BATCH, sample.shape[0]),) + tuple(Leg(n, d) for n, d in self.inputs)
            self._push(TensorWith(Tensor(field, legs, data)),
                       [_BATCH] + [n for n, _ in self.inputs], [sample.shape[0]] + dims)

    def _push(self, step, names: Sequence[str], dims: Sequence[int]) -> None:
        for name, dim in zip(names, dims):
            if name in self._dims:
                raise ShapeMismatchError(f"wire '{name}' already exists")
            self._dims[name] = dim
        self._order.extend(names)
        self._plan = self._plan.then(step)

    def _index(self, wire: str) -> int:
        try:
            return self._order.index(wire)
        except ValueError:
            raise ShapeMismatchError(f"unknown or consumed wire '{wire}'") from None

    def dim(self, wire: str) -> int:
        return self._dims[wire]

    @property
    def live(self) -> Tuple[str, ...]:
        return tuple(w for w in self._order if not w.startswith(_SOURCE_PREFIX))

    def apply(self, wires: Wires, linear_map: MapLike, out: Wires = ()) -> "SweedlerExpr":
        """Applique linear_map aux fils donnés ; out nomme les fils produits"""
        consumed = _as_tuple(wires)
        produced = _as_tuple(out)
        data = linear_map.data if isinstance(linear_map, LinearMap) else np.asarray(linear_map, dtype=object)
        if data.ndim != len(consumed) + len(produced):
            raise ShapeMismatchError(
                f"map of rank {data.ndim} applied to {consumed} producing {produced}"
            )
        for name in produced:
            if name in self._dims:
                raise ShapeMismatchError(f"wire '{name}' already exists")
        legs = tuple(self._index(w) for w in consumed)
        self._plan = self._plan.then(ApplyMap(legs, data, produced))

        anchor = legs[0]
        removed_before = sum(1 for i in legs if i < anchor)
        remaining = [w for w in self._order if w not in consumed]
        position = anchor - removed_before
        self._order = remaining[:position] + list(produced) + remaining[position:]
        for name, dim in zip(produced, data.shape[len(consumed):]):
            self._dims[name] = int(dim)
        return self

    def const(self, vector: MapLike, out: Wires) -> "SweedlerExpr":
        """Insère un élément constant (vecteur ou tenseur) sur de nouveaux fils"""
        produced = _as_tuple(out)
        data = vector.data if isinstance(vector, LinearMap) else np.asarray(vector, dtype=object)
        if data.ndim != len(produced):
            raise ShapeMismatchError(f"constant of rank {data.ndim} on wires {produced}")
        tensor = Tensor(self.field, tuple(Leg(n, d) for n, d in zip(produced, data.shape)), data)
        self._push(TensorWith(tensor), produced, data.shape)
        return self

    def pair(self, a: str, b: str, pairing: Optional[np.ndarray] = None) -> "SweedlerExpr":
        """Évalue le fil a (fonctionnelle) sur le fil b"""
        ia, ib = self._index(a), self._index(b)
        self._plan = self._plan.then(ContractPair(ia, ib, pairing))
        self._order = [w for w in self._order if w not in (a, b)]
        return self

    def rename(self, old: str, new: str) -> "SweedlerExpr":
        idx = self._index(old)
        self._order[idx] = new
        self._dims[new] = self._dims.pop(old)
        return self

    def plan(self, outputs: Wires) -> ContractionPlan:
        outs = _as_tuple(outputs)
        sources = ([_SOURCE_PREFIX + n for n, _ in self.inputs] if self.sample is None else [_BATCH])
        missing = [w for w in self._order if w not in outs and w not in sources]
        if missing:
            raise ShapeMismatchError(f"dangling wires {missing} not listed as outputs")
        perm = tuple(self._index(w) for w in list(sources) + list(outs))
        if len(perm) != len(self._order):
            raise ShapeMismatchError(f"outputs {outs} do not cover live wires {self.live}")
        return self._plan.then(PermuteLegs(perm))

    def build(self, outputs: Wires = ()) -> LinearMap:
        outs = _as_tuple(outputs)
        plan = self.plan(outs)
        result, peak = contract_with_stats(plan, Tensor.scalar(self.field))
        logger.debug(f"Sweedler expression: {len(plan)} steps, peak intermediate {peak} entries")
        if self.sample is None:
            src = tuple(d for _, d in self.inputs)
        else:
            src = (result.shape[0],)
        dst = tuple(self._dims[w] for w in outs)
        return LinearMap(self.field, src, dst, result.data.reshape(src + dst))
