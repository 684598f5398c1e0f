"""
Hopf YD Verifier - Tensor Engine
Tenseurs denses à pattes étiquetées et exécution des plans de contraction
"""
from contextlib import contextmanager
from dataclasses import dataclass, field as dc_field
from math import prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from src.core.exceptions import BudgetExceededError, ShapeMismatchError
from src.core.field import Field, Scalar

logger = logging.getLogger(__name__)

# plafond du nombre de coefficients d'un tenseur intermédiaire (--max-dim au cube)
_entry_limit: Optional[int] = None


@contextmanager
def use_entry_limit(limit: Optional[int]) -> Iterator[None]:
    global _entry_limit
    previous = _entry_limit
    _entry_limit = int(limit) if limit else None
    try:
        yield
    finally:
        _entry_limit = previous


@dataclass(frozen=True)
class Leg:
    """Patte d'un tenseur : identifiant d'espace et dimension"""
    space: str
    dim: int


@dataclass(frozen=True, eq=False)
class Tensor:
    """Tenseur dense, coefficients indexés par les pattes en ordre row-major"""
    field: Field
    legs: Tuple[Leg, ...]
    data: np.ndarray

    def __post_init__(self) -> None:
        expected = tuple(leg.dim for leg in self.legs)
        if tuple(self.data.shape) != expected:
            raise ShapeMismatchError(
                f"coefficient array of shape {self.data.shape} does not match legs {expected}"
            )

    @classmethod
    def scalar(cls, field: Field, value: Scalar = 1) -> "Tensor":
        return cls(field, (), np.array(field.canonical(value), dtype=object))

    @classmethod
    def basis(cls, field: Field, legs: Sequence[Leg], index: Sequence[int]) -> "Tensor":
        data = field.zeros(tuple(leg.dim for leg in legs))
        data[tuple(index)] = field.one
        return cls(field, tuple(legs), data)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(leg.dim for leg in self.legs)

    @property
    def size(self) -> int:
        return prod(self.shape)

    def scale(self, a: Scalar) -> "Tensor":
        return Tensor(self.field, self.legs, self.field.normalize(self.data * a))

    def __add__(self, other: "Tensor") -> "Tensor":
        if self.legs != other.legs:
            raise ShapeMismatchError(f"cannot add tensors with legs {self.legs} and {other.legs}")
        return Tensor(self.field, self.legs, self.field.normalize(self.data + other.data))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return tensor_equal(self, other)

    __hash__ = None  # type: ignore[assignment]


def tensor_equal(a: Tensor, b: Tensor) -> bool:
    """Égalité exacte : mêmes pattes et coefficients identiques"""
    if a.legs != b.legs:
        return False
    return bool(np.all(np.asarray(a.data == b.data, dtype=bool)))


# === ÉTAPES PRIMITIVES ===
@dataclass(frozen=True, eq=False)
class ApplyMap:
    """Applique une application linéaire sur des pattes ; les sorties prennent la place de legs[0]"""
    legs: Tuple[int, ...]
    matrix: np.ndarray
    out_spaces: Tuple[str, ...] = ()


@dataclass(frozen=True)
class PermuteLegs:
    """La nouvelle patte i est l'ancienne patte perm[i]"""
    perm: Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class ContractPair:
    """Σ_ij T[..i..j..] P[i,j] ; pairing None vaut l'accouplement identité"""
    leg_a: int
    leg_b: int
    pairing: Optional[np.ndarray] = None


@dataclass(frozen=True, eq=False)
class TensorWith:
    """Produit tensoriel par une constante, pattes ajoutées à la fin"""
    const: Tensor


Step = Union[ApplyMap, PermuteLegs, ContractPair, TensorWith]


@dataclass(frozen=True)
class ContractionPlan:
    steps: Tuple[Step, ...] = ()

    def then(self, step: Step) -> "ContractionPlan":
        return ContractionPlan(self.steps + (step,))

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(eq=False)
class _Factor:
    data: np.ndarray
    ids: List[int]


@dataclass
class _State:
    """Tenseur courant gardé en facteurs disjoints, fusionnés à la demande"""
    field: Field
    factors: List[_Factor]
    order: List[int]
    legs: Dict[int, Leg]
    next_id: int = 0
    peak: int = dc_field(default=0)

    def fresh(self, leg: Leg) -> int:
        leg_id = self.next_id
        self.next_id += 1
        self.legs[leg_id] = leg
        return leg_id

    def factor_of(self, leg_id: int) -> _Factor:
        for f in self.factors:
            if leg_id in f.ids:
                return f
        raise KeyError(leg_id)

    def track(self, arr: np.ndarray) -> None:
        size = int(arr.size)
        if _entry_limit is not None and size > _entry_limit:
            raise BudgetExceededError(f"intermediate tensor of {size} entries exceeds the budget of {_entry_limit}")
        self.peak = max(self.peak, size)

    def merge(self, left: _Factor, left_ids: List[int], right: _Factor, right_ids: List[int]) -> _Factor:
        axes_l = [left.ids.index(i) for i in left_ids]
        axes_r = [right.ids.index(i) for i in right_ids]
        data = self.field.tensordot(left.data, right.data, (axes_l, axes_r))
        self.track(data)
        ids = [i for i in left.ids if i not in left_ids] + [i for i in right.ids if i not in right_ids]
        return _Factor(data, ids)


def _check_leg(index: int, n_legs: int, step_index: int) -> None:
    if not 0 <= index < n_legs:
        raise ShapeMismatchError(f"leg index {index} out of range for {n_legs} legs", step_index)


def _apply_map(state: _State, step: ApplyMap, k: int) -> None:
    n_in = len(step.legs)
    if n_in == 0:
        raise ShapeMismatchError("apply-linear-map needs at least one leg", k)
    if len(set(step.legs)) != n_in:
        raise ShapeMismatchError(f"repeated leg in {step.legs}", k)
    for leg in step.legs:
        _check_leg(leg, len(state.order), k)
    if step.matrix.ndim < n_in:
        raise ShapeMismatchError(f"map of rank {step.matrix.ndim} cannot consume {n_in} legs", k)
    consumed = [state.order[leg] for leg in step.legs]
    in_dims = tuple(state.legs[i].dim for i in consumed)
    if tuple(step.matrix.shape[:n_in]) != in_dims:
        raise ShapeMismatchError(
            f"map input shape {step.matrix.shape[:n_in]} does not match legs {in_dims}", k
        )
    out_dims = step.matrix.shape[n_in:]
    spaces = step.out_spaces or tuple(f"out{j}" for j in range(len(out_dims)))
    if len(spaces) != len(out_dims):
        raise ShapeMismatchError(f"{len(spaces)} output labels for {len(out_dims)} output legs", k)

    in_ids = [state.fresh(state.legs[i]) for i in consumed]
    out_ids = [state.fresh(Leg(s, d)) for s, d in zip(spaces, out_dims)]
    current = _Factor(np.asarray(step.matrix, dtype=object), in_ids + out_ids)

    # regroupement par facteur, dans l'ordre des pattes consommées
    groups: List[Tuple[_Factor, List[int], List[int]]] = []
    for leg_id, in_id in zip(consumed, in_ids):
        owner = state.factor_of(leg_id)
        for g in groups:
            if g[0] is owner:
                g[1].append(leg_id)
                g[2].append(in_id)
                break
        else:
            groups.append((owner, [leg_id], [in_id]))
    for owner, leg_ids, map_ids in groups:
        state.factors.remove(owner)
        current = state.merge(owner, leg_ids, current, map_ids)
    state.factors.append(current)

    anchor = state.order.index(consumed[0])
    removed_before = sum(1 for i in consumed if state.order.index(i) < anchor)
    remaining = [i for i in state.order if i not in consumed]
    position = anchor - removed_before
    state.order = remaining[:position] + out_ids + remaining[position:]


def _contract_pair(state: _State, step: ContractPair, k: int) -> None:
    _check_leg(step.leg_a, len(state.order), k)
    _check_leg(step.leg_b, len(state.order), k)
    if step.leg_a == step.leg_b:
        raise ShapeMismatchError("contract-pair needs two distinct legs", k)
    id_a = state.order[step.leg_a]
    id_b = state.order[step.leg_b]
    dim_a = state.legs[id_a].dim
    dim_b = state.legs[id_b].dim
    if step.pairing is not None:
        if tuple(step.pairing.shape) != (dim_a, dim_b):
            raise ShapeMismatchError(
                f"pairing of shape {step.pairing.shape} does not match ({dim_a}, {dim_b})", k
            )
        owner = state.factor_of(id_a)
        state.factors.remove(owner)
        twisted = state.fresh(Leg(state.legs[id_b].space, dim_b))
        paired = state.merge(owner, [id_a], _Factor(np.asarray(step.pairing, dtype=object), [id_a, twisted]), [id_a])
        state.factors.append(paired)
        id_a = twisted
    elif dim_a != dim_b:
        raise ShapeMismatchError(f"cannot pair legs of dimensions {dim_a} and {dim_b}", k)

    fa = state.factor_of(id_a)
    fb = state.factor_of(id_b)
    if fa is fb:
        ax_a, ax_b = fa.ids.index(id_a), fa.ids.index(id_b)
        data = state.field.normalize(np.trace(fa.data, axis1=ax_a, axis2=ax_b))
        ids = [i for i in fa.ids if i not in (id_a, id_b)]
        state.factors.remove(fa)
        state.factors.append(_Factor(np.asarray(data, dtype=object), ids))
    else:
        state.factors.remove(fa)
        state.factors.remove(fb)
        state.factors.append(state.merge(fa, [id_a], fb, [id_b]))
    state.order = [i for i in state.order if i not in (state.order[step.leg_a], state.order[step.leg_b])]


def _densify(state: _State) -> Tensor:
    data: np.ndarray = np.array(state.field.one, dtype=object)
    ids: List[int] = []
    for f in state.factors:
        if f.data.ndim == 0:
            data = data * f.data
        else:
            data = np.multiply.outer(data, f.data)
            ids.extend(f.ids)
        state.track(np.asarray(data))
    data = state.field.normalize(np.asarray(data, dtype=object))
    perm = [ids.index(i) for i in state.order]
    data = np.transpose(data, perm) if perm else data
    return Tensor(state.field, tuple(state.legs[i] for i in state.order), np.asarray(data, dtype=object))


def contract(plan: ContractionPlan, input: Tensor) -> Tensor:
    """Exécute les étapes du plan dans l'ordre ; fonction pure"""
    result, _ = contract_with_stats(plan, input)
    return result


def contract_with_stats(plan: ContractionPlan, input: Tensor) -> Tuple[Tensor, int]:
    """Comme contract, renvoie aussi la taille du plus gros tenseur intermédiaire"""
    if not plan.steps:
        return input, input.size
    state = _State(input.field, [], [], {})
    ids = [state.fresh(leg) for leg in input.legs]
    state.factors.append(_Factor(input.data, ids))
    state.order = list(ids)
    state.track(input.data)

    for k, step in enumerate(plan.steps):
        if isinstance(step, ApplyMap):
            _apply_map(state, step, k)
        elif isinstance(step, PermuteLegs):
            if sorted(step.perm) != list(range(len(state.order))):
                raise ShapeMismatchError(f"{step.perm} is not a permutation of {len(state.order)} legs", k)
            state.order = [state.order[p] for p in step.perm]
        elif isinstance(step, ContractPair):
            _contract_pair(state, step, k)
        elif isinstance(step, TensorWith):
            if step.const.field != state.field:
                raise ShapeMismatchError("constant tensor over a different field", k)
            new_ids = [state.fresh(leg) for leg in step.const.legs]
            state.factors.append(_Factor(step.const.data, new_ids))
            state.order.extend(new_ids)
        else:
            raise ShapeMismatchError(f"unknown step type {type(step).__name__}", k)

    result = _densify(state)
    return result, state.peak
