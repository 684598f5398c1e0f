"""
Hopf YD Verifier - Scalar Field
Arithmétique exacte sur ℚ (entiers arbitraires) ou sur un corps premier F_p
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from src.core.exceptions import MalformedInputError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

# |a|·|b|·k sous ce seuil : aucun débordement int64 possible
_INT64_SAFE = 2 ** 62


def _as_int64(arr: np.ndarray) -> Tuple[Optional[np.ndarray], int, int]:
    """
    Écriture arr = scaled / scale avec scaled entier int64, et borne de |scaled|.
    (None, 1, 0) dès qu'une entrée n'est ni entière ni Fraction, ou que la borne est trop grande.
    """
    flat = arr.reshape(-1)
    if arr.dtype.kind in "iu":
        return arr.astype(np.int64), 1, int(np.abs(flat).max(initial=0))
    if arr.dtype != object:
        return None, 1, 0
    scale = 1
    for x in flat:
        if isinstance(x, Fraction):
            scale = lcm(scale, x.denominator)
        elif not isinstance(x, (int, np.integer)):
            return None, 1, 0
    values = [int(x) if scale == 1 else int(x * scale) for x in flat]
    bound = max((abs(v) for v in values), default=0)
    if bound >= _INT64_SAFE:
        return None, 1, 0
    return np.array(values, dtype=np.int64).reshape(arr.shape), scale, bound


def _unscale(out: np.ndarray, scale: int) -> np.ndarray:
    result = out.astype(object)
    if scale == 1:
        return result
    flat = result.reshape(-1)
    for i, x in enumerate(flat):
        flat[i] = x // scale if x % scale == 0 else Fraction(x, scale)
    return result


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Corps de base k : ℚ si characteristic == 0, sinon F_p"""

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise MalformedInputError(f"{self.characteristic} is not a prime")

    # === CONSTRUCTEURS ===
    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @classmethod
    def from_descriptor(cls, descriptor: Dict[str, Any]) -> "Field":
        """Construit le corps depuis {"type":"Q"} ou {"type":"Fp","p":p}"""
        kind = descriptor.get("type")
        if kind == "Q":
            return cls.rationals()
        if kind == "Fp":
            if "p" not in descriptor:
                raise MalformedInputError("field of type Fp requires 'p'")
            return cls.prime(int(descriptor["p"]))
        raise MalformedInputError(f"unknown field type: {kind!r}")

    def to_descriptor(self) -> Dict[str, Any]:
        if self.characteristic == 0:
            return {"type": "Q"}
        return {"type": "Fp", "p": self.characteristic}

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    # === SCALAIRES ===
    @property
    def zero(self) -> Scalar:
        return 0

    @property
    def one(self) -> Scalar:
        return 1

    def canonical(self, x: Any) -> Scalar:
        """Forme canonique : entier si possible, Fraction réduite sinon, résidu sur F_p"""
        if self.characteristic:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.characteristic)) % self.characteristic
            return int(x) % self.characteristic
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        return int(x)

    def element(self, value: Any) -> Scalar:
        """Parse un scalaire depuis int, Fraction ou chaîne "num/den" """
        if isinstance(value, bool):
            raise MalformedInputError(f"invalid scalar: {value!r}")
        if isinstance(value, (int, Fraction)):
            return self.canonical(value)
        if isinstance(value, str):
            try:
                parsed = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise MalformedInputError(f"invalid scalar: {value!r}") from e
            if self.characteristic and parsed.denominator % self.characteristic == 0:
                raise MalformedInputError(f"scalar {value!r} undefined mod {self.characteristic}")
            return self.canonical(parsed)
        raise MalformedInputError(f"invalid scalar: {value!r}")

    def format(self, x: Scalar) -> str:
        x = self.canonical(x)
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        return str(x)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.canonical(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.canonical(a - b)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.canonical(a * b)

    def neg(self, a: Scalar) -> Scalar:
        return self.canonical(-a)

    def inv(self, a: Scalar) -> Scalar:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(int(a), -1, self.characteristic)
        return self.canonical(Fraction(1) / a)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        if self.characteristic:
            return int(a) % self.characteristic == 0
        return a == 0

    # === TABLEAUX ===
    def normalize(self, arr: np.ndarray) -> np.ndarray:
        """Réduit modulo p ; sur ℚ les entrées restent exactes telles quelles. Toujours un ndarray"""
        if self.characteristic:
            return np.asarray(np.mod(arr, self.characteristic), dtype=object)
        return np.asarray(arr, dtype=object)

    def tensordot(self, a: np.ndarray, b: np.ndarray,
                  axes: Tuple[Sequence[int], Sequence[int]]) -> np.ndarray:
        """
        np.tensordot exact. Les opérandes rationnels sont ramenés à des entiers par un
        dénominateur commun ; si max|a|·max|b|·(taille contractée) tient alors dans int64,
        le calcul passe par int64, sinon il reste sur les objets Python.
        """
        a = np.asarray(a)
        b = np.asarray(b)
        fast_a, scale_a, bound_a = _as_int64(a)
        fast_b, scale_b, bound_b = _as_int64(b) if fast_a is not None else (None, 1, 0)
        contracted = prod(a.shape[i] for i in axes[0])
        if fast_a is not None and fast_b is not None and bound_a * bound_b * max(contracted, 1) < _INT64_SAFE:
            out = np.tensordot(fast_a, fast_b, axes=axes)
            if self.characteristic:
                reduced = np.asarray(np.mod(out, self.characteristic).astype(object), dtype=object)
                if scale_a * scale_b != 1:
                    reduced = self.normalize(reduced * self.inv(self.canonical(scale_a * scale_b)))
                return reduced
            return _unscale(out, scale_a * scale_b)
        return self.normalize(np.tensordot(a.astype(object), b.astype(object), axes=axes))

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Produit matriciel exact (vecteurs acceptés à gauche comme à droite)"""
        a = np.asarray(a)
        return self.tensordot(a, b, ([a.ndim - 1], [0]))

    def canonicalize(self, arr: np.ndarray) -> np.ndarray:
        out = np.empty(arr.shape, dtype=object)
        flat_in = arr.reshape(-1)
        flat_out = out.reshape(-1)
        for i, x in enumerate(flat_in):
            flat_out[i] = self.canonical(x)
        return out

    def zeros(self, shape: Union[int, Sequence[int]]) -> np.ndarray:
        return np.zeros(shape, dtype=object)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=int).astype(object)

    def array(self, values: Any) -> np.ndarray:
        arr = np.array(values, dtype=object)
        return self.canonicalize(arr)

    def from_sparse(self, shape: Sequence[int], entries: Iterable[Sequence[Any]]) -> np.ndarray:
        """Remplit un tableau dense depuis [[i, j, ..., "c"], ...] ; les doublons s'additionnent"""
        arr = self.zeros(tuple(shape))
        for entry in entries:
            *index, value = entry
            if len(index) != len(shape):
                raise MalformedInputError(f"entry {entry!r} has wrong arity for shape {tuple(shape)}")
            idx: Tuple[int, ...] = tuple(int(i) for i in index)
            if any(i < 0 or i >= d for i, d in zip(idx, shape)):
                raise MalformedInputError(f"entry {entry!r} out of range for shape {tuple(shape)}")
            arr[idx] = self.add(arr[idx], self.element(value))
        return arr

    def to_sparse(self, arr: np.ndarray) -> list:
        entries = []
        for idx in zip(*np.nonzero(np.asarray(arr != 0, dtype=bool))):
            value = arr[idx]
            if not self.is_zero(value):
                entries.append([int(i) for i in idx] + [self.format(value)])
        return entries

    def __str__(self) -> str:
        return self.name
