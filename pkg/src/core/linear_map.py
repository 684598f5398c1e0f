"""
Hopf YD Verifier - Linear Maps
Applications multilinéaires V1⊗...⊗Vn → W1⊗...⊗Wm stockées en tableau (entrées..., sorties...)
"""
from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence, Tuple

import numpy as np

from src.core.exceptions import ShapeMismatchError
from src.core.field import Field, Scalar


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Coefficient data[i..., j...] = composante de e_j... dans l'image de e_i..."""
    field: Field
    src: Tuple[int, ...]
    dst: Tuple[int, ...]
    data: np.ndarray

    def __post_init__(self) -> None:
        if tuple(self.data.shape) != tuple(self.src) + tuple(self.dst):
            raise ShapeMismatchError(
                f"array of shape {self.data.shape} does not match {self.src} -> {self.dst}"
            )

    # === CONSTRUCTEURS ===
    @classmethod
    def identity(cls, field: Field, dims: Sequence[int]) -> "LinearMap":
        n = prod(dims)
        dims = tuple(dims)
        return cls(field, dims, dims, field.identity(n).reshape(dims + dims))

    @classmethod
    def from_matrix(cls, field: Field, matrix: np.ndarray,
                    src: Optional[Sequence[int]] = None,
                    dst: Optional[Sequence[int]] = None) -> "LinearMap":
        matrix = np.asarray(matrix, dtype=object)
        src = tuple(src) if src is not None else (matrix.shape[0],)
        dst = tuple(dst) if dst is not None else (matrix.shape[1],)
        return cls(field, src, dst, matrix.reshape(src + dst))

    @classmethod
    def zero(cls, field: Field, src: Sequence[int], dst: Sequence[int]) -> "LinearMap":
        return cls(field, tuple(src), tuple(dst), field.zeros(tuple(src) + tuple(dst)))

    # === ACCESSEURS ===
    @property
    def n_rows(self) -> int:
        return prod(self.src)

    @property
    def n_cols(self) -> int:
        return prod(self.dst)

    @property
    def matrix(self) -> np.ndarray:
        return self.data.reshape(self.n_rows, self.n_cols)

    def flatten(self) -> "LinearMap":
        """Même application vue entre espaces à une seule patte"""
        src = (self.n_rows,) if self.src else ()
        dst = (self.n_cols,) if self.dst else ()
        return LinearMap(self.field, src, dst, self.data.reshape(src + dst))

    def reshaped(self, src: Sequence[int], dst: Sequence[int]) -> "LinearMap":
        return LinearMap(self.field, tuple(src), tuple(dst), self.data.reshape(tuple(src) + tuple(dst)))

    # === OPÉRATIONS ===
    def then(self, other: "LinearMap") -> "LinearMap":
        """Composition : d'abord self, puis other"""
        if prod(self.dst) != prod(other.src):
            raise ShapeMismatchError(f"cannot compose {self.src}->{self.dst} with {other.src}->{other.dst}")
        m = self.field.matmul(self.matrix, other.matrix)
        return LinearMap(self.field, self.src, other.dst, m.reshape(self.src + other.dst))

    def tensor(self, other: "LinearMap") -> "LinearMap":
        """self ⊗ other, pattes d'entrée puis de sortie concaténées"""
        outer = np.multiply.outer(self.data, other.data)
        a, b = len(self.src), len(self.dst)
        c, d = len(other.src), len(other.dst)
        perm = (list(range(a)) + list(range(a + b, a + b + c))
                + list(range(a, a + b)) + list(range(a + b + c, a + b + c + d)))
        data = np.transpose(outer, perm) if perm else outer
        return LinearMap(self.field, self.src + other.src, self.dst + other.dst,
                         self.field.normalize(np.asarray(data, dtype=object)))

    def apply(self, vector: np.ndarray) -> np.ndarray:
        vec = np.asarray(vector, dtype=object).reshape(self.n_rows)
        out = self.field.matmul(vec, self.matrix) if self.n_rows else self.field.zeros(self.n_cols)
        return self.field.normalize(out).reshape(self.dst)

    def scale(self, a: Scalar) -> "LinearMap":
        return LinearMap(self.field, self.src, self.dst, self.field.normalize(self.data * a))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._check_same(other)
        return LinearMap(self.field, self.src, self.dst, self.field.normalize(self.data + other.data))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        self._check_same(other)
        return LinearMap(self.field, self.src, self.dst, self.field.normalize(self.data - other.data))

    def _check_same(self, other: "LinearMap") -> None:
        if self.src != other.src or self.dst != other.dst:
            raise ShapeMismatchError(f"{self.src}->{self.dst} vs {other.src}->{other.dst}")

    def first_difference(self, other: "LinearMap") -> Optional[Tuple[int, ...]]:
        """Premier multi-indice d'entrée (ordre row-major) où les deux applications diffèrent"""
        self._check_same(other)
        diff = np.asarray(self.data != other.data, dtype=bool).reshape(self.n_rows, self.n_cols)
        rows = np.nonzero(diff.any(axis=1))[0]
        if rows.size == 0:
            return None
        return tuple(int(i) for i in np.unravel_index(int(rows[0]), self.src)) if self.src else ()

    def is_zero(self) -> bool:
        return not bool(np.any(np.asarray(self.data != 0, dtype=bool)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.src != other.src or self.dst != other.dst:
            return False
        return bool(np.all(np.asarray(self.data == other.data, dtype=bool)))

    __hash__ = None  # type: ignore[assignment]

    def key(self) -> Tuple[str, ...]:
        """Clé hachable exacte, utilisée pour la mémoïsation"""
        return tuple(self.field.format(x) for x in self.data.reshape(-1))
