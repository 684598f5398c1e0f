"""
Hopf YD Verifier - Exact Linear Algebra
Élimination de Gauss-Jordan exacte sur ℚ ou F_p (lignes creuses)
"""
from fractions import Fraction
from typing import Dict, List, Optional, Tuple
import logging

import numpy as np
import sympy

from src.core.exceptions import SingularMatrixError
from src.core.field import Field, Scalar

logger = logging.getLogger(__name__)

Row = Dict[int, Scalar]


def _to_rows(field: Field, matrix: np.ndarray) -> List[Row]:
    rows = []
    for i in range(matrix.shape[0]):
        row: Row = {}
        for j in np.nonzero(np.asarray(matrix[i] != 0, dtype=bool))[0]:
            value = field.canonical(matrix[i, j])
            if not field.is_zero(value):
                row[int(j)] = value
        rows.append(row)
    return rows


def _row_reduce(field: Field, rows: List[Row], n_cols: int) -> Dict[int, int]:
    """Gauss-Jordan sur les n_cols premières colonnes ; renvoie colonne -> ligne pivot"""
    pivots: Dict[int, int] = {}
    used = set()
    for col in range(n_cols):
        candidates = [r for r in range(len(rows)) if r not in used and col in rows[r]]
        if not candidates:
            continue
        # pivot le plus creux
        p = min(candidates, key=lambda r: (len(rows[r]), r))
        used.add(p)
        pivots[col] = p
        inv = field.inv(rows[p][col])
        rows[p] = {j: field.mul(v, inv) for j, v in rows[p].items()}
        pivot_row = rows[p]
        for r in range(len(rows)):
            if r == p or col not in rows[r]:
                continue
            factor = rows[r][col]
            target = rows[r]
            for j, v in pivot_row.items():
                updated = field.sub(target.get(j, 0), field.mul(factor, v))
                if field.is_zero(updated):
                    target.pop(j, None)
                else:
                    target[j] = updated
    return pivots


def rank(field: Field, matrix: np.ndarray) -> int:
    matrix = np.asarray(matrix, dtype=object)
    rows = _to_rows(field, matrix)
    return len(_row_reduce(field, rows, matrix.shape[1]))


def solve(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Une solution x de a·x = b (b peut avoir plusieurs colonnes).

    Les variables libres sont mises à zéro ; un système incompatible lève
    SingularMatrixError.
    """
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    vector_rhs = b.ndim == 1
    if vector_rhs:
        b = b.reshape(-1, 1)
    n_rows, n_cols = a.shape
    if b.shape[0] != n_rows:
        raise SingularMatrixError(f"right-hand side has {b.shape[0]} rows, expected {n_rows}")
    augmented = np.concatenate([a, b], axis=1)
    rows = _to_rows(field, augmented)
    pivots = _row_reduce(field, rows, n_cols)

    pivot_rows = set(pivots.values())
    for r, row in enumerate(rows):
        if r in pivot_rows:
            continue
        if any(j >= n_cols for j in row):
            raise SingularMatrixError("inconsistent linear system")

    x = field.zeros((n_cols, b.shape[1]))
    for col, r in pivots.items():
        for j, v in rows[r].items():
            if j >= n_cols:
                x[col, j - n_cols] = v
    return x.reshape(-1) if vector_rhs else x


def inverse(field: Field, matrix: np.ndarray) -> np.ndarray:
    """Inverse exacte d'une matrice carrée"""
    matrix = np.asarray(matrix, dtype=object)
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise SingularMatrixError(f"matrix of shape {matrix.shape} is not square")
    augmented = np.concatenate([matrix, field.identity(n)], axis=1)
    rows = _to_rows(field, augmented)
    pivots = _row_reduce(field, rows, n)
    if len(pivots) < n:
        raise SingularMatrixError(f"matrix has rank {len(pivots)} < {n}")
    inv = field.zeros((n, n))
    for col, r in pivots.items():
        for j, v in rows[r].items():
            if j >= n:
                inv[col, j - n] = v
    return inv


def matrix_power(field: Field, matrix: np.ndarray, k: int,
                 inverse_matrix: Optional[np.ndarray] = None) -> np.ndarray:
    """matrix**k pour k entier relatif"""
    matrix = np.asarray(matrix, dtype=object)
    if k < 0:
        base = inverse_matrix if inverse_matrix is not None else inverse(field, matrix)
        k = -k
    else:
        base = matrix
    result = field.identity(matrix.shape[0])
    for _ in range(k):
        result = field.matmul(result, base)
    return result


def is_invertible(field: Field, matrix: np.ndarray) -> bool:
    matrix = np.asarray(matrix, dtype=object)
    return matrix.shape[0] == matrix.shape[1] and rank(field, matrix) == matrix.shape[0]


def first_nonzero(arr: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(np.asarray(arr != 0, dtype=bool))
    if hits.size == 0:
        return None
    return tuple(int(i) for i in hits[0])


def nullspace(field: Field, matrix: np.ndarray) -> np.ndarray:
    """Base du noyau {x : matrix·x = 0}, un vecteur par ligne ; chaque variable libre vaut 1 tour à tour"""
    matrix = np.asarray(matrix, dtype=object)
    n_cols = matrix.shape[1]
    rows = _to_rows(field, matrix)
    pivots = _row_reduce(field, rows, n_cols)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = field.zeros((len(free), n_cols))
    for k, f in enumerate(free):
        basis[k, f] = field.one
        for col, r in pivots.items():
            basis[k, col] = field.neg(rows[r].get(f, field.zero))
    return basis


def _to_sympy(x: Scalar) -> sympy.Rational:
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def eigenvalues(field: Field, matrix: np.ndarray) -> List[Scalar]:
    """
    Valeurs propres de matrix qui sont dans k, sans multiplicité et triées :
    racines rationnelles du polynôme caractéristique sur ℚ, racines mod p sur F_p.
    """
    matrix = np.asarray(matrix, dtype=object)
    n = matrix.shape[0]
    if n == 0:
        return []
    lam = sympy.Symbol("lambda")
    charpoly = sympy.Matrix(n, n, [_to_sympy(x) for x in matrix.reshape(-1)]).charpoly(lam)
    if field.characteristic:
        poly = sympy.Poly(charpoly.as_expr(), lam, modulus=field.characteristic)
    else:
        poly = sympy.Poly(charpoly.as_expr(), lam, domain=sympy.QQ)
    roots = {field.canonical(Fraction(int(r.p), int(r.q))) for r in poly.ground_roots()}
    return sorted(roots)
