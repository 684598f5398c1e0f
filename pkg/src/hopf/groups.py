"""
Hopf YD Verifier - Finite Groups
Tables de multiplication de groupes finis et leurs automorphismes
"""
from dataclasses import dataclass
from itertools import permutations
from typing import List, Optional, Sequence, Tuple
import logging

import numpy as np

from src.core.exceptions import MalformedInputError

logger = logging.getLogger(__name__)

# énumération brute des automorphismes au-delà : trop coûteuse
MAX_BRUTE_FORCE_ORDER = 6


@dataclass(frozen=True, eq=False)
class GroupTable:
    """table[i, j] = indice de g_i g_j"""
    labels: Tuple[str, ...]
    table: np.ndarray

    def __post_init__(self) -> None:
        n = len(self.labels)
        table = np.asarray(self.table, dtype=int)
        object.__setattr__(self, "table", table)
        if table.shape != (n, n):
            raise MalformedInputError(f"group table of shape {table.shape} for {n} labels")
        if np.any((table < 0) | (table >= n)):
            raise MalformedInputError("group table entry out of range")
        identity = self._find_identity()
        if identity is None:
            raise MalformedInputError("non-group multiplication table: no identity")
        for row in table:
            if sorted(row.tolist()) != list(range(n)):
                raise MalformedInputError("non-group multiplication table: not a Latin square")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a, b], c] != table[a, table[b, c]]:
                        raise MalformedInputError(
                            f"non-group multiplication table: ({self.labels[a]},{self.labels[b]},{self.labels[c]}) not associative"
                        )

    def _find_identity(self) -> Optional[int]:
        n = len(self.labels)
        for e in range(n):
            if all(self.table[e, j] == j and self.table[j, e] == j for j in range(n)):
                return e
        return None

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        e = self._find_identity()
        assert e is not None
        return e

    def inverse(self, i: int) -> int:
        return int(np.nonzero(self.table[i] == self.identity)[0][0])

    def is_abelian(self) -> bool:
        return bool(np.all(self.table == self.table.T))

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        perm = list(perm)
        if sorted(perm) != list(range(self.order)):
            return False
        n = self.order
        return all(perm[self.table[a, b]] == self.table[perm[a], perm[b]]
                   for a in range(n) for b in range(n))

    def automorphisms(self) -> List[Tuple[int, ...]]:
        """Tous les automorphismes (permutations des indices), identité en tête"""
        if self.order > MAX_BRUTE_FORCE_ORDER:
            raise MalformedInputError(
                f"automorphism enumeration limited to order {MAX_BRUTE_FORCE_ORDER}, got {self.order}"
            )
        found = [p for p in permutations(range(self.order)) if self.is_automorphism(p)]
        logger.debug(f"Group of order {self.order}: {len(found)} automorphisms")
        return found


def cyclic_group_table(n: int) -> GroupTable:
    """C_n de générateur g : labels 1, g, g^2, ..."""
    if n < 1:
        raise MalformedInputError(f"cyclic group order must be positive, got {n}")
    labels = tuple("1" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
    table = np.array([[(a + b) % n for b in range(n)] for a in range(n)], dtype=int)
    return GroupTable(labels, table)


def symmetric_group_table(n: int = 3) -> GroupTable:
    """S_n, éléments en notation une-ligne ordonnés lexicographiquement (identité en premier)"""
    if n < 1 or n > 4:
        raise MalformedInputError(f"symmetric group S_{n} not supported")
    elements = list(permutations(range(n)))
    labels = tuple("1" if p == tuple(range(n)) else "".join(str(i + 1) for i in p) for p in elements)
    index = {p: k for k, p in enumerate(elements)}
    # (pq)(i) = p(q(i))
    table = np.array([[index[tuple(p[q[i]] for i in range(n))] for q in elements] for p in elements],
                     dtype=int)
    return GroupTable(labels, table)
