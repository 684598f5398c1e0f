"""
Hopf YD Verifier - Builtin Hopf Algebras
Algèbres de groupe, algèbre de Sweedler H4 et duales
"""
from typing import Any, Dict, Optional, Sequence
import logging

import numpy as np

from config.constants import BUILTIN_ALGEBRAS
from src.core.exceptions import MalformedInputError
from src.core.field import Field
from src.hopf.algebra import HopfAlgebraData
from src.hopf.dual import dual_of
from src.hopf.groups import GroupTable, cyclic_group_table, symmetric_group_table

logger = logging.getLogger(__name__)

SWEEDLER_BASIS = ("1", "g", "x", "gx")


def group_algebra(group: GroupTable, field: Optional[Field] = None, name: Optional[str] = None) -> HopfAlgebraData:
    """k[G] : Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹"""
    field = field or Field.rationals()
    n = group.order
    mul = field.zeros((n, n, n))
    comul = field.zeros((n, n, n))
    antipode = field.zeros((n, n))
    for i in range(n):
        for j in range(n):
            mul[i, j, group.table[i, j]] = field.one
        comul[i, i, i] = field.one
        antipode[i, group.inverse(i)] = field.one
    unit = field.zeros(n)
    unit[group.identity] = field.one
    counit = np.array([field.one] * n, dtype=object)
    H = HopfAlgebraData(field, group.labels, mul, unit, comul, counit, antipode, antipode.copy(),
                        name=name or f"k[G{n}]", group=group)
    logger.info(f"Built group algebra {H.name} of dimension {n} over {field}")
    return H


def sweedler4(field: Optional[Field] = None) -> HopfAlgebraData:
    """H4 sur la base (1, g, x, gx) : g² = 1, x² = 0, xg = -gx, Δx = x⊗1 + g⊗x, S(x) = -gx"""
    field = field or Field.rationals()
    if field.characteristic == 2:
        raise MalformedInputError("sweedler4 is degenerate in characteristic 2")
    one, g, x, gx = range(4)
    minus = field.neg(field.one)
    mul = field.zeros((4, 4, 4))
    for a in range(4):
        mul[one, a, a] = field.one
        mul[a, one, a] = field.one
    mul[g, g, one] = field.one
    mul[g, x, gx] = field.one
    mul[g, gx, x] = field.one
    mul[x, g, gx] = minus
    mul[gx, g, x] = minus

    comul = field.zeros((4, 4, 4))
    comul[one, one, one] = field.one
    comul[g, g, g] = field.one
    comul[x, x, one] = field.one
    comul[x, g, x] = field.one
    comul[gx, gx, g] = field.one
    comul[gx, one, gx] = field.one

    antipode = field.zeros((4, 4))
    antipode[one, one] = field.one
    antipode[g, g] = field.one
    antipode[x, gx] = minus
    antipode[gx, x] = field.one
    antipode_inv = field.zeros((4, 4))
    antipode_inv[one, one] = field.one
    antipode_inv[g, g] = field.one
    antipode_inv[x, gx] = field.one
    antipode_inv[gx, x] = minus

    unit = field.array([1, 0, 0, 0])
    counit = field.array([1, 1, 0, 0])
    H = HopfAlgebraData(field, SWEEDLER_BASIS, mul, unit, comul, counit, antipode, antipode_inv,
                        name="sweedler4")
    logger.info(f"Built Sweedler algebra over {field}")
    return H


def build_builtin(descriptor: Dict[str, Any], field: Optional[Field] = None) -> HopfAlgebraData:
    """
    Construit une algèbre intégrée depuis un descripteur :
    {"builtin": "sweedler4"}, {"builtin": "cyclic", "n": 3}, {"builtin": "symmetric", "n": 3},
    {"builtin": "group_algebra", "labels": [...], "table": [[...]]},
    {"builtin": "dual_of", "of": <descripteur>}.
    Un champ "field" du descripteur l'emporte sur l'argument field.
    """
    if "field" in descriptor:
        field = Field.from_descriptor(descriptor["field"])
    field = field or Field.rationals()
    kind = descriptor.get("builtin")
    if kind not in BUILTIN_ALGEBRAS:
        raise MalformedInputError(f"unknown builtin {kind!r}; expected one of {BUILTIN_ALGEBRAS}")

    if kind == "sweedler4":
        return sweedler4(field)
    if kind == "cyclic":
        n = int(descriptor.get("n", 2))
        return group_algebra(cyclic_group_table(n), field, name=f"kC{n}")
    if kind == "symmetric":
        n = int(descriptor.get("n", 3))
        return group_algebra(symmetric_group_table(n), field, name=f"kS{n}")
    if kind == "group_algebra":
        try:
            labels = tuple(str(s) for s in descriptor["labels"])
            table = np.array(descriptor["table"], dtype=int)
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInputError(f"group_algebra needs 'labels' and an integer 'table': {e}") from e
        return group_algebra(GroupTable(labels, table), field, name=descriptor.get("name"))
    # dual_of
    inner = descriptor.get("of")
    if not isinstance(inner, dict):
        raise MalformedInputError("dual_of needs an 'of' descriptor")
    inner = dict(inner)
    inner.setdefault("field", field.to_descriptor())
    return dual_of(build_builtin(inner))


def corpus_algebra(name: str, field: Optional[Field] = None) -> HopfAlgebraData:
    """Algèbres du corpus par nom court (voir config/verification.yml)"""
    aliases: Dict[str, Dict[str, Any]] = {
        "cyclic2": {"builtin": "cyclic", "n": 2},
        "cyclic3": {"builtin": "cyclic", "n": 3},
        "symmetric3": {"builtin": "symmetric", "n": 3},
        "sweedler4": {"builtin": "sweedler4"},
        "dual_sweedler4": {"builtin": "dual_of", "of": {"builtin": "sweedler4"}},
    }
    if name not in aliases:
        raise MalformedInputError(f"unknown corpus algebra '{name}'")
    return build_builtin(aliases[name], field)


def group_permutation_matrix(H: HopfAlgebraData, perm: Sequence[int]) -> np.ndarray:
    """Matrice de l'automorphisme de k[G] induit par une permutation des éléments du groupe"""
    if H.group is None:
        raise MalformedInputError(f"{H.name} is not a group algebra")
    if not H.group.is_automorphism(perm):
        raise MalformedInputError(f"{list(perm)} is not a group automorphism of {H.name}")
    matrix = H.field.zeros((H.dim, H.dim))
    for i, j in enumerate(perm):
        matrix[i, int(j)] = H.field.one
    return matrix
