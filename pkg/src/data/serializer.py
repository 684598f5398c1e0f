"""
Hopf YD Verifier - Serializer
Documents JSON exacts : scalaires "num/den" ou entiers mod p, entrées creuses, clés triées
"""
import json
from typing import Any, Dict, List
import logging

from src.hopf.algebra import HopfAlgebraData
from src.hopf.automorphisms import HopfAutomorphism
from src.modules.yd_module import YDModule

logger = logging.getLogger(__name__)


def _dense(field, vector) -> List[str]:
    return [field.format(x) for x in vector]


def dump_hopf_algebra(H: HopfAlgebraData) -> Dict[str, Any]:
    """Constantes de structure complètes, antipode inverse comprise"""
    field = H.field
    return {
        "kind": "hopf_algebra",
        "name": H.name,
        "field": field.to_descriptor(),
        "dim": H.dim,
        "basis": list(H.basis),
        "mul": field.to_sparse(H.mul),
        "unit": _dense(field, H.unit),
        "comul": field.to_sparse(H.comul),
        "counit": _dense(field, H.counit),
        "antipode": field.to_sparse(H.antipode),
        "antipode_inv": field.to_sparse(H.antipode_inv),
    }


def dump_automorphism(theta: HopfAutomorphism) -> Dict[str, Any]:
    return {"name": theta.name, "matrix": theta.field.to_sparse(theta.matrix)}


def dump_automorphisms(H: HopfAlgebraData, automorphisms) -> Dict[str, Any]:
    return {
        "kind": "automorphisms",
        "algebra": dump_hopf_algebra(H),
        "automorphisms": [dump_automorphism(a) for a in automorphisms],
    }


def dump_module(M: YDModule) -> Dict[str, Any]:
    """Module avec son algèbre et sa composante en ligne, relisible sans contexte"""
    field = M.field
    return {
        "kind": "yd_module",
        "name": M.name,
        "algebra": dump_hopf_algebra(M.H),
        "component": [dump_automorphism(M.component.alpha), dump_automorphism(M.component.beta)],
        "basis": list(M.basis),
        "action": field.to_sparse(M.action),
        "coaction": field.to_sparse(M.coaction),
    }


def to_json(document: Any) -> str:
    """Sortie déterministe : clés triées, indentation fixe, UTF-8 non échappé"""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dump_report(report, timings: bool = False) -> str:
    """Rapport en JSON déterministe ; durées et mémoire seulement si timings"""
    return to_json(report.to_dict(timings=timings))


def write_document(document: Any, path) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(to_json(document))
    logger.info(f"Wrote {document.get('kind', 'document')} to {path}")
