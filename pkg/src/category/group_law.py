"""
Hopf YD Verifier - Group Law on G
Loi (α,β)∗(γ,δ) = (αγ, δγ⁻¹βγ), inverse (α⁻¹, αβ⁻¹α⁻¹) et axiomes de groupe
"""
from itertools import product
from typing import List, Optional, Sequence
import logging

from src.core.report import Report, make_result
from src.hopf.algebra import HopfAlgebraData
from src.modules.component import GroupElementG

logger = logging.getLogger(__name__)


def g_law(op: str, p: GroupElementG, q: Optional[GroupElementG] = None) -> GroupElementG:
    """op = 'multiply' (p∗q) ou 'invert' (p⁻¹)"""
    if op == "multiply":
        if q is None:
            raise ValueError("multiply needs two group elements")
        return p * q
    if op == "invert":
        return p.inverse()
    raise ValueError(f"unknown group operation '{op}'")


def check_group_axioms(H: HopfAlgebraData, elements: Sequence[GroupElementG]) -> Report:
    """Associativité, unité et inverses sur tous les tuples d'éléments donnés"""
    report = Report(f"group law of G over {H.name}")
    unit = GroupElementG.unit(H)
    tag = f"[{H.name}]"

    assoc_failure = None
    for p, q, r in product(elements, repeat=3):
        if not (p * q) * r == p * (q * r):
            assoc_failure = (f"p={p.name}", f"q={q.name}", f"r={r.name}")
            break
    report.add(make_result("tcat.group_assoc" + tag, assoc_failure is None, assoc_failure))

    unit_failure = next(((f"p={p.name}",) for p in elements
                         if not (p * unit == p and unit * p == p)), None)
    report.add(make_result("tcat.group_unit" + tag, unit_failure is None, unit_failure))

    inverse_failure = next(((f"p={p.name}",) for p in elements
                            if not ((p * p.inverse()).is_unit() and (p.inverse() * p).is_unit())), None)
    report.add(make_result("tcat.group_inverse" + tag, inverse_failure is None, inverse_failure))

    logger.info(f"Group axioms over {H.name} on {len(elements)} elements: "
                f"{len(report.failures)} failure(s)")
    return report


def generate_elements(automorphisms: Sequence) -> List[GroupElementG]:
    """Toutes les paires (α,β) d'automorphismes donnés"""
    return [GroupElementG(a, b) for a, b in product(automorphisms, repeat=2)]
