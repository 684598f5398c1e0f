"""
Hopf YD Verifier - Hopf Axioms
Vérification exhaustive des axiomes d'algèbre de Hopf sur les tuples de base
"""
import logging

from src.core.exceptions import AxiomViolationError
from src.core.report import Report, check_identity, first_failure
from src.hopf.algebra import HopfAlgebraData

logger = logging.getLogger(__name__)


def check_hopf_axioms(H: HopfAlgebraData) -> Report:
    """Associativité, unité, coassociativité, counité, bialgèbre, antipode, S⁻¹"""
    report = Report(f"Hopf axioms of {H.name}")
    field = H.field
    one = [("h", H.basis)]
    two = [("h", H.basis), ("l", H.basis)]
    three = [("a", H.basis), ("b", H.basis), ("c", H.basis)]
    tag = f"[{H.name}]"

    # (ab)c = a(bc)
    def assoc_lhs(e):
        e.apply(("a", "b"), H.m, "ab")
        e.apply(("ab", "c"), H.m, "out")
        return ("out",)

    def assoc_rhs(e):
        e.apply(("b", "c"), H.m, "bc")
        e.apply(("a", "bc"), H.m, "out")
        return ("out",)

    report.add(check_identity("hopf.associativity" + tag, field, three, assoc_lhs, assoc_rhs))

    def unit_left(e):
        e.const(H.unit, "u")
        e.apply(("u", "h"), H.m, "out")
        return ("out",)

    def unit_right(e):
        e.const(H.unit, "u")
        e.apply(("h", "u"), H.m, "out")
        return ("out",)

    report.add(first_failure([
        check_identity("hopf.unit" + tag, field, one, unit_left, lambda e: ("h",)),
        check_identity("hopf.unit" + tag, field, one, unit_right, lambda e: ("h",)),
    ]))

    def coassoc_lhs(e):
        e.apply("h", H.delta, ("a", "b"))
        e.apply("a", H.delta, ("a1", "a2"))
        return ("a1", "a2", "b")

    def coassoc_rhs(e):
        e.apply("h", H.delta, ("a", "b"))
        e.apply("b", H.delta, ("b1", "b2"))
        return ("a", "b1", "b2")

    report.add(check_identity("hopf.coassociativity" + tag, field, one, coassoc_lhs, coassoc_rhs))

    def counit_left(e):
        e.apply("h", H.delta, ("a", "b"))
        e.apply("a", H.eps)
        return ("b",)

    def counit_right(e):
        e.apply("h", H.delta, ("a", "b"))
        e.apply("b", H.eps)
        return ("a",)

    report.add(first_failure([
        check_identity("hopf.counit" + tag, field, one, counit_left, lambda e: ("h",)),
        check_identity("hopf.counit" + tag, field, one, counit_right, lambda e: ("h",)),
    ]))

    # Δ(hl) = Δ(h)Δ(l), ε(hl) = ε(h)ε(l), Δ(1) = 1⊗1, ε(1) = 1
    def delta_mult_lhs(e):
        e.apply(("h", "l"), H.m, "hl")
        e.apply("hl", H.delta, ("o1", "o2"))
        return ("o1", "o2")

    def delta_mult_rhs(e):
        e.apply("h", H.delta, ("h1", "h2"))
        e.apply("l", H.delta, ("l1", "l2"))
        e.apply(("h1", "l1"), H.m, "o1")
        e.apply(("h2", "l2"), H.m, "o2")
        return ("o1", "o2")

    def eps_mult_lhs(e):
        e.apply(("h", "l"), H.m, "hl")
        e.apply("hl", H.eps)
        return ()

    def eps_mult_rhs(e):
        e.apply("h", H.eps)
        e.apply("l", H.eps)
        return ()

    def delta_unit_lhs(e):
        e.const(H.unit, "u")
        e.apply("u", H.delta, ("o1", "o2"))
        return ("o1", "o2")

    def delta_unit_rhs(e):
        e.const(H.unit, "o1")
        e.const(H.unit, "o2")
        return ("o1", "o2")

    def eps_unit_lhs(e):
        e.const(H.unit, "u")
        e.apply("u", H.eps)
        return ()

    bialgebra_id = "hopf.bialgebra" + tag
    report.add(first_failure([
        check_identity(bialgebra_id, field, two, delta_mult_lhs, delta_mult_rhs),
        check_identity(bialgebra_id, field, two, eps_mult_lhs, eps_mult_rhs),
        check_identity(bialgebra_id, field, [], delta_unit_lhs, delta_unit_rhs),
        check_identity(bialgebra_id, field, [], eps_unit_lhs, lambda e: ()),
    ]))

    def eta_eps(e):
        e.apply("h", H.eps)
        e.const(H.unit, "out")
        return ("out",)

    def antipode_left(e):
        e.apply("h", H.delta, ("h1", "h2"))
        e.apply("h1", H.S, "s")
        e.apply(("s", "h2"), H.m, "out")
        return ("out",)

    def antipode_right(e):
        e.apply("h", H.delta, ("h1", "h2"))
        e.apply("h2", H.S, "s")
        e.apply(("h1", "s"), H.m, "out")
        return ("out",)

    report.add(check_identity("hopf.antipode_left" + tag, field, one, antipode_left, eta_eps))
    report.add(check_identity("hopf.antipode_right" + tag, field, one, antipode_right, eta_eps))

    def s_then_inv(e):
        e.apply("h", H.S, "s")
        e.apply("s", H.S_inv, "out")
        return ("out",)

    def inv_then_s(e):
        e.apply("h", H.S_inv, "s")
        e.apply("s", H.S, "out")
        return ("out",)

    report.add(first_failure([
        check_identity("hopf.antipode_inverse" + tag, field, one, s_then_inv, lambda e: ("h",)),
        check_identity("hopf.antipode_inverse" + tag, field, one, inv_then_s, lambda e: ("h",)),
    ]))

    logger.info(f"Hopf axioms of {H.name}: {len(report.failures)} failure(s) out of {len(report)}")
    return report


def validate_hopf_algebra(H: HopfAlgebraData) -> HopfAlgebraData:
    """Lève AxiomViolationError sur le premier axiome en échec"""
    report = check_hopf_axioms(H)
    for failure in report.failures:
        raise AxiomViolationError(failure.check_id, failure.counterexample)
    return H
