"""
Hopf YD Verifier - Verification Pipeline
Orchestration des suites hopf, yd, tcategory, double, dt, pii sur le corpus ou sur des entrées
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
import hashlib
import logging
import time

import pandas as pd

from config.constants import EXIT_FAILED, EXIT_OK, SUITES
from config.settings import PERFORMANCE_CONFIG, REPORT_CONFIG, VERIFICATION_CONFIG
from src.category.braiding import braiding, check_braiding, check_braiding_conjugation, verify_hexagons
from src.category.duality import check_duality
from src.category.group_law import check_group_axioms, generate_elements
from src.category.monoidal import (
    check_conjugate_compat, check_conjugate_composite, check_conjugate_tensor,
    check_conjugation_functorial, check_tensor_assoc, check_tensor_compat, check_tensor_unit,
)
from src.core.exceptions import BudgetExceededError, MalformedInputError
from src.core.field import Field
from src.core.performance_monitor import PerformanceMonitor
from src.core.report import CheckResult, Report, make_result, use_sampling
from src.core.tensor import use_entry_limit
from src.crossed.bicomodule import DatumModule, build_H_ab_bicomodule, check_bicomodule, check_yd_datum_module
from src.crossed.correspondence import check_module_roundtrip
from src.crossed.crossed_product import check_anti_yd_algebra, check_crossed_specialization
from src.crossed.double import build_drinfeld_double, check_drinfeld_double, dh_bicomodule_on_A
from src.data.serializer import dump_hopf_algebra, to_json
from src.hopf.algebra import HopfAlgebraData
from src.hopf.automorphisms import HopfAutomorphism, antipode_power, automorphism_report, standard_automorphisms
from src.hopf.axioms import check_hopf_axioms
from src.hopf.builtins import corpus_algebra
from src.hopf.dual import DualBasisPairing, check_double_dual, check_regular_actions
from src.involution.algebra_iso import verify_algebra_iso
from src.involution.functors import check_alpha_alpha, check_functor_morphisms, verify_functors
from src.involution.search import find_pairs_in_involution, recheck_pairs
from src.modules.compatibility import (
    check_l_yd_compat, check_module_axioms, check_yd_compat, compat_21, perturbed_candidates,
    equivalence_property,
)
from src.modules.component import GroupElementG
from src.modules.yd_module import YDModule, build_H_alpha_beta, build_pii_module, trivial_module
from src.tcoalgebra.structure import TCoalgebraData
from src.tcoalgebra.verification import verify_rep_equivalences, verify_tcoalgebra

logger = logging.getLogger(__name__)

Task = Tuple[str, Callable[[], Report]]


# === RAPPORT ===
@dataclass
class VerificationReport:
    """Résultat d'une suite : vérifications ordonnées, durée, empreintes des entrées"""
    suite: str
    checks: List[CheckResult] = dc_field(default_factory=list)
    duration: float = 0.0
    digests: Dict[str, str] = dc_field(default_factory=dict)
    peak_rss_mb: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_FAILED

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'suite': self.suite,
            'passed': self.passed,
            'summary': {'total': len(self.checks), 'failed': len(self.failures)},
            'inputs': dict(sorted(self.digests.items())),
            'checks': [c.to_dict() for c in self.checks],
        }
        if timings:
            data['duration_seconds'] = round(self.duration, 3)
            data['peak_rss_mb'] = round(self.peak_rss_mb or 0.0, 1)
        return data

    def to_frame(self) -> pd.DataFrame:
        width = REPORT_CONFIG['text_anchor_width']
        rows = [{
            'check': c.check_id,
            'status': 'PASS' if c.passed else 'FAIL',
            'counterexample': ", ".join(c.counterexample) if c.counterexample else "",
            'anchor': c.anchor if len(c.anchor) <= width else c.anchor[:width - 1] + "…",
        } for c in self.checks]
        return pd.DataFrame(rows, columns=['check', 'status', 'counterexample', 'anchor'])

    def to_text(self, timings: bool = False) -> str:
        frame = self.to_frame()
        lines = [f"Suite: {self.suite}"]
        for source, digest in sorted(self.digests.items()):
            lines.append(f"Input: {source} sha256={digest[:16]}")
        lines.append(frame.to_string(index=False) if not frame.empty else "(no checks)")
        for c in self.failures:
            if c.detail:
                lines.append(f"FAILED {c.check_id}: {c.detail}")
        status = "PASS" if self.passed else "FAIL"
        lines.append(f"{status}: {len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed")
        if timings:
            lines.append(f"Duration: {self.duration:.3f}s, peak RSS {self.peak_rss_mb or 0.0:.1f} MB")
        return "\n".join(lines) + "\n"


# === ENTRÉES DES SUITES ===
@dataclass
class SuiteInputs:
    """Algèbres, automorphismes supplémentaires et modules fournis par l'utilisateur"""
    algebras: List[HopfAlgebraData] = dc_field(default_factory=list)
    automorphisms: Dict[str, List[HopfAutomorphism]] = dc_field(default_factory=dict)
    modules: List[YDModule] = dc_field(default_factory=list)
    digests: Dict[str, str] = dc_field(default_factory=dict)

    def modules_over(self, H: HopfAlgebraData) -> List[YDModule]:
        return [M for M in self.modules if M.H.key() == H.key()]


def algebra_digest(H: HopfAlgebraData) -> str:
    return hashlib.sha256(to_json(dump_hopf_algebra(H)).encode('utf-8')).hexdigest()


def corpus_inputs(suite: str, field: Optional[Field] = None) -> SuiteInputs:
    """Corpus par défaut de la suite (config/verification.yml)"""
    names = VERIFICATION_CONFIG.get('corpus', {}).get(suite, [])
    inputs = SuiteInputs()
    for name in names:
        H = corpus_algebra(name, field)
        inputs.algebras.append(H)
        inputs.digests[f"builtin:{name}"] = algebra_digest(H)
    return inputs


def automorphisms_for(H: HopfAlgebraData, l_max: int,
                      extra: Sequence[HopfAutomorphism] = ()) -> List[HopfAutomorphism]:
    group_auts = H.group.automorphisms() if H.group is not None else ()
    return standard_automorphisms(H, l_max, group_auts, extra)


def largest_dimension(suite: str, algebras: Sequence[HopfAlgebraData], modules: Sequence[YDModule]) -> int:
    """Dimension des plus grands espaces manipulés : dim(H)² dès que D(H) ou DT(H) intervient"""
    n = max((H.dim for H in algebras), default=0)
    m = max((M.dim for M in modules), default=0)
    if suite in ('double', 'dt', 'pii', 'all'):
        n = n * n
    return max(n, m)


# === SUITES ===
def hopf_suite(H: HopfAlgebraData, automorphisms: Callable[[], Sequence[HopfAutomorphism]]) -> Report:
    """Les automorphismes ne sont construits qu'une fois les axiomes établis"""
    report = Report(f"hopf suite on {H.name}")
    axioms = check_hopf_axioms(H)
    report.extend(axioms)
    if not axioms.passed:
        return report
    report.add(DualBasisPairing(H).check())
    report.extend(check_regular_actions(H))
    report.add(check_double_dual(H))
    for theta in automorphisms():
        report.add(automorphism_report(H, theta))
    return report


def _agreement(check_id: str, first: CheckResult, second: CheckResult, where: Tuple[str, ...]) -> CheckResult:
    agree = first.passed == second.passed
    return make_result(check_id, agree, None if agree else where,
                       "" if agree else f"{first.check_id}={first.passed}, {second.check_id}={second.passed}")


def yd_module_checks(M: YDModule) -> Report:
    tag = f"[{M.H.name}:{M.name}:{M.component.name}]"
    report = Report(f"YD checks of {M.name}")
    report.extend(check_module_axioms(M))
    compat = check_yd_compat(M)
    report.extend(compat)
    first, second = compat.checks
    report.add(_agreement("yd.compat_agree" + tag, first, second, (f"M={M.name}",)))
    return report


def yd_suite(H: HopfAlgebraData, automorphisms: Sequence[HopfAutomorphism],
             modules: Sequence[YDModule] = ()) -> Report:
    report = Report(f"yd suite on {H.name}")
    l_yd_max = int(VERIFICATION_CONFIG.get('l_yd_max', 2))
    identity = HopfAutomorphism.identity(H)
    # S^2l ne dépend que de l modulo l'ordre de S² : une seule comparaison par puissance distincte
    l_forms: List[Tuple[int, HopfAutomorphism]] = []
    for l in range(1, l_yd_max + 1):
        power = antipode_power(H, 2 * l)
        if all(power != known for _, known in l_forms):
            l_forms.append((l, power))
    corpus = [build_H_alpha_beta(H, a, b) for a, b in product(automorphisms, repeat=2)]
    for M in corpus:
        report.extend(yd_module_checks(M))
        # la forme l-YD ignore la composante ; le vérificateur général la lit dans (S^2l, id)
        for l, power in l_forms:
            relabeled = M.with_component(GroupElementG(power, identity))
            report.add(_agreement(f"yd.specialization_agree[{H.name}:{M.name}:l={l}]",
                                  check_l_yd_compat(M, l), compat_21(relabeled), (f"M={M.name}", f"l={l}")))
    for M in modules:
        report.extend(yd_module_checks(M))

    count = int(VERIFICATION_CONFIG.get('perturbations', {}).get('cli', 20))
    seed = int(VERIFICATION_CONFIG.get('sampling', {}).get('seed', 42))
    candidates = perturbed_candidates(corpus[0], count, seed, generate_elements(automorphisms))
    agreed, first_disagreement = equivalence_property(candidates)
    report.add(make_result(f"yd.equivalence_perturbed[{H.name}]", agreed == count,
                           None if agreed == count else (f"M={first_disagreement}",),
                           f"{agreed}/{count} candidates agree"))
    return report


def corpus_modules(H: HopfAlgebraData, automorphisms: Sequence[HopfAutomorphism],
                   extra: Sequence[YDModule] = (), limit: Optional[int] = None) -> List[YDModule]:
    """k, puis H_{α,β} pour les paires d'automorphismes, puis les modules fournis"""
    modules = [trivial_module(H)]
    modules += [build_H_alpha_beta(H, a, b) for a, b in product(automorphisms, repeat=2)]
    if limit is not None:
        modules = modules[:limit]
    return modules + list(extra)


def tcategory_suite(H: HopfAlgebraData, automorphisms: Sequence[HopfAutomorphism],
                    modules: Sequence[YDModule] = ()) -> Report:
    report = Report(f"tcategory suite on {H.name}")
    settings = VERIFICATION_CONFIG.get('tcategory', {})
    elements = generate_elements(automorphisms)
    report.extend(check_group_axioms(H, elements))

    objects = corpus_modules(H, automorphisms, modules, int(settings.get('max_modules', 5)))
    for M in objects:
        report.add(check_tensor_unit(M))
        report.extend(check_duality(M))
        for p in elements:
            report.add(check_conjugate_compat(p, M))
            for q in elements:
                report.add(check_conjugate_composite(p, q, M))
    for M, N in product(objects, repeat=2):
        report.add(check_tensor_compat(M, N))
        report.extend(check_braiding(M, N))
        for p in elements:
            report.add(check_conjugate_tensor(p, M, N))
            report.add(check_braiding_conjugation(p, M, N))

    hexagon_objects = objects[:int(settings.get('hexagon_modules', 3))]
    for M, N, P in product(hexagon_objects, repeat=3):
        report.add(check_tensor_assoc(M, N, P))
        report.extend(verify_hexagons(M, N, P))
    for M, N in product(hexagon_objects, repeat=2):
        c, _ = braiding(M, N)
        for p in elements:
            report.add(check_conjugation_functorial(p, c))
    return report


def double_suite(H: HopfAlgebraData, automorphisms: Sequence[HopfAutomorphism],
                 modules: Sequence[YDModule] = ()) -> Report:
    report = Report(f"double suite on {H.name}")
    D = build_drinfeld_double(H)
    report.extend(check_hopf_axioms(D.hopf))
    report.extend(check_drinfeld_double(D))
    report.add(check_anti_yd_algebra(H))
    for a, b in product(automorphisms, repeat=2):
        B = build_H_ab_bicomodule(H, a, b)
        report.add(check_bicomodule(B))
        report.add(check_crossed_specialization(H, a, b))
        _, result = dh_bicomodule_on_A(H, a, b, D)
        report.add(result)
        M = build_H_alpha_beta(H, a, b)
        report.extend(check_yd_datum_module(B, DatumModule.of_yd_module(B, M)))
        report.extend(check_module_roundtrip(M))
    for M in modules:
        report.extend(check_module_roundtrip(M))
    return report


def dt_suite(H: HopfAlgebraData, automorphisms: Sequence[HopfAutomorphism],
             modules: Sequence[YDModule] = ()) -> Report:
    report = Report(f"dt suite on {H.name}")
    generators = [p for p in generate_elements(automorphisms) if not p.is_unit()]
    T = TCoalgebraData.generate(H, generators, VERIFICATION_CONFIG.get('closure_cap'))
    report.extend(verify_tcoalgebra(T))
    report.extend(verify_rep_equivalences(T, corpus_modules(H, automorphisms, modules)))
    return report


def pii_suite(H: HopfAlgebraData, automorphisms: Sequence[HopfAutomorphism],
              modules: Sequence[YDModule] = ()) -> Report:
    report = Report(f"pii suite on {H.name}")
    identity = HopfAutomorphism.identity(H)
    unit_modules = [trivial_module(H), build_H_alpha_beta(H, identity, identity)]
    unit_modules += [M for M in modules if M.component.is_unit()]

    for a, b in product(automorphisms, repeat=2):
        component = GroupElementG(a, b)
        pairs = find_pairs_in_involution(H, a, b)
        report.add(recheck_pairs(H, pairs))
        if not pairs:
            logger.info(f"No pair in involution for {component.name} over {H.name}; functors skipped")
            continue
        in_component = [M for M in modules if M.component == component]
        for pii in pairs:
            sources = [build_H_alpha_beta(H, a, b), build_pii_module(H, pii)] + in_component
            report.extend(verify_functors(pii, sources, unit_modules))
            source_side = [braiding(M, N)[0] for M in sources for N in unit_modules]
            target_side = [braiding(N, N2)[0] for N in unit_modules for N2 in unit_modules]
            report.add(check_functor_morphisms(pii, source_side, target_side))
            report.extend(verify_algebra_iso(H, pii, sources, unit_modules))

    for a in automorphisms:
        report.add(check_alpha_alpha(H, a, [build_H_alpha_beta(H, a, a)], unit_modules))
    return report


SUITE_RUNNERS: Dict[str, Callable[..., Report]] = {
    'yd': yd_suite,
    'tcategory': tcategory_suite,
    'double': double_suite,
    'dt': dt_suite,
    'pii': pii_suite,
}


# === PIPELINE ===
class VerificationPipeline:
    """Planifie une tâche par (suite, algèbre) ; l'assemblage du rapport suit l'ordre de planification"""

    def __init__(self, parallel: Optional[int] = None, max_dim: Optional[int] = None,
                 sample: Optional[int] = None, l_max: Optional[int] = None,
                 field: Optional[Field] = None):
        self.parallel = max(1, int(parallel or PERFORMANCE_CONFIG['parallel']))
        self.max_dim = int(max_dim or PERFORMANCE_CONFIG['max_dim'])
        self.sample = sample
        self.seed = int(VERIFICATION_CONFIG.get('sampling', {}).get('seed', 42))
        self.l_max = int(VERIFICATION_CONFIG.get('l_max', 1) if l_max is None else l_max)
        self.field = field
        self.monitor = PerformanceMonitor()

    def assignments(self, suite: str, inputs: Optional[SuiteInputs]) -> List[Tuple[str, SuiteInputs]]:
        """(suite, entrées) à exécuter ; sans algèbre fournie chaque suite prend son corpus"""
        suites = SUITES if suite == 'all' else (suite,)
        if inputs is not None and inputs.algebras:
            return [(name, inputs) for name in suites]
        planned = []
        for name in suites:
            corpus = corpus_inputs(name, self.field)
            if inputs is not None:
                corpus.automorphisms.update(inputs.automorphisms)
            planned.append((name, corpus))
        return planned

    def enforce_budget(self, suite: str, inputs: SuiteInputs) -> None:
        """
        Refus anticipé quand le plus grand espace dépasse max_dim : sa multiplication
        ferait déjà plus de max_dim³ coefficients. Chaque tenseur intermédiaire est
        ensuite borné par max_dim³ pendant l'exécution (use_entry_limit).
        """
        largest = largest_dimension(suite, inputs.algebras, inputs.modules)
        if largest > self.max_dim:
            raise BudgetExceededError(
                f"suite '{suite}' works in dimension {largest} > --max-dim {self.max_dim}"
            )

    def _suite_task(self, name: str, H: HopfAlgebraData, inputs: SuiteInputs) -> Report:
        extra = inputs.automorphisms.get(H.name, ())
        if name == 'hopf':
            return hopf_suite(H, lambda: automorphisms_for(H, self.l_max, extra))
        return SUITE_RUNNERS[name](H, automorphisms_for(H, self.l_max, extra), inputs.modules_over(H))

    def plan(self, suite: str, inputs: Optional[SuiteInputs] = None) -> List[Task]:
        tasks: List[Task] = []
        for name, assigned in self.assignments(suite, inputs):
            self.enforce_budget(name, assigned)
            for H in assigned.algebras:
                tasks.append((f"{name}:{H.name}",
                              lambda name=name, H=H, assigned=assigned: self._suite_task(name, H, assigned)))
        return tasks

    def _execute(self, label: str, task: Callable[[], Report]) -> Report:
        with self.monitor.stage(label):
            return task()

    def run(self, suite: str, inputs: Optional[SuiteInputs] = None) -> VerificationReport:
        if suite != 'all' and suite not in SUITES:
            raise MalformedInputError(f"unknown suite '{suite}'; expected one of {SUITES + ('all',)}")
        tasks = self.plan(suite, inputs)
        digests: Dict[str, str] = {}
        for _, assigned in self.assignments(suite, inputs):
            digests.update(assigned.digests)

        logger.info(f"Running suite '{suite}': {len(tasks)} task(s) with {self.parallel} worker(s)")
        start = time.perf_counter()
        with use_sampling(self.sample, self.seed), use_entry_limit(self.max_dim ** 3):
            if self.parallel > 1:
                with ThreadPoolExecutor(max_workers=self.parallel) as executor:
                    futures = [executor.submit(self._execute, label, task) for label, task in tasks]
                    reports = [f.result() for f in futures]
            else:
                reports = [self._execute(label, task) for label, task in tasks]

        result = VerificationReport(suite, digests=digests)
        for r in reports:
            result.checks.extend(r.checks)
        result.duration = time.perf_counter() - start
        result.peak_rss_mb = self.monitor.get_summary()['peak_rss_mb']
        logger.info(f"Suite '{suite}': {len(result.checks) - len(result.failures)}/{len(result.checks)} passed")
        return result
