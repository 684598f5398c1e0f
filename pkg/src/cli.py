"""
Hopf YD Verifier - Command Line Interface
hopf-yd run|validate|show|builtin
"""
import argparse
import logging
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import pandas as pd

from config.constants import EXIT_FAILED, EXIT_MALFORMED, EXIT_OK, SUITES
from config.settings import APP_CONFIG, REPORT_CONFIG, get_config
from src.core.exceptions import AxiomViolationError, BudgetExceededError, HopfYDError, MalformedInputError
from src.core.field import Field
from src.data.loader import InputLoader, ParsedInputs, parse_inputs
from src.data.serializer import dump_hopf_algebra, dump_report, to_json
from src.hopf.builtins import build_builtin, corpus_algebra
from src.pipelines.verification_pipeline import SuiteInputs, VerificationPipeline

logger = logging.getLogger(__name__)

_STD_AUTS = re.compile(r"^std:(\d+)$")


def configure_logging(verbose: bool = False) -> None:
    config = get_config()
    env_config = config['environment']
    level = logging.DEBUG if verbose else getattr(logging, env_config['logging_level'], logging.INFO)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logger.debug(f"{config['app']['app_name']} {config['app']['version']} ({env_config['environment']}), "
                 f"max_dim={config['performance']['max_dim']}, parallel={config['performance']['parallel']}")


def parse_field(value: Optional[str]) -> Optional[Field]:
    """'Q', 'F7' ou 'Fp:7'"""
    if value is None:
        return None
    match = re.match(r"^(?:Q|F(?:p:)?(\d+))$", value)
    if match is None:
        raise MalformedInputError(f"--field expects Q, F<p> or Fp:<p>, got {value!r}")
    return Field.rationals() if match.group(1) is None else Field.prime(int(match.group(1)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=APP_CONFIG['console_script'],
        description=APP_CONFIG['description'],
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--verbose', '-v', action='store_true', help='Debug logging')
    subparsers = parser.add_subparsers(dest='command', required=True)

    run = subparsers.add_parser('run', parents=[common], help='Run a verification suite')
    run.add_argument('suite', choices=SUITES + ('all',), help='Suite to run')
    run.add_argument('files', nargs='*', help='Algebra, automorphism and module files (default: corpus)')
    run.add_argument('--field', help='Field for builtins without their own field (Q, F<p>)')
    run.add_argument('--auts', help='Automorphism file, or std:L for id and S^2l with l <= L')
    run.add_argument('--report', choices=REPORT_CONFIG['formats'], default=REPORT_CONFIG['default_format'])
    run.add_argument('--parallel', type=int, help='Worker threads')
    run.add_argument('--max-dim', type=int, help='Refuse inputs whose largest space exceeds this dimension')
    run.add_argument('--sample', type=int, help='Check identities on n seeded random basis tuples')
    run.add_argument('--timings', action='store_true', help='Include duration and peak memory')
    run.add_argument('--output', '-o', help='Write the report to a file instead of stdout')

    validate = subparsers.add_parser('validate', parents=[common], help='Parse and validate input files')
    validate.add_argument('files', nargs='+')
    validate.add_argument('--field')

    show = subparsers.add_parser('show', parents=[common], help='Print a summary of an input file')
    show.add_argument('file')
    show.add_argument('--field')

    builtin = subparsers.add_parser('builtin', parents=[common], help='Dump a builtin algebra as an input file')
    builtin.add_argument('name', help='sweedler4, cyclic, symmetric or a corpus name (cyclic3, dual_sweedler4, ...)')
    builtin.add_argument('--n', type=int, default=None, help='Order for cyclic/symmetric')
    builtin.add_argument('--field')
    builtin.add_argument('--output', '-o')
    return parser


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding='utf-8')
        logger.info(f"Wrote {output}")
    else:
        sys.stdout.write(text)


def _suite_inputs(parsed: ParsedInputs) -> SuiteInputs:
    return SuiteInputs(
        algebras=list(parsed.algebras),
        automorphisms={name: list(auts) for name, auts in parsed.automorphisms.items()},
        modules=list(parsed.modules),
        digests=dict(parsed.digests),
    )


# === SOUS-COMMANDES ===
def cmd_run(args: argparse.Namespace) -> int:
    field = parse_field(args.field)
    l_max: Optional[int] = None
    files: List[str] = list(args.files)
    if args.auts:
        std = _STD_AUTS.match(args.auts)
        if std:
            l_max = int(std.group(1))
        else:
            # les automorphismes précèdent les modules qui les citent
            files.insert(0, args.auts)

    # la suite hopf rapporte elle-même les axiomes violés
    parsed = parse_inputs(files, field=field, validate=args.suite != 'hopf', l_max=l_max)
    inputs = _suite_inputs(parsed) if files else None

    pipeline = VerificationPipeline(
        parallel=args.parallel, max_dim=args.max_dim, sample=args.sample, l_max=l_max, field=field,
    )
    report = pipeline.run(args.suite, inputs)
    if args.report == 'json':
        text = dump_report(report, timings=args.timings)
    else:
        text = report.to_text(timings=args.timings)
    _emit(text, args.output)
    return report.exit_code


def cmd_validate(args: argparse.Namespace) -> int:
    loader = InputLoader(parse_field(args.field), validate=True)
    inputs = ParsedInputs()
    for path in args.files:
        loader.load_file(path, inputs)
        print(f"OK {path}")
    return EXIT_OK


def summary_frame(inputs: ParsedInputs) -> pd.DataFrame:
    rows = []
    for H in inputs.algebras:
        rows.append({'kind': 'hopf_algebra', 'name': H.name, 'field': H.field.name, 'dim': H.dim,
                     'basis': " ".join(H.basis), 'component': ''})
    for algebra_name, auts in inputs.automorphisms.items():
        for theta in auts:
            rows.append({'kind': 'automorphism', 'name': theta.name, 'field': theta.field.name,
                         'dim': theta.matrix.shape[0], 'basis': '', 'component': f"on {algebra_name}"})
    for M in inputs.modules:
        rows.append({'kind': 'yd_module', 'name': M.name, 'field': M.field.name, 'dim': M.dim,
                     'basis': " ".join(M.basis), 'component': M.component.name})
    return pd.DataFrame(rows, columns=['kind', 'name', 'field', 'dim', 'basis', 'component'])


def cmd_show(args: argparse.Namespace) -> int:
    loader = InputLoader(parse_field(args.field), validate=False)
    inputs = ParsedInputs()
    loader.load_file(args.file, inputs)
    print(summary_frame(inputs).to_string(index=False))
    return EXIT_OK


def cmd_builtin(args: argparse.Namespace) -> int:
    field = parse_field(args.field)
    if args.name in ('sweedler4', 'cyclic', 'symmetric'):
        descriptor = {'builtin': args.name}
        if args.n is not None:
            descriptor['n'] = args.n
        H = build_builtin(descriptor, field)
    else:
        H = corpus_algebra(args.name, field)
    _emit(to_json(dump_hopf_algebra(H)), args.output)
    return EXIT_OK


COMMANDS = {
    'run': cmd_run,
    'validate': cmd_validate,
    'show': cmd_show,
    'builtin': cmd_builtin,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        return COMMANDS[args.command](args)
    except (MalformedInputError, AxiomViolationError, BudgetExceededError) as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except HopfYDError as e:
        logger.error(f"Verification aborted: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
