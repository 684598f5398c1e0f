"""
Hopf YD Verifier - CLI and Pipeline Tests
Codes de sortie, rapports texte et JSON, budget, exécution parallèle
"""

import json
import logging
import os
import sys
from pathlib import Path
from unittest.mock import patch

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from config.constants import CHECK_ANCHORS, EXIT_FAILED, EXIT_MALFORMED, EXIT_OK, SUITES, anchor_for
from config.settings import PERFORMANCE_CONFIG, get_config, get_environment_config
from src.cli import main, parse_field, summary_frame
from src.core.exceptions import BudgetExceededError, MalformedInputError
from src.core.field import Field
from src.data.loader import parse_inputs
from src.hopf.builtins import corpus_algebra
from src.pipelines.verification_pipeline import (
    SuiteInputs, VerificationPipeline, corpus_inputs, largest_dimension,
)


def _fixture(fixtures_dir, name):
    return str(fixtures_dir / name)


class TestParseField:
    """Tests de l'option --field"""

    def test_accepted_forms(self):
        assert parse_field(None) is None
        assert parse_field("Q").name == "Q"
        assert parse_field("F7").name == "F7"
        assert parse_field("Fp:7").name == "F7"

    @pytest.mark.parametrize("value", ["R", "F", "Fp:", "F9"])
    def test_rejected_forms(self, value):
        with pytest.raises(MalformedInputError):
            parse_field(value)


class TestRunCommand:
    """Tests de hopf-yd run"""

    def test_corrupted_antipode_fails(self, fixtures_dir, capsys):
        code = main(['run', 'hopf', _fixture(fixtures_dir, 'sweedler4_corrupted_antipode.json'),
                     '--report', 'json'])
        assert code == EXIT_FAILED
        report = json.loads(capsys.readouterr().out)
        assert report['suite'] == 'hopf'
        assert not report['passed']
        failing = {c['check_id']: c for c in report['checks'] if not c['passed']}
        antipode = failing['hopf.antipode_left[sweedler4_corrupted_antipode]']
        assert antipode['counterexample'] == ["h=x"]
        assert 'duration_seconds' not in report

    def test_noncoassociative_reported_by_hopf_suite(self, fixtures_dir, capsys):
        code = main(['run', 'hopf', _fixture(fixtures_dir, 'cyclic2_noncoassociative.json')])
        assert code == EXIT_FAILED
        out = capsys.readouterr().out
        assert "hopf.coassociativity[cyclic2_noncoassociative]" in out
        assert "FAIL:" in out

    def test_noncoassociative_rejected_by_other_suites(self, fixtures_dir):
        assert main(['run', 'yd', _fixture(fixtures_dir, 'cyclic2_noncoassociative.json')]) == EXIT_MALFORMED

    def test_mislabeled_module_fails(self, fixtures_dir, capsys):
        code = main(['run', 'yd', _fixture(fixtures_dir, 'sweedler4_mislabeled_module.json'), '--report', 'json'])
        assert code == EXIT_FAILED
        report = json.loads(capsys.readouterr().out)
        failing = {c['check_id']: c for c in report['checks'] if not c['passed']}
        compat = failing['yd.compat[sweedler4:H_id_id_mislabeled:(S^2,id)]']
        assert compat['counterexample'] == ["h=x", "m=1"]
        assert all('H_id_id_mislabeled' in check_id for check_id in failing)

    @pytest.mark.slow
    def test_regular_module_passes(self, fixtures_dir, capsys):
        code = main(['run', 'yd', _fixture(fixtures_dir, 'sweedler4_regular_module.json')])
        assert code == EXIT_OK
        assert "PASS:" in capsys.readouterr().out

    @pytest.mark.parametrize("name", ['missing.json', 'not_a_document.json'])
    def test_malformed_inputs(self, fixtures_dir, name):
        assert main(['run', 'hopf', _fixture(fixtures_dir, name)]) == EXIT_MALFORMED

    def test_budget_exceeded(self, fixtures_dir):
        assert main(['run', 'hopf', _fixture(fixtures_dir, 'sweedler4.json'), '--max-dim', '2']) == EXIT_MALFORMED

    def test_json_is_reproducible(self, fixtures_dir, tmp_path):
        first, second = tmp_path / 'a.json', tmp_path / 'b.json'
        for out in (first, second):
            assert main(['run', 'hopf', _fixture(fixtures_dir, 'sweedler4.json'),
                         '--report', 'json', '-o', str(out)]) == EXIT_OK
        assert first.read_text(encoding='utf-8') == second.read_text(encoding='utf-8')
        report = json.loads(first.read_text(encoding='utf-8'))
        assert list(report['inputs'].values())[0] == parse_inputs(
            [fixtures_dir / 'sweedler4.json']).digests[_fixture(fixtures_dir, 'sweedler4.json')]

    def test_timings_flag(self, fixtures_dir, capsys):
        main(['run', 'hopf', _fixture(fixtures_dir, 'sweedler4.json'), '--report', 'json', '--timings'])
        report = json.loads(capsys.readouterr().out)
        assert 'duration_seconds' in report
        assert 'peak_rss_mb' in report

    def test_automorphism_file(self, fixtures_dir, capsys):
        code = main(['run', 'hopf', _fixture(fixtures_dir, 'sweedler4.json'),
                     '--auts', _fixture(fixtures_dir, 'sweedler4_automorphisms.json'), '--report', 'json'])
        assert code == EXIT_OK
        check_ids = [c['check_id'] for c in json.loads(capsys.readouterr().out)['checks']]
        assert 'hopf.automorphism[sweedler4:scale2]' in check_ids
        assert 'hopf.automorphism[sweedler4:S^2]' in check_ids

    def test_prime_field_builtin(self, tmp_path, capsys):
        """Un builtin sans corps prend celui de --field ; toute la suite hopf passe sur F_5"""
        path = tmp_path / 'sweedler4.json'
        path.write_text(json.dumps({"builtin": "sweedler4"}), encoding='utf-8')
        code = main(['run', 'hopf', str(path), '--field', 'F5', '--report', 'json'])
        report = json.loads(capsys.readouterr().out)
        assert code == EXIT_OK
        assert report['passed']
        assert report['summary']['failed'] == 0

    def test_prime_field_double(self, tmp_path, capsys):
        path = tmp_path / 'cyclic3.json'
        path.write_text(json.dumps({"builtin": "cyclic", "n": 3}), encoding='utf-8')
        assert main(['run', 'double', str(path), '--field', 'F7']) == EXIT_OK
        assert "Suite: double" in capsys.readouterr().out

    def test_unknown_suite_is_a_usage_error(self):
        with pytest.raises(SystemExit):
            main(['run', 'everything'])


class TestOtherCommands:
    """Tests de validate, show et builtin"""

    def test_validate_ok(self, fixtures_dir, capsys):
        path = _fixture(fixtures_dir, 'sweedler4_regular_module.json')
        assert main(['validate', path]) == EXIT_OK
        assert f"OK {path}" in capsys.readouterr().out

    def test_validate_rejects(self, fixtures_dir):
        assert main(['validate', _fixture(fixtures_dir, 'cyclic2_noncoassociative.json')]) == EXIT_MALFORMED

    def test_show(self, fixtures_dir, capsys):
        assert main(['show', _fixture(fixtures_dir, 'sweedler4_mislabeled_module.json')]) == EXIT_OK
        out = capsys.readouterr().out
        assert "H_id_id_mislabeled" in out
        assert "(S^2,id)" in out

    def test_summary_frame(self, fixtures_dir):
        frame = summary_frame(parse_inputs([_fixture(fixtures_dir, 'sweedler4_automorphisms.json')]))
        assert list(frame['kind']) == ['hopf_algebra', 'automorphism']
        assert frame.iloc[1]['component'] == 'on sweedler4'

    def test_builtin_dump(self, capsys):
        assert main(['builtin', 'cyclic', '--n', '3', '--field', 'F5']) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document['name'] == 'kC3'
        assert document['field'] == {"type": "Fp", "p": 5}
        assert document['dim'] == 3

    def test_builtin_round_trip_through_validate(self, tmp_path, capsys):
        path = tmp_path / 'dual.json'
        assert main(['builtin', 'dual_sweedler4', '-o', str(path)]) == EXIT_OK
        assert main(['validate', str(path)]) == EXIT_OK

    def test_builtin_unknown(self):
        assert main(['builtin', 'octonions']) == EXIT_MALFORMED


class TestVerificationPipeline:
    """Tests de la planification et de l'assemblage des rapports"""

    @pytest.mark.parametrize("suite", SUITES)
    def test_every_suite_on_cyclic2(self, kc2, suite):
        report = VerificationPipeline().run(suite, SuiteInputs(algebras=[kc2]))
        assert report.passed, [c.check_id for c in report.failures]
        assert len(report.checks) > 0

    def test_parallel_keeps_order(self, kc2, kc3):
        inputs = SuiteInputs(algebras=[kc2, kc3])
        sequential = VerificationPipeline(parallel=1).run('hopf', inputs)
        parallel = VerificationPipeline(parallel=3).run('hopf', inputs)
        assert [c.check_id for c in sequential.checks] == [c.check_id for c in parallel.checks]

    def test_sampling(self, kc3):
        full = VerificationPipeline().run('hopf', SuiteInputs(algebras=[kc3]))
        report = VerificationPipeline(sample=5).run('hopf', SuiteInputs(algebras=[kc3]))
        assert report.passed
        assert [c.check_id for c in report.checks] == [c.check_id for c in full.checks]

    def test_default_corpus_assignment(self):
        assignments = VerificationPipeline().assignments('dt', None)
        assert [H.name for H in assignments[0][1].algebras] == ["kC3", "sweedler4"]
        assert set(corpus_inputs('hopf').digests) == {
            "builtin:cyclic2", "builtin:cyclic3", "builtin:symmetric3", "builtin:sweedler4",
            "builtin:dual_sweedler4",
        }

    def test_largest_dimension(self, sweedler):
        assert largest_dimension('hopf', [sweedler], []) == 4
        assert largest_dimension('double', [sweedler], []) == 16
        assert largest_dimension('all', [], []) == 0

    def test_budget(self, sweedler):
        with pytest.raises(BudgetExceededError):
            VerificationPipeline(max_dim=8).run('dt', SuiteInputs(algebras=[sweedler]))

    def test_budget_caps_intermediate_tensors(self, kc3):
        """dim k[C_3] = 3 passe le contrôle initial mais les contractions dépassent 3³ coefficients"""
        pipeline = VerificationPipeline(max_dim=3)
        pipeline.enforce_budget('hopf', SuiteInputs(algebras=[kc3]))
        with pytest.raises(BudgetExceededError) as exc_info:
            pipeline.run('hopf', SuiteInputs(algebras=[kc3]))
        assert "exceeds the budget of 27" in str(exc_info.value)
        assert VerificationPipeline(max_dim=12).run('hopf', SuiteInputs(algebras=[kc3])).passed

    def test_yd_specializations_skip_repeated_powers(self, kc2):
        """S² = id sur k[C_2] : l = 2 répéterait la comparaison de l = 1"""
        report = VerificationPipeline().run('yd', SuiteInputs(algebras=[kc2]))
        ids = [c.check_id for c in report.checks if c.check_id.startswith("yd.specialization_agree")]
        assert ids
        assert all(i.endswith(":l=1]") for i in ids)

    def test_yd_corpus_includes_dual_sweedler(self):
        assert set(corpus_inputs('yd').digests) == {
            "builtin:cyclic2", "builtin:cyclic3", "builtin:symmetric3", "builtin:sweedler4",
            "builtin:dual_sweedler4",
        }
        assignments = VerificationPipeline().assignments('yd', None)
        assert [H.name for H in assignments[0][1].algebras][-1] == "dual(sweedler4)"

    @pytest.mark.slow
    def test_pii_suite_over_prime_field(self):
        """Sur F_7, k[C_3] a trois caractères : neuf paires pour (id, id)"""
        H = corpus_algebra("cyclic3", Field.prime(7))
        report = VerificationPipeline(field=Field.prime(7)).run('pii', SuiteInputs(algebras=[H]))
        assert report.passed, [c.check_id for c in report.failures]

    def test_unknown_suite(self, kc2):
        with pytest.raises(MalformedInputError):
            VerificationPipeline().run('everything', SuiteInputs(algebras=[kc2]))

    def test_report_rendering(self, kc2):
        report = VerificationPipeline().run('hopf', SuiteInputs(algebras=[kc2], digests={"x": "0" * 64}))
        data = report.to_dict()
        assert data['summary'] == {'total': len(report.checks), 'failed': 0}
        assert 'peak_rss_mb' not in data
        assert 'peak_rss_mb' in report.to_dict(timings=True)
        text = report.to_text()
        assert text.startswith("Suite: hopf")
        assert "PASS:" in text
        assert list(report.to_frame().columns) == ['check', 'status', 'counterexample', 'anchor']


class TestConfiguration:
    """Tests de la configuration par environnement"""

    @pytest.mark.parametrize("env,level,parallel", [
        ('development', 'INFO', 1), ('staging', 'INFO', 2), ('production', 'WARNING', 4),
    ])
    def test_environment_profiles(self, env, level, parallel):
        with patch.dict(os.environ, {'HOPFYD_ENV': env}):
            config = get_environment_config()
        assert config['environment'] == env
        assert config['logging_level'] == level
        assert config['parallel'] == parallel

    def test_log_level_override(self):
        with patch.dict(os.environ, {'HOPFYD_ENV': 'production', 'HOPFYD_LOG_LEVEL': 'debug'}):
            assert get_environment_config()['logging_level'] == 'DEBUG'

    def test_verification_defaults(self):
        config = get_config()
        assert config['verification']['sampling']['seed'] == 42
        assert config['verification']['closure_cap'] == 64
        assert config['verification']['perturbations'] == {'tests': 200, 'cli': 20}
        assert config['report']['formats'] == ('text', 'json')

    def test_every_check_has_one_anchor(self):
        assert all(name.count('.') == 1 for name in CHECK_ANCHORS)
        assert all(anchor for anchor in CHECK_ANCHORS.values())

    @pytest.mark.parametrize("check_id", [
        "tcat.conjugate_composite[sweedler4:unit]", "tcat.tensor_assoc[sweedler4]",
        "dcp.crossed_algebra[kC3]", "dcp.crossed_algebra[DT:(S^2,id)]",
    ])
    def test_check_ids_built_by_tests_are_registered(self, check_id):
        assert anchor_for(check_id) == CHECK_ANCHORS[check_id.split("[")[0]]

    @pytest.mark.parametrize("check_id", ["tcat.same[x]", "dcp.hopf_algebra[x]", "dt.component[x]"])
    def test_unregistered_check_ids(self, check_id):
        with pytest.raises(KeyError):
            anchor_for(check_id)

    def test_pipeline_defaults_from_settings(self, mocker):
        mocker.patch.dict(PERFORMANCE_CONFIG, {'parallel': 3, 'max_dim': 12})
        pipeline = VerificationPipeline()
        assert pipeline.parallel == 3
        assert pipeline.max_dim == 12

    def test_verbose_forces_debug(self, mocker):
        basic_config = mocker.patch('src.cli.logging.basicConfig')
        assert main(['builtin', 'sweedler4', '--verbose']) == EXIT_OK
        assert basic_config.call_args.kwargs['level'] == logging.DEBUG

    def test_startup_logs_configuration(self, mocker, caplog):
        mocker.patch('src.cli.logging.basicConfig')
        with caplog.at_level(logging.DEBUG, logger='src.cli'):
            assert main(['builtin', 'cyclic', '--n', '2', '--verbose']) == EXIT_OK
        assert "Hopf YD Verifier 1.0.0" in caplog.text
        assert f"max_dim={PERFORMANCE_CONFIG['max_dim']}" in caplog.text
