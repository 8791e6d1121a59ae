import json
import os
import shutil
import tempfile
import unittest
from unittest.mock import patch

from click.testing import CliRunner

from hopf_integrality import cli, run
from hopf_integrality.definitions import (
    DefinitionError,
    dump_action,
    dump_algebra,
    dump_hopf,
    load_hopf,
    write_definition,
)
from hopf_integrality.exactfield import RationalField
from hopf_integrality.models import sweedler, taft_dual_numbers_model
from hopf_integrality.utils.const import HOPF_INTEGRALITY_WITNESS_BUDGET


def _sections(output: str) -> dict:
    data = json.loads(output)
    return {s['title']: s['entries'] for s in data['sections']}


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()
        self.test_dir = tempfile.mkdtemp()
        self.hopf_path = os.path.join(self.test_dir, 'sweedler.hopf.json')
        write_definition(dump_hopf(sweedler()), self.hopf_path)
        bundle = taft_dual_numbers_model(2, RationalField())
        self.action_files = [os.path.join(self.test_dir, name) for name in ('h.json', 'a.json', 'act.json')]
        write_definition(dump_hopf(bundle.hopf), self.action_files[0])
        write_definition(dump_algebra(bundle.algebra), self.action_files[1])
        write_definition(dump_action(bundle.action, 'h.json', 'a.json'), self.action_files[2])

    def tearDown(self):
        shutil.rmtree(self.test_dir)


class TestHopfCommands(CliTestCase):
    def test_verify(self):
        result = self.runner.invoke(cli, ['hopf', 'verify', self.hopf_path])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(result.output.startswith('hopf verify: ok'))

    def test_analyze(self):
        result = self.runner.invoke(cli, ['hopf', 'analyze', self.hopf_path, '--json'])
        self.assertEqual(result.exit_code, 0, result.output)
        sections = _sections(result.output)
        self.assertEqual(sections['grouplikes']['count'], 2)
        self.assertEqual(sections['grouplikes']['orders'], [1, 2])
        self.assertEqual(sections['integrals']['left_integral'], 'x + gx')
        self.assertEqual(sections['integrals']['counit_of_integral'], '0')
        self.assertFalse(sections['integrals']['semisimple'])
        self.assertEqual(sections['coradical_filtration']['dimensions'], [2, 4])
        self.assertTrue(sections['coradical_filtration']['pointed'])

    def test_quotient(self):
        out = os.path.join(self.test_dir, 'quotient.json')
        result = self.runner.invoke(cli, ['hopf', 'quotient', self.hopf_path, '-g', 'x', '-o', out])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(load_hopf(out).basis_names, ('1', 'g'))

    def test_quotient_by_non_hopf_ideal(self):
        result = self.runner.invoke(cli, ['hopf', 'quotient', self.hopf_path, '-g', 'g + 1'])
        self.assertEqual(result.exit_code, 1)
        self.assertIn('counit_zero: FAIL', result.output)

    def test_bad_json(self):
        path = os.path.join(self.test_dir, 'bad.json')
        with open(path, 'w', encoding='utf-8') as f:
            f.write('{"field": ')
        result = self.runner.invoke(cli, ['hopf', 'verify', path])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('Error', result.output)

    def test_corrupted_antipode(self):
        data = dump_hopf(sweedler())
        data['antipode'][2] = ['0', '0', '1', '0']
        path = os.path.join(self.test_dir, 'broken.json')
        write_definition(data, path)
        result = self.runner.invoke(cli, ['hopf', 'verify', path])
        self.assertEqual(result.exit_code, 1)
        self.assertIn('antipode: FAIL  witness={"basis": ["x"]}', result.output)

    def test_missing_file(self):
        result = self.runner.invoke(cli, ['hopf', 'verify', os.path.join(self.test_dir, 'absent.json')])
        self.assertEqual(result.exit_code, 2)

    @patch('hopf_integrality.commands.cmd_hopf.verify_hopf_axioms')
    def test_internal_value_error_is_not_an_input_error(self, mock_verify):
        mock_verify.side_effect = ValueError('row 0 has length 3, expected 4')
        result = self.runner.invoke(cli, ['hopf', 'verify', self.hopf_path])
        self.assertEqual(result.exit_code, 1)
        self.assertIn('ValueError: row 0 has length 3, expected 4', result.output)

    @patch('hopf_integrality.commands.cmd_hopf.load_hopf')
    def test_definition_errors_are_input_errors(self, mock_load):
        mock_load.side_effect = DefinitionError('sweedler.hopf.json: missing key "mult"')
        result = self.runner.invoke(cli, ['hopf', 'verify', self.hopf_path])
        self.assertEqual(result.exit_code, 2)
        self.assertIn('missing key', result.output)

    @patch('hopf_integrality.commands.common.get_writer')
    def test_report_goes_through_writer(self, mock_get_writer):
        mock_writer = mock_get_writer.return_value
        result = self.runner.invoke(cli, ['hopf', 'verify', self.hopf_path, '--json'])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(mock_get_writer.call_args[0][0], 'json')
        mock_writer.assert_called_once()
        self.assertEqual(mock_writer.call_args[0][0].command, 'hopf verify')


class TestActCommands(CliTestCase):
    def test_verify(self):
        result = self.runner.invoke(cli, ['act', 'verify', *self.action_files, '-d', '3'])
        self.assertEqual(result.exit_code, 0, result.output)

    def test_invariants(self):
        result = self.runner.invoke(cli, ['act', 'invariants', *self.action_files, '-d', '4', '--json'])
        self.assertEqual(result.exit_code, 0, result.output)
        sections = _sections(result.output)
        self.assertEqual(sections['invariants']['basis'], ['1'])
        self.assertEqual(sections['invariants']['generators'], [])
        self.assertFalse(sections['trace_image']['equal_to_invariants'])

    def test_grouplike_invariants(self):
        result = self.runner.invoke(cli, ['act', 'invariants', *self.action_files, '--sub', 'G', '-d', '3',
                                          '--json'])
        self.assertEqual(result.exit_code, 0, result.output)
        sections = _sections(result.output)
        self.assertEqual(sections['invariants']['generators'], ['y'])
        self.assertNotIn('trace_image', sections)

    def _integrality(self, *extra):
        return self.runner.invoke(cli, ['act', 'integrality', *self.action_files, '-e', 'y', '-d', '4',
                                        '--monic-deg', '3', '--coeff-deg', '3', *extra])

    def test_integrality_expectations(self):
        self.assertEqual(self._integrality('--expect', 'none').exit_code, 0)
        self.assertEqual(self._integrality('--expect', 'witness').exit_code, 1)
        result = self._integrality('--over', 'gens', '--gens', 'y', '--json')
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(_sections(result.output)['integrality']['result'], 'T - y')

    @patch.dict(os.environ, {HOPF_INTEGRALITY_WITNESS_BUDGET: '2'})
    def test_witness_budget_exit_code(self):
        result = self._integrality('--over', 'gens', '--gens', 'y')
        self.assertEqual(result.exit_code, 3)
        self.assertIn('resource bound exceeded', result.output)

    @patch.dict(os.environ, {HOPF_INTEGRALITY_WITNESS_BUDGET: 'abc'})
    def test_invalid_setting_exit_code(self):
        self.assertEqual(self._integrality('--over', 'gens', '--gens', 'y').exit_code, 2)


class TestDemoCommands(CliTestCase):
    def test_counterexample(self):
        result = self.runner.invoke(cli, ['demo', 'counterexample', '-d', '4', '--monic-deg', '3',
                                          '--coeff-deg', '3', '--json'])
        self.assertEqual(result.exit_code, 0, result.output)
        sections = _sections(result.output)
        self.assertEqual(sections['invariants_H']['basis'], ['1'])
        self.assertEqual(sections['integrality_over_H']['result'], 'none up to (3, 3)')
        self.assertEqual(sections['integrality_over_G']['result'], 'T - y')

    def test_charp(self):
        result = self.runner.invoke(cli, ['demo', 'charp', '--p', '3', '-d', '4', '--monic-deg', '3',
                                          '--coeff-deg', '2'])
        self.assertEqual(result.exit_code, 0, result.output)

    def test_emit(self):
        out = os.path.join(self.test_dir, 'models')
        result = self.runner.invoke(cli, ['demo', 'emit', 'sign', '--out', out])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(sorted(os.listdir(out)), ['sign.action.json', 'sign.algebra.json', 'sign.hopf.json'])
        verify = self.runner.invoke(cli, ['act', 'verify', *(os.path.join(out, f"sign.{kind}.json")
                                                             for kind in ('hopf', 'algebra', 'action'))])
        self.assertEqual(verify.exit_code, 0, verify.output)

    def test_emit_unknown_model(self):
        self.assertEqual(self.runner.invoke(cli, ['demo', 'emit', 'bogus', '--out', self.test_dir]).exit_code, 2)


class TestRun(CliTestCase):
    def test_exit_codes(self):
        with patch('hopf_integrality.commands.common.get_writer'):
            self.assertEqual(run(['hopf', 'verify', self.hopf_path]), 0)
        self.assertEqual(run(['demo', 'emit', 'bogus', '--out', self.test_dir]), 2)


if __name__ == '__main__':
    unittest.main()
