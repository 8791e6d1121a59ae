import json
import os
import shutil
import tempfile
import unittest

from hopf_integrality.action import ActionSpec
from hopf_integrality.commalg import FPCommAlgebra
from hopf_integrality.definitions import (
    DefinitionError,
    action_from_dict,
    algebra_from_dict,
    dump_action,
    dump_algebra,
    dump_hopf,
    hopf_from_dict,
    load_action,
    load_hopf,
    parse_definition,
    write_definition,
)
from hopf_integrality.exactfield import CyclotomicField, RationalField
from hopf_integrality.models import sweedler, taft, taft_dual_numbers_model


class TestDefinitionFiles(unittest.TestCase):
    def setUp(self):
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.test_dir)

    def _path(self, name):
        return os.path.join(self.test_dir, name)

    def _write_raw(self, name, text):
        path = self._path(name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def test_hopf_file_reload(self):
        H = taft(3, CyclotomicField(3))
        path = self._path('taft3.hopf.json')
        write_definition(dump_hopf(H), path)
        loaded = load_hopf(path)
        self.assertEqual(loaded.tables(), H.tables())
        self.assertEqual(loaded.basis_names, H.basis_names)
        self.assertEqual(loaded.coradical_hint, H.coradical_hint)

    def test_scalars_are_strings(self):
        data = dump_hopf(sweedler())
        self.assertEqual(data['counit'], ['1', '1', '0', '0'])
        self.assertEqual(data['field'], {'kind': 'rational'})
        data['counit'][0] = 1
        with self.assertRaises(DefinitionError) as ctx:
            hopf_from_dict(data, 'h.json')
        self.assertIn('scalars must be strings', str(ctx.exception))

    def test_json_syntax_error_has_position(self):
        path = self._write_raw('broken.json', '{\n  "field": {"kind": "rational"},\n  "basis": [\n')
        with self.assertRaises(DefinitionError) as ctx:
            load_hopf(path)
        self.assertRegex(str(ctx.exception), r"broken\.json:\d+:\d+: ")

    def test_missing_file_and_keys(self):
        with self.assertRaises(DefinitionError):
            load_hopf(self._path('absent.json'))
        with self.assertRaises(DefinitionError) as ctx:
            hopf_from_dict({'field': {'kind': 'rational'}}, 'h.json')
        self.assertIn("missing key 'basis'", str(ctx.exception))
        with self.assertRaises(DefinitionError):
            hopf_from_dict({'field': {'kind': 'prime', 'p': 4}, 'basis': ['1']}, 'h.json')

    def test_algebra_definition(self):
        A = algebra_from_dict({'field': {'kind': 'rational'}, 'variables': ['y', 'z'], 'relations': ['z^2']})
        self.assertEqual(dump_algebra(A)['relations'], ['z^2'])
        with self.assertRaises(DefinitionError):
            algebra_from_dict({'field': {'kind': 'rational'}, 'variables': ['y'], 'relations': ['w']})
        with self.assertRaises(DefinitionError):
            algebra_from_dict({'field': {'kind': 'rational'}, 'variables': 'y'})

    def test_action_entries(self):
        H = sweedler()
        A = FPCommAlgebra.create(RationalField(), ['y'])
        entries = [{'basis': name, 'var': 'y', 'value': '0'} for name in ('x', 'gx')]
        entries += [{'basis': 0, 'var': 'y', 'value': 'y'}, {'basis': 'g', 'var': 'y', 'value': 'y'}]
        spec = action_from_dict({'action': entries}, H, A)
        self.assertIsInstance(spec, ActionSpec)
        with self.assertRaises(DefinitionError) as ctx:
            action_from_dict({'action': entries + [entries[0]]}, H, A)
        self.assertIn('duplicate', str(ctx.exception))
        with self.assertRaises(DefinitionError) as ctx:
            action_from_dict({'action': entries[1:]}, H, A)
        self.assertIn('not total', str(ctx.exception))
        with self.assertRaises(DefinitionError):
            action_from_dict({'action': [{'basis': 'h', 'var': 'y', 'value': 'y'}]}, H, A)
        with self.assertRaises(DefinitionError):
            action_from_dict({'action': [{'basis': 0, 'var': 'w', 'value': 'y'}]}, H, A)

    def test_action_references_resolve_relative_to_file(self):
        bundle = taft_dual_numbers_model(2, RationalField())
        sub = self._path('defs')
        os.makedirs(sub)
        write_definition(dump_hopf(bundle.hopf), os.path.join(sub, 'h.json'))
        write_definition(dump_algebra(bundle.algebra), os.path.join(sub, 'a.json'))
        action_path = os.path.join(sub, 'act.json')
        write_definition(dump_action(bundle.action, 'h.json', 'a.json'), action_path)
        spec = load_action(action_path)
        self.assertEqual(spec.table, bundle.action.table)
        self.assertIsInstance(parse_definition(action_path), ActionSpec)
        self.assertIsInstance(parse_definition(os.path.join(sub, 'a.json')), FPCommAlgebra)
        with open(action_path, encoding='utf-8') as f:
            data = json.load(f)
        self.assertEqual(data['hopf'], 'h.json')
        self.assertEqual(len(data['action']), 8)

    def test_unknown_definition_kind(self):
        path = self._write_raw('other.json', '{"field": {"kind": "rational"}}')
        with self.assertRaises(DefinitionError):
            parse_definition(path)
        path = self._write_raw('list.json', '[1, 2]')
        with self.assertRaises(DefinitionError):
            parse_definition(path)


if __name__ == '__main__':
    unittest.main()
