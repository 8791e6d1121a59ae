import unittest

from hopf_integrality.exactfield import CyclotomicField, PrimeField, RationalField
from hopf_integrality.findim import HopfAlgebraData, is_cocommutative, verify_hopf_axioms
from hopf_integrality.models import (
    MODEL_NAMES,
    ModelBundle,
    ModelError,
    cyclic_group,
    group_from_table,
    named_model,
    primitive_root_of_unity,
    symmetric_group,
    taft,
    taft_dual_numbers_model,
    taft_name,
)


class TestGroups(unittest.TestCase):
    def test_cyclic_group(self):
        G = cyclic_group(3)
        self.assertEqual(G.names, ('1', 'g', 'g2'))
        self.assertEqual(G.inverses, (0, 2, 1))

    def test_symmetric_group(self):
        G = symmetric_group(3)
        self.assertEqual(G.order, 6)
        self.assertEqual(G.names[G.identity], '1')
        self.assertIn('p102', G.names)

    def test_invalid_tables(self):
        with self.assertRaises(ModelError):
            group_from_table(['a', 'b'], [[0, 0], [0, 0]])
        with self.assertRaises(ModelError):
            group_from_table(['a', 'b'], [[0, 1]])


class TestTaft(unittest.TestCase):
    def test_roots_of_unity(self):
        self.assertEqual(primitive_root_of_unity(PrimeField(7), 3), 2)
        with self.assertRaises(ModelError):
            primitive_root_of_unity(PrimeField(5), 3)
        k = CyclotomicField(6)
        self.assertEqual(primitive_root_of_unity(k, 3), k.power(k.zeta, 2))

    def test_invalid_parameters(self):
        with self.assertRaises(ModelError):
            taft(2, PrimeField(2))
        with self.assertRaises(ModelError):
            taft(2, RationalField(), xi=1)
        with self.assertRaises(ModelError):
            taft(1, RationalField())

    def test_names(self):
        self.assertEqual(taft_name(0, 0), '1')
        self.assertEqual(taft_name(2, 3), 'g2x3')
        H = taft(3, PrimeField(7))
        self.assertEqual(H.basis_names[:4], ('1', 'g', 'g2', 'x'))
        self.assertEqual(H.dim, 9)
        self.assertFalse(is_cocommutative(H))

    def test_taft_over_prime_field(self):
        self.assertTrue(verify_hopf_axioms(taft(4, PrimeField(5))).passed)


class TestNamedModels(unittest.TestCase):
    def test_every_name_builds(self):
        for name in MODEL_NAMES:
            with self.subTest(model=name):
                built = named_model(name)
                self.assertIsInstance(built, (HopfAlgebraData, ModelBundle))

    def test_field_override(self):
        bundle = named_model('taft-dual-numbers', PrimeField(3))
        self.assertEqual(bundle.hopf.field, PrimeField(3))
        self.assertEqual(bundle.parameters, {'N': 2, 'xi': 2})

    def test_unknown_name(self):
        with self.assertRaises(ModelError):
            named_model('quantum-double')

    def test_expected_invariants(self):
        bundle = taft_dual_numbers_model(2, PrimeField(3), max_degree=7)
        A = bundle.algebra
        self.assertEqual([A.format(f) for f in bundle.expected.hopf_invariants], ['1', 'y^3', 'y^6'])
        self.assertEqual(len(bundle.expected.grouplike_invariants), 8)
        rational = taft_dual_numbers_model(2, RationalField(), max_degree=7)
        self.assertEqual([A.format(f) for f in rational.expected.hopf_invariants], ['1'])


if __name__ == '__main__':
    unittest.main()
