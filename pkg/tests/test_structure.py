import unittest
from fractions import Fraction

from hopf_integrality.exactfield import CyclotomicField, PrimeField, RationalField
from hopf_integrality.findim import format_element, parse_element, verify_hopf_axioms
from hopf_integrality.linalg import Subspace
from hopf_integrality.models import cyclic_group, group_algebra, named_model, sweedler, symmetric_group, taft
from hopf_integrality.structure import (
    HopfIdealError,
    UnsupportedConfigurationError,
    check_filtration,
    check_grouplike_epimorphism,
    classify,
    coradical,
    coradical_filtration,
    filtration_plus,
    grouplikes,
    ideal_generated,
    is_semisimple,
    left_ideal_product,
    left_integral_space,
    quotient_hopf,
    verify_hopf_ideal,
)


class TestSweedlerStructure(unittest.TestCase):
    def setUp(self):
        self.H = sweedler()

    def test_grouplikes(self):
        G = grouplikes(self.H)
        self.assertEqual(G.elements, (self.H.basis_vector(0), self.H.basis_vector(1)))
        self.assertEqual(G.identity, 0)
        self.assertEqual(G.order(1), 2)
        self.assertEqual(G.inverses, (0, 1))

    def test_integral_and_semisimplicity(self):
        H = self.H
        space = left_integral_space(H)
        self.assertEqual(space.dim, 1)
        self.assertEqual(format_element(H, space.basis[0]), 'x + gx')
        verdict = is_semisimple(H)
        self.assertFalse(verdict.semisimple)
        self.assertEqual(verdict.integral, (Fraction(0), Fraction(0), Fraction(1), Fraction(1)))
        self.assertEqual(verdict.counit_value, Fraction(0))

    def test_coradical_filtration(self):
        H = self.H
        filtration = coradical_filtration(H)
        self.assertEqual(filtration.dims(), [2, 4])
        self.assertEqual(filtration.length, 1)
        self.assertEqual(filtration.coradical, Subspace.span(H.field, 4, [H.basis_vector(0), H.basis_vector(1)]))
        report = check_filtration(H, filtration)
        self.assertTrue(report.passed)
        self.assertTrue(report.coradical_subhopf)
        self.assertIn('multiplicative', report.checks.names())
        self.assertEqual(filtration.layer(7), filtration.layers[-1])

    def test_filtration_plus(self):
        H = self.H
        plus = filtration_plus(H, 0)
        self.assertEqual(plus.dim, 1)
        self.assertTrue(plus.contains(parse_element(H, 'g - 1')))
        self.assertEqual(filtration_plus(H, 5).dim, 3)

    def test_classification(self):
        c = classify(self.H)
        self.assertTrue(c.pointed)
        self.assertFalse(c.connected)
        self.assertEqual((c.coradical_dim, c.grouplike_count), (2, 2))


class TestOtherModels(unittest.TestCase):
    def test_symmetric_group_algebra(self):
        H = group_algebra(symmetric_group(3), RationalField())
        self.assertTrue(is_semisimple(H).semisimple)
        c = classify(H)
        self.assertEqual(c.grouplike_count, 6)
        self.assertTrue(c.pointed)
        self.assertFalse(c.connected)

    def test_modular_group_algebra_is_not_semisimple(self):
        H = group_algebra(3, PrimeField(3))
        verdict = is_semisimple(H)
        self.assertFalse(verdict.semisimple)
        self.assertEqual(format_element(H, verdict.integral), '1 + g + g2')

    def test_dual_of_symmetric_group_algebra_is_not_pointed(self):
        D = named_model('dual-kS3')
        c = classify(D)
        self.assertEqual(c.grouplike_count, 2)
        self.assertEqual(c.coradical_dim, 6)
        self.assertFalse(c.pointed)

    def test_taft_filtration_over_cyclotomic_field(self):
        for N in (2, 3, 4):
            with self.subTest(N=N):
                H = taft(N, CyclotomicField(N))
                filtration = coradical_filtration(H)
                self.assertEqual(filtration.dims(), [N * (r + 1) for r in range(N)])
                self.assertTrue(check_filtration(H, filtration).passed)
                self.assertEqual(grouplikes(H).size, N)
                self.assertTrue(classify(H).pointed)

    def test_small_characteristic_uses_hint(self):
        H = sweedler(PrimeField(3))
        self.assertEqual(coradical(H).dim, 2)
        bare = H.__class__(H.field, H.dim, H.basis_names, H.mult, H.unit, H.comult, H.counit, H.antipode)
        with self.assertRaises(UnsupportedConfigurationError):
            coradical(bare)


class TestHopfIdeals(unittest.TestCase):
    def setUp(self):
        self.H = sweedler()

    def _ideal(self, text):
        return ideal_generated(self.H, [parse_element(self.H, text)])

    def test_ideal_of_g_minus_one(self):
        J = self._ideal('g - 1')
        self.assertEqual(J.dim, 3)
        self.assertTrue(verify_hopf_ideal(self.H, J).hopf_ideal)
        Q = quotient_hopf(self.H, J)
        self.assertEqual(Q.hopf.dim, 1)
        self.assertEqual(Q.hopf.basis_names, ('1',))
        quotient = Q.hopf
        self.assertEqual(grouplikes(quotient).size, 1)
        c = classify(quotient)
        self.assertTrue(c.pointed)
        self.assertTrue(c.connected)

    def test_ideal_of_x_gives_group_algebra(self):
        H = self.H
        J = self._ideal('x')
        self.assertEqual(J.dim, 2)
        Q = quotient_hopf(H, J)
        self.assertEqual(Q.hopf.basis_names, ('1', 'g'))
        self.assertEqual(Q.kept, (0, 1))
        self.assertTrue(verify_hopf_axioms(Q.hopf).passed)
        self.assertEqual(Q.project(parse_element(H, 'g*x + g')), Q.hopf.basis_vector(1))
        self.assertTrue(check_grouplike_epimorphism(H, Q).passed)

    def test_non_hopf_ideal_is_refused(self):
        J = self._ideal('g + 1')
        report = verify_hopf_ideal(self.H, J)
        self.assertFalse(report.hopf_ideal)
        self.assertFalse(report.counit_zero)
        with self.assertRaises(HopfIdealError):
            quotient_hopf(self.H, J)

    def test_left_ideal_of_coradical_augmentation_is_coideal(self):
        H = self.H
        V = left_ideal_product(H, filtration_plus(H, 0))
        self.assertEqual(V.dim, 2)
        self.assertTrue(V.contains(parse_element(H, 'x + g*x')))
        report = verify_hopf_ideal(H, V)
        self.assertTrue(report.coideal)
        self.assertFalse(report.two_sided_ideal)

    def test_coradical_augmentation_ideal_is_coideal_in_taft_algebras(self):
        for N in (3, 4):
            with self.subTest(N=N):
                H = taft(N, CyclotomicField(N))
                V = left_ideal_product(H, filtration_plus(H, 0))
                self.assertTrue(verify_hopf_ideal(H, V).coideal)

    def test_cyclic_quotient(self):
        H = group_algebra(cyclic_group(4), RationalField())
        J = ideal_generated(H, [parse_element(H, 'g2 - 1')])
        Q = quotient_hopf(H, J)
        self.assertEqual(Q.hopf.basis_names, ('1', 'g'))
        self.assertTrue(verify_hopf_axioms(Q.hopf).passed)


if __name__ == '__main__':
    unittest.main()
