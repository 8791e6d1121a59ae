import unittest

from hopf_integrality.action import (
    ActionSpec,
    ActionSpecError,
    IntegralityWitness,
    NoWitnessUpToBounds,
    act,
    act_element,
    algebra_generators,
    frobenius_chain,
    integrality_witness,
    invariants,
    pth_power_bound_check,
    trace_image,
    verify_action,
    verify_witness,
)
from hopf_integrality.commalg import BudgetExceededError, FPCommAlgebra, Workspace, WorkspaceOverflowError
from hopf_integrality.exactfield import CyclotomicField, PrimeField, RationalField
from hopf_integrality.models import (
    counterexample_closed_forms,
    cyclic_sign_model,
    sweedler,
    taft_dual_numbers_model,
)
from hopf_integrality.structure import UnsupportedConfigurationError


def _basis(bundle, subset, d):
    A = bundle.algebra
    W = Workspace.build(A, d)
    return [A.format(W.to_poly(v)) for v in invariants(bundle.action, subset, d).basis]


def _override(bundle, key, value):
    table = bundle.action.table
    images = {(i, v): p for i, row in enumerate(table) for v, p in enumerate(row)}
    images[key] = value
    return ActionSpec.create(bundle.hopf, bundle.algebra, images)


class TestActionSpec(unittest.TestCase):
    def test_field_mismatch(self):
        A = FPCommAlgebra.create(PrimeField(3), ['y'])
        with self.assertRaises(ActionSpecError):
            ActionSpec.create(sweedler(), A, {})

    def test_missing_entries(self):
        H = sweedler()
        A = FPCommAlgebra.create(H.field, ['y'])
        with self.assertRaises(ActionSpecError) as ctx:
            ActionSpec.create(H, A, {(0, 0): 'y'})
        self.assertIn('not total', str(ctx.exception))
        partial = ActionSpec.create(H, A, {(0, 0): 'y'}, require_total=False)
        self.assertFalse(partial.is_total)
        with self.assertRaises(ActionSpecError):
            partial.image(1, 0)

    def test_bad_indices(self):
        H = sweedler()
        A = FPCommAlgebra.create(H.field, ['y'])
        with self.assertRaises(ActionSpecError):
            ActionSpec.create(H, A, {(4, 0): 'y'}, require_total=False)
        with self.assertRaises(ActionSpecError):
            ActionSpec.create(H, A, {(0, 1): 'y'}, require_total=False)

    def test_jump(self):
        bundle = taft_dual_numbers_model(2, RationalField())
        self.assertEqual(bundle.action.jump, 0)
        self.assertEqual(bundle.action.target_degree(5), 5)
        H = sweedler()
        A = FPCommAlgebra.create(H.field, ['y'])
        images = {(i, 0): 'y^3' if i == 0 else '0' for i in range(4)}
        self.assertEqual(ActionSpec.create(H, A, images).jump, 2)


class TestCounterexample(unittest.TestCase):
    def setUp(self):
        self.bundle = taft_dual_numbers_model(2, RationalField())

    def test_action_axioms(self):
        self.assertTrue(verify_action(self.bundle.action, 4).passed)

    def test_x_on_powers(self):
        A = self.bundle.algebra
        self.assertEqual(A.format(act(self.bundle.action, 2, 'y^3')), '3*y^2*z')
        self.assertTrue(act(self.bundle.action, 2, 'y^3*z').is_zero())
        self.assertEqual(A.format(act(self.bundle.action, 1, 'y^2*z')), '-y^2*z')

    def test_act_element_matches_sum(self):
        spec = self.bundle.action
        H = spec.hopf
        t = H.add(H.basis_vector(2), H.basis_vector(3))
        self.assertTrue(act_element(spec, t, 'y^4').is_zero())

    def test_workspace_guard(self):
        with self.assertRaises(WorkspaceOverflowError) as ctx:
            act(self.bundle.action, 2, 'y^3', workspace_degree=2)
        self.assertEqual(ctx.exception.required_degree, 3)

    def test_invariants(self):
        bundle = self.bundle
        self.assertEqual(_basis(bundle, 'G', 4), ['1', 'y', 'y^2', 'y^3', 'y^4'])
        self.assertEqual(_basis(bundle, 'H', 6), ['1'])

    def test_trace_image_is_zero(self):
        image = trace_image(self.bundle.action, 4)
        self.assertEqual(image.image.dim, 0)
        self.assertTrue(image.included)
        self.assertFalse(image.equal)

    def test_y_is_not_integral_over_invariants(self):
        A = self.bundle.algebra
        result = integrality_witness(A, 'y', [], 4, 4)
        self.assertIsInstance(result, NoWitnessUpToBounds)
        self.assertEqual(result.format(), 'none up to (4, 4)')

    def test_y_is_integral_over_grouplike_invariants(self):
        A = self.bundle.algebra
        result = integrality_witness(A, 'y', ['y'], 2, 2)
        self.assertIsInstance(result, IntegralityWitness)
        self.assertEqual(result.format(A), 'T - y')
        self.assertTrue(verify_witness(A, result))

    def test_closed_forms(self):
        self.assertTrue(counterexample_closed_forms(self.bundle, 12).passed)
        cubic = taft_dual_numbers_model(3, CyclotomicField(3))
        self.assertTrue(counterexample_closed_forms(cubic, 12).passed)
        self.assertTrue(verify_action(cubic.action, 3).passed)

    def test_degree_eight_counterexample(self):
        for N in (2, 3, 4):
            with self.subTest(N=N):
                bundle = taft_dual_numbers_model(N, CyclotomicField(N))
                A = bundle.algebra
                self.assertEqual(_basis(bundle, 'G', 8), ['1'] + [f'y^{k}' if k > 1 else 'y' for k in range(1, 9)])
                self.assertEqual(_basis(bundle, 'H', 8), ['1'])
                self.assertEqual(integrality_witness(A, 'y', [], 8, 8).format(), 'none up to (8, 8)')
                witness = integrality_witness(A, 'y', ['y'], 2, 2)
                self.assertEqual(witness.format(A), 'T - y')
                self.assertTrue(verify_witness(A, witness))

    def test_broken_relation_is_detected(self):
        bundle = taft_dual_numbers_model(3, CyclotomicField(3))
        spec = _override(bundle, (3, 1), bundle.algebra.variable(0))
        report = verify_action(spec, 3)
        self.assertFalse(report['relations_annihilated'].passed)

    def test_broken_unit_is_detected(self):
        bundle = self.bundle
        spec = _override(bundle, (0, 0), bundle.algebra.parse('2*y'))
        report = verify_action(spec, 3)
        self.assertFalse(report['unit'].passed)
        self.assertEqual(report['unit'].witness, {'h': '1', 'element': 'y'})

    def test_invariant_inclusions(self):
        for bundle in (self.bundle, cyclic_sign_model(RationalField()),
                       taft_dual_numbers_model(2, PrimeField(3))):
            with self.subTest(model=bundle.name, field=str(bundle.hopf.field)):
                spec = bundle.action
                hopf_inv = invariants(spec, 'H', 6)
                self.assertTrue(invariants(spec, 'G', 6).contains_subspace(hopf_inv))
                self.assertTrue(trace_image(spec, 6).included)

    def test_cubic_taft_invariants(self):
        bundle = taft_dual_numbers_model(3, CyclotomicField(3))
        self.assertEqual(_basis(bundle, 'H', 4), ['1'])
        self.assertEqual(_basis(bundle, 'G', 3), ['1', 'y', 'y^2', 'y^3'])

    def test_frobenius_chain_needs_positive_characteristic(self):
        with self.assertRaises(UnsupportedConfigurationError):
            frobenius_chain(self.bundle.action, 1, 3)
        self.assertFalse(pth_power_bound_check(self.bundle.action, 3).applicable)


class TestSignModel(unittest.TestCase):
    def test_rational_witness_and_trace(self):
        bundle = cyclic_sign_model(RationalField())
        A = bundle.algebra
        self.assertEqual(_basis(bundle, 'H', 4), ['1', 'y^2', 'y^4'])
        result = integrality_witness(A, 'y', ['y^2'], 3, 3)
        self.assertEqual(result.format(A), 'T^2 - y^2')
        self.assertTrue(trace_image(bundle.action, 6).equal)

    def test_frobenius_chain(self):
        bundle = cyclic_sign_model(PrimeField(3))
        chain = frobenius_chain(bundle.action, 1, 4)
        A = bundle.algebra
        self.assertTrue(chain.passed)
        self.assertEqual([[A.format(g) for g in level.generators] for level in chain.levels],
                         [['y'], ['y^2'], ['y^6']])


class TestCharacteristicThree(unittest.TestCase):
    def setUp(self):
        self.bundle = taft_dual_numbers_model(2, PrimeField(3))

    def test_invariants_and_generators(self):
        bundle = self.bundle
        A = bundle.algebra
        self.assertEqual(_basis(bundle, 'H', 9), ['1', 'y^3', 'y^6', 'y^9'])
        W = Workspace.build(A, 9)
        gens = algebra_generators(A, invariants(bundle.action, 'H', 9), W)
        self.assertEqual([A.format(g) for g in gens], ['y^3'])

    def test_witness(self):
        A = self.bundle.algebra
        result = integrality_witness(A, 'y', ['y^3'], 4, 2)
        self.assertEqual(result.format(A), 'T^3 - y^3')
        self.assertEqual(result.degree, 3)
        self.assertTrue(verify_witness(A, result))

    def test_witness_budget(self):
        with self.assertRaises(BudgetExceededError):
            integrality_witness(self.bundle.algebra, 'y', ['y^3'], 4, 4, budget=3)

    def test_frobenius_chain(self):
        chain = frobenius_chain(self.bundle.action, 1, 3)
        A = self.bundle.algebra
        self.assertEqual(chain.p, 3)
        self.assertEqual([level.index for level in chain.levels], [-1, 0, 1])
        self.assertEqual([A.format(g) for g in chain.levels[1].generators], ['y'])
        self.assertEqual([A.format(g) for g in chain.levels[2].generators], ['y^3'])
        self.assertTrue(chain.passed)
        with self.assertRaises(UnsupportedConfigurationError):
            frobenius_chain(self.bundle.action, 1, 3, p=5)

    def test_power_bound(self):
        with self.assertLogs('hopf_integrality.action', level='WARNING'):
            verdict = pth_power_bound_check(self.bundle.action, 4, degree_limit=256)
        self.assertTrue(verdict.applicable)
        self.assertEqual(verdict.exponent, 81)
        self.assertEqual([name for name, _ in verdict.checked], ['1', 'y', 'y^2', 'y^3'])
        self.assertEqual([name for name, _ in verdict.skipped], ['y^4'])
        self.assertTrue(verdict.passed)


if __name__ == '__main__':
    unittest.main()
