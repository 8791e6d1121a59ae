import random
import unittest
from fractions import Fraction

from hopf_integrality.exactfield import MixedFieldError, PrimeField, RationalField
from hopf_integrality.linalg import (
    Subspace,
    independent_subset,
    mat_inverse,
    mat_kernel,
    mat_mul,
    mat_rref,
    mat_vec,
    solve_linear,
)


def Q(*values):
    return [Fraction(v) for v in values]


class TestElimination(unittest.TestCase):
    def setUp(self):
        self.F = RationalField()

    def test_rref_of_rank_one_matrix(self):
        R, pivots = mat_rref(self.F, [Q(1, 2), Q(2, 4)])
        self.assertEqual(pivots, [0])
        self.assertEqual(R[0], Q(1, 2))
        self.assertEqual(R[1], Q(0, 0))

    def test_kernel(self):
        K = mat_kernel(self.F, [Q(1, 1, 0), Q(0, 0, 1)])
        self.assertEqual(K.dim, 1)
        self.assertTrue(K.contains(Q(1, -1, 0)))

    def test_entries_must_belong_to_field(self):
        with self.assertRaises(MixedFieldError):
            mat_rref(self.F, [[1, 2]])
        with self.assertRaises(ValueError):
            mat_rref(self.F, [Q(1, 2), Q(1)])

    def test_solve_linear(self):
        M = [Q(1, 1), Q(1, -1)]
        solution = solve_linear(self.F, M, Q(3, 1))
        self.assertEqual(solution.particular, (Fraction(2), Fraction(1)))
        self.assertTrue(solution.kernel.is_zero())
        self.assertIsNone(solve_linear(self.F, [Q(1, 1), Q(2, 2)], Q(1, 3)))

    def test_underdetermined_solution_has_kernel(self):
        solution = solve_linear(self.F, [Q(1, 1, 1)], Q(6))
        self.assertEqual(mat_vec(self.F, [Q(1, 1, 1)], solution.particular), (Fraction(6),))
        self.assertEqual(solution.kernel.dim, 2)

    def test_inverse(self):
        M = [Q(2, 1), Q(1, 1)]
        inv = mat_inverse(self.F, M)
        self.assertEqual(mat_mul(self.F, M, inv), [Q(1, 0), Q(0, 1)])
        self.assertIsNone(mat_inverse(self.F, [Q(1, 2), Q(2, 4)]))

    def test_random_kernels_over_prime_field(self):
        F = PrimeField(7)
        rng = random.Random(11)
        for _ in range(30):
            rows, cols = rng.randint(1, 5), rng.randint(1, 6)
            M = [[rng.randrange(7) for _ in range(cols)] for _ in range(rows)]
            K = mat_kernel(F, M, cols)
            _, pivots = mat_rref(F, M, cols)
            self.assertEqual(len(pivots) + K.dim, cols)
            for v in K.basis:
                self.assertTrue(all(x == 0 for x in mat_vec(F, M, v)))


class TestSubspace(unittest.TestCase):
    def setUp(self):
        self.F = RationalField()

    def test_equality_does_not_depend_on_spanning_set(self):
        a = Subspace.span(self.F, 3, [Q(1, 1, 0), Q(0, 1, 1)])
        b = Subspace.span(self.F, 3, [Q(1, 2, 1), Q(1, 0, -1), Q(2, 2, 0)])
        self.assertEqual(a, b)
        self.assertEqual(a.dim, 2)

    def test_intersection_and_annihilator(self):
        a = Subspace.span(self.F, 3, [Q(1, 0, 0), Q(0, 1, 0)])
        b = Subspace.span(self.F, 3, [Q(0, 1, 0), Q(0, 0, 1)])
        self.assertEqual(a.intersection(b), Subspace.span(self.F, 3, [Q(0, 1, 0)]))
        self.assertEqual(a.annihilator(), Subspace.span(self.F, 3, [Q(0, 0, 1)]))
        self.assertTrue(Subspace.zero(self.F, 3).annihilator().is_full())

    def test_coordinates(self):
        S = Subspace.span(self.F, 3, [Q(1, 0, 1), Q(0, 1, 1)])
        self.assertEqual(S.combination(S.coordinates(Q(2, 3, 5))), tuple(Q(2, 3, 5)))
        self.assertIsNone(S.coordinates(Q(0, 0, 1)))
        self.assertEqual(S.complement_indices(), [2])

    def test_incompatible_subspaces(self):
        with self.assertRaises(MixedFieldError):
            Subspace.full(self.F, 2).sum(Subspace.full(PrimeField(3), 2))

    def test_independent_subset(self):
        vectors = [Q(1, 0), Q(2, 0), Q(0, 1), Q(1, 1)]
        self.assertEqual(independent_subset(self.F, vectors, 2), [0, 2])


if __name__ == '__main__':
    unittest.main()
