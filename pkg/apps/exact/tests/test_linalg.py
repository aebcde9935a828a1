from fractions import Fraction

from django.test import SimpleTestCase

from apps.exact.exceptions import SingularMatrix
from apps.exact.linalg import (
    CyclotomicMatrix, determinant, express_in_span, inverse_matrix, nullspace, rank, solve,
    span_dimension,
)
from apps.exact.scalars import Cyclotomic

# Cartan matrix of A3.
CARTAN_A3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


class DenseTest(SimpleTestCase):

    def test_determinant(self):
        self.assertEqual(determinant(CARTAN_A3), 4)
        self.assertEqual(determinant([[1, 2], [2, 4]]), 0)

    def test_inverse(self):
        inverse = inverse_matrix(CARTAN_A3)
        self.assertEqual(inverse[0, 0], Fraction(3, 4))
        self.assertEqual(inverse[1, 1], Fraction(1))
        with self.assertRaises(SingularMatrix):
            inverse_matrix([[1, 2], [2, 4]])

    def test_solve(self):
        self.assertEqual(solve(CARTAN_A3, [1, 0, 0]), [Fraction(3, 4), Fraction(1, 2), Fraction(1, 4)])

    def test_rational_matrix_slices(self):
        M = CyclotomicMatrix.from_columns([[Fraction(1, 2), 1], [Fraction(1, 3), 0]])
        self.assertEqual(M.order, 1)
        self.assertEqual(M.divisor, 6)
        self.assertEqual(M.slices[0].tolist(), [[3, 2], [6, 0]])
        self.assertEqual(M.entry(0, 1), Fraction(1, 3))
        self.assertEqual(M.trace(), Fraction(1, 2))


class CyclotomicMatrixTest(SimpleTestCase):

    def setUp(self):
        zeta = Cyclotomic.zeta(3)
        # diag(zeta, zeta^2) and the swap.
        self.diagonal = CyclotomicMatrix.from_columns([[zeta, 0], [0, zeta ** 2]])
        self.swap = CyclotomicMatrix.from_columns([[0, 1], [1, 0]])

    def test_from_columns(self):
        self.assertEqual(self.diagonal.order, 3)
        self.assertEqual(self.diagonal.slices.shape, (2, 2, 2))
        self.assertEqual(self.diagonal.entry(1, 1), Cyclotomic.zeta(3, 2))
        self.assertEqual(self.diagonal.entry(0, 1), 0)

    def test_product_folds_back(self):
        cube = self.diagonal @ self.diagonal @ self.diagonal
        self.assertEqual(cube.slices.shape, (2, 2, 2))
        self.assertEqual(cube.to_dense().tolist(), [[1, 0], [0, 1]])

    def test_traces(self):
        self.assertEqual(self.diagonal.trace(), -1)
        self.assertEqual(self.diagonal.product_trace(self.diagonal), -1)
        self.assertEqual(self.diagonal.product_trace(self.swap), 0)
        self.assertEqual((self.swap @ self.diagonal).trace(), 0)

    def test_divisors_multiply(self):
        M = CyclotomicMatrix.from_columns([[Cyclotomic.zeta(4)]])
        N = CyclotomicMatrix.from_columns([[Cyclotomic.zeta(4, 3) / 2]])
        self.assertEqual((M @ N).divisor, 2)
        self.assertEqual((M @ N).entry(0, 0), Fraction(1, 2))

    def test_shifted(self):
        shifted = self.swap.shifted(2, 3)
        self.assertEqual(shifted.slices[0].tolist(), [[-3, 2], [2, -3]])
        self.assertTrue((shifted @ CyclotomicMatrix.from_columns([[0, 0], [0, 0]])).is_zero())


class SparseTest(SimpleTestCase):

    def test_rank_and_nullspace(self):
        rows = [[1, 1, 0, 0], [0, 0, 1, 1], [1, 1, 1, 1]]
        self.assertEqual(rank(rows), 2)
        kernel = nullspace(rows, 4)
        self.assertEqual(len(kernel), 2)
        for v in kernel:
            for row in rows:
                self.assertEqual(sum(a * b for a, b in zip(row, v)), 0)

    def test_sparse_rows(self):
        self.assertEqual(rank([{0: 1, 3: 2}, {3: 4, 0: 2}], 4), 1)

    def test_empty_nullspace_input(self):
        self.assertEqual(len(nullspace([], 3)), 3)

    def test_express_in_span(self):
        vectors = [[1, 0, 1], [0, 1, 1]]
        self.assertEqual(express_in_span(vectors, [2, 3, 5]), [2, 3])
        self.assertIsNone(express_in_span(vectors, [0, 0, 1]))

    def test_span_over_cyclotomic_field(self):
        zeta = Cyclotomic.zeta(3)
        u = [Fraction(1), zeta]
        v = [zeta, zeta * zeta]
        self.assertEqual(span_dimension([u, v], 3), 1)
        self.assertEqual(span_dimension([u, [Fraction(1), Fraction(1)]], 3), 2)
        self.assertEqual(span_dimension([[1, 2], [2, 4]], 1), 1)
