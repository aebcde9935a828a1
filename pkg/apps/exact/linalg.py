"""
Exact linear algebra over Q and over cyclotomic fields.

Small dense work (inverses, determinants, solves) runs on numpy object arrays
of Fractions. Ranks, reduced echelon forms and null spaces of the large sparse
operator matrices go through sympy's DomainMatrix over QQ.
"""
import logging
from fractions import Fraction
from math import lcm

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import SingularMatrix
from .scalars import (
    Cyclotomic, as_fraction, as_rational, cyclotomic_modulus, field_degree, scalar_order, simplify,
)

logger = logging.getLogger(__name__)


def fraction_matrix(rows):
    return np.array([[as_fraction(x) for x in row] for row in rows], dtype=object)


def identity_matrix(n):
    return np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)


def inverse_matrix(matrix):
    X = fraction_matrix(matrix)
    n = X.shape[0]
    if X.shape != (n, n):
        raise ValueError('inverse of a non-square matrix')
    Y = identity_matrix(n)

    for i in range(n):
        for j in range(i, n):
            if X[j, i] != 0:
                if i != j:
                    X[[i, j]] = X[[j, i]]
                    Y[[i, j]] = Y[[j, i]]
                break
        else:
            raise SingularMatrix()

        pivot = X[i, i]
        Y[i, :] = Y[i, :] / pivot
        X[i, :] = X[i, :] / pivot

        for j in range(n):
            if j != i and X[j, i] != 0:
                factor = X[j, i]
                Y[j, :] = Y[j, :] - factor * Y[i, :]
                X[j, :] = X[j, :] - factor * X[i, :]

    return Y


def determinant(matrix):
    X = fraction_matrix(matrix)
    n = X.shape[0]
    det = Fraction(1)
    for i in range(n):
        for j in range(i, n):
            if X[j, i] != 0:
                if i != j:
                    X[[i, j]] = X[[j, i]]
                    det = -det
                break
        else:
            return Fraction(0)
        pivot = X[i, i]
        det *= pivot
        for j in range(i + 1, n):
            if X[j, i] != 0:
                X[j, :] = X[j, :] - (X[j, i] / pivot) * X[i, :]
    return det


def solve(matrix, target):
    """Solve the square system matrix * y = target exactly."""
    inverse = inverse_matrix(matrix)
    rhs = np.array([as_fraction(t) for t in target], dtype=object)
    return list(inverse.dot(rhs))


def _to_qq(value):
    value = as_fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value):
    return Fraction(int(value.numerator), int(value.denominator))


def domain_matrix(rows, ncols):
    """Sparse QQ matrix from dense rows or from {column: value} rows."""
    entries = {}
    for i, row in enumerate(rows):
        items = row.items() if isinstance(row, dict) else enumerate(row)
        packed = {j: _to_qq(v) for j, v in items if v}
        if packed:
            entries[i] = packed
    return DomainMatrix(entries, (len(rows), ncols), QQ)


def rank(rows, ncols=None):
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return domain_matrix(rows, ncols).rank()


def rref(rows, ncols):
    """Reduced row echelon form as dense Fraction rows plus pivot columns."""
    reduced, pivots = domain_matrix(rows, ncols).to_dense().rref()
    dense = [[_from_qq(x) for x in row] for row in reduced.rep.to_list()]
    return dense[:len(pivots)], tuple(pivots)


def nullspace(rows, ncols):
    """Basis of {v : rows * v = 0} as Fraction vectors."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        basis.append(vector)
    return basis


def express_in_span(vectors, target):
    """
    Rational coefficients c with sum c_k vectors[k] == target, or None when
    target is outside the span. The vectors must be linearly independent.
    """
    n = len(target)
    k = len(vectors)
    rows = [[vectors[c][r] for c in range(k)] + [target[r]] for r in range(n)]
    reduced, pivots = rref(rows, k + 1)
    if k in pivots:
        return None
    if len(pivots) != k:
        raise SingularMatrix('spanning vectors are not independent')
    coefficients = [Fraction(0)] * k
    for row, pivot in zip(reduced, pivots):
        coefficients[pivot] = row[k]
    return coefficients


def restrict_scalars(vector, order):
    """Write a vector over Q(zeta_order) as a rational vector of length len * phi."""
    degree = field_degree(order)
    flat = []
    for value in vector:
        if isinstance(value, Cyclotomic):
            flat.extend(value.embed(order).coeffs)
        else:
            flat.append(as_fraction(value))
            flat.extend([Fraction(0)] * (degree - 1))
    return flat


def span_dimension(vectors, order):
    """Dimension over Q(zeta_order) of the span of the given vectors."""
    if not vectors:
        return 0
    if order == 1:
        return rank([[as_rational(x) for x in v] for v in vectors], len(vectors[0]))
    degree = field_degree(order)
    rows = []
    for vector in vectors:
        for t in range(degree):
            power = Cyclotomic.zeta(order, t)
            rows.append(restrict_scalars([power * x for x in vector], order))
    if not rows:
        return 0
    logger.debug('span over Q(zeta_%d): %d rows of length %d', order, len(rows), len(rows[0]))
    return rank(rows, len(rows[0])) // degree


def common_denominator(values):
    denominator = 1
    for value in values:
        denominator = lcm(denominator, as_fraction(value).denominator)
    return denominator



# numpy int64 matmul is exact while every partial sum stays below this.
INT64_SAFE = 2 ** 62


def _max_abs(matrix):
    return max((abs(x) for x in matrix.flat), default=0)


def _integer_product(a, b):
    """Product of two object arrays of Python ints, through int64 when it cannot overflow."""
    if _max_abs(a) * _max_abs(b) * max(a.shape[1], 1) < INT64_SAFE:
        return (a.astype(np.int64) @ b.astype(np.int64)).astype(object)
    return a.dot(b)


def _reduce_slices(order, slices):
    """Fold slices of degree >= phi(order) back with the cyclotomic polynomial."""
    modulus = cyclotomic_modulus(order)
    degree = len(modulus) - 1
    slices = list(slices)
    for k in range(len(slices) - 1, degree - 1, -1):
        top = slices[k]
        if not top.any():
            continue
        shift = k - degree
        for m, c in enumerate(modulus):
            if c:
                slices[shift + m] = slices[shift + m] - top * c
    return np.array(slices[:degree], dtype=object).reshape((degree,) + slices[0].shape)


class CyclotomicMatrix:
    """
    Square matrix over Q(zeta_order) kept as integer slices in the power
    basis: M = (sum_t slices[t] zeta^t) / divisor. Products run on the
    integer slices and fold back modulo the cyclotomic polynomial.
    """

    def __init__(self, order, slices, divisor=1):
        self.order = order
        self.slices = slices
        self.divisor = Fraction(divisor)

    @classmethod
    def from_columns(cls, columns):
        """columns[j][i] is entry (i, j); entries are rationals or Cyclotomic."""
        n = len(columns)
        order = 1
        for column in columns:
            for value in column:
                order = lcm(order, scalar_order(value))
        degree = field_degree(order)
        flat = [[restrict_scalars([value], order) for value in column] for column in columns]
        d = common_denominator(c for column in flat for entry in column for c in entry)
        slices = np.zeros((degree, n, n), dtype=object)
        for j, column in enumerate(flat):
            for i, entry in enumerate(column):
                for t, c in enumerate(entry):
                    if c:
                        slices[t, i, j] = int(c * d)
        return cls(order, slices, d)

    @property
    def size(self):
        return self.slices.shape[1]

    def numerators(self):
        return CyclotomicMatrix(self.order, self.slices)

    def shifted(self, scale, diagonal):
        """scale * numerators - diagonal * I, for integers scale and diagonal."""
        slices = self.slices * scale
        for i in range(self.size):
            slices[0, i, i] -= diagonal
        return CyclotomicMatrix(self.order, slices)

    def __matmul__(self, other):
        product = [None] * (2 * len(self.slices) - 1)
        for s, a in enumerate(self.slices):
            for t, b in enumerate(other.slices):
                term = _integer_product(a, b)
                product[s + t] = term if product[s + t] is None else product[s + t] + term
        return CyclotomicMatrix(self.order, _reduce_slices(self.order, product),
                                self.divisor * other.divisor)

    def is_zero(self):
        return not self.slices.any()

    def _scalar(self, coeffs):
        return simplify(Cyclotomic(self.order, coeffs) / self.divisor)

    def trace(self):
        return self._scalar([np.trace(s) for s in self.slices])

    def product_trace(self, other):
        """tr(self @ other) without forming the product."""
        coeffs = [0] * (2 * len(self.slices) - 1)
        for s, a in enumerate(self.slices):
            for t, b in enumerate(other.slices):
                coeffs[s + t] += np.sum(a * b.T)
        return simplify(Cyclotomic(self.order, coeffs) / (self.divisor * other.divisor))

    def entry(self, i, j):
        if self.order == 1:
            return Fraction(self.slices[0, i, j]) / self.divisor
        return self._scalar([s[i, j] for s in self.slices])

    def to_dense(self):
        """Object array of Fractions and Cyclotomic values."""
        n = self.size
        return np.array([[self.entry(i, j) for j in range(n)] for i in range(n)], dtype=object)
