"""
The weight-2 part U_2 of the commutant of the root-system Virasoro vectors
s^k inside V_sqrt2E8, computed as a kernel and compared with the span of
omega_tilde^k and X^j.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from functools import lru_cache

from apps.exact.linalg import express_in_span, nullspace, rank, span_dimension
from apps.exact.scalars import Cyclotomic, as_rational, format_scalar, scalar_order, simplify

from .element import GriessElement, inner, product
from .exceptions import DimensionMismatch
from .families import build_node_family
from .spaces import weight_two_space

logger = logging.getLogger(__name__)


@dataclass
class CosetAlgebra:
    """
    U_2 in the basis omega_tilde^1..omega_tilde^l, X^1..X^(n-1).

    structure[i][j] holds the coordinates of b_i . b_j and gram[i][j] the
    form <b_i, b_j>. Vectors of the algebra are coefficient lists in this
    basis, possibly over Q(xi).
    """

    node: object
    labels: list
    basis: list
    structure: list
    gram: list
    e_hat: list
    f_hat: list

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def field_order(self):
        order = self.node.n
        for value in self.f_hat:
            order = lcm(order, scalar_order(value))
        return order

    def x_index(self, j):
        return len(self.labels) - (self.node.n - 1) + j - 1

    def product(self, a, b):
        out = [Fraction(0)] * self.dimension
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                weight = ai * bj
                for k, c in enumerate(self.structure[i][j]):
                    if c:
                        out[k] = out[k] + weight * c
        return [simplify(x) for x in out]

    def inner(self, a, b):
        total = Fraction(0)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                if ai and bj and self.gram[i][j]:
                    total = total + ai * bj * self.gram[i][j]
        return simplify(total)

    def element(self, coordinates):
        ctx = self.basis[0].ctx
        total = GriessElement(ctx)
        for c, b in zip(coordinates, self.basis):
            if c:
                total = total + b * c
        return total

    def unit(self, k):
        return [Fraction(int(i == k)) for i in range(self.dimension)]

    def as_json(self):
        return {
            'basis': self.labels,
            'structure_constants': [[[format_scalar(c) for c in cell] for cell in row] for row in self.structure],
            'gram': [[format_scalar(c) for c in row] for row in self.gram],
            'e_hat': [format_scalar(c) for c in self.e_hat],
            'f_hat': [format_scalar(c) for c in self.f_hat],
        }


def _kernel_rows(space, operators):
    """Rows of the stacked matrices of v -> s_1 v, one block per operator."""
    rows = []
    for s in operators:
        columns = [space.dense_coordinates(product(s, b)) for b in space.basis]
        rows.extend([[as_rational(columns[j][r]) for j in range(space.dimension)]
                     for r in range(space.dimension)])
    return rows


@lru_cache(maxsize=None)
def coset_U2(node):
    family = build_node_family(node)
    space = weight_two_space(family.ctx)
    rows = _kernel_rows(space, family.s)
    kernel = nullspace(rows, space.dimension)

    labels = [f'omega_tilde[{c.label}]' for c in family.components]
    labels += [f'X^{j}' for j in range(1, node.n)]
    basis = list(family.omega_tilde) + list(family.X)
    claimed = [[as_rational(x) for x in space.dense_coordinates(b)] for b in basis]
    detail = {'node': node.i, 'kernel': len(kernel), 'claimed': len(basis)}
    if len(kernel) != len(basis) or rank(claimed, space.dimension) != len(basis):
        raise DimensionMismatch(detail=detail)
    if rank(kernel + claimed, space.dimension) != len(kernel):
        raise DimensionMismatch('claimed basis lies outside the kernel', detail=detail)

    structure = []
    for a in basis:
        row = []
        for b in basis:
            image = [as_rational(x) for x in space.dense_coordinates(product(a, b))]
            coefficients = express_in_span(claimed, image)
            if coefficients is None:
                raise DimensionMismatch('product leaves the span', detail=detail)
            row.append(coefficients)
        structure.append(row)
    gram = [[inner(a, b) for b in basis] for a in basis]

    e_hat = express_in_span(claimed, [as_rational(x) for x in space.dense_coordinates(family.e_hat)])
    if e_hat is None:
        raise DimensionMismatch('e_hat lies outside the span', detail=detail)
    f_hat = list(e_hat)
    offset = len(family.components)
    for j in range(1, node.n):
        f_hat[offset + j - 1] = simplify(e_hat[offset + j - 1] * Cyclotomic.zeta(node.n, j))

    algebra = CosetAlgebra(node=node, labels=labels, basis=basis, structure=structure,
                           gram=gram, e_hat=e_hat, f_hat=f_hat)
    logger.info('node %d: U_2 of dimension %d', node.i, algebra.dimension)
    return algebra


def generated_closure(algebra, seeds):
    """
    Smallest product-closed subspace of the algebra containing the seeds,
    returned as a list of spanning coefficient vectors.
    """
    order = algebra.field_order
    span = []
    for seed in seeds:
        if span_dimension(span + [seed], order) > len(span):
            span.append(seed)
    grown = True
    while grown:
        grown = False
        for a in list(span):
            for b in list(span):
                candidate = algebra.product(a, b)
                if span_dimension(span + [candidate], order) > len(span):
                    span.append(candidate)
                    grown = True
    logger.debug('closure of %d seeds in node %d: dimension %d', len(seeds), algebra.node.i, len(span))
    return span
