from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt
from pathlib import Path

from apps.exact.linalg import determinant, fraction_matrix, inverse_matrix
from apps.exact.scalars import as_fraction, format_rational, parse_rational

from .constants import MATRIX_COMMENT
from .exceptions import NotInSpan, NotPositiveDefinite
from .integer import IntegerLattice


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def as_vector(values):
    return tuple(as_fraction(x) for x in values)


class EvenLattice:
    """
    Lattice spanned by `basis` inside a rational ambient space whose bilinear
    form is `scale` times the standard dot product.
    """

    def __init__(self, basis, scale=1, name=''):
        if not basis:
            raise ValueError('a lattice needs at least one basis vector')
        self.basis = tuple(as_vector(v) for v in basis)
        self.scale = as_fraction(scale)
        self.name = name
        self.rank = len(self.basis)
        self.ambient_dim = len(self.basis[0])
        B = fraction_matrix(self.basis)
        self.gram = B.dot(B.T) * self.scale

    def __repr__(self):
        label = self.name or 'EvenLattice'
        return f'<{label} rank={self.rank} dim={self.ambient_dim}>'

    def inner(self, u, v):
        return self.scale * dot(u, v)

    def norm(self, v):
        return self.scale * dot(v, v)

    @cached_property
    def det(self):
        return determinant(self.gram)

    @cached_property
    def gram_inverse(self):
        ldl(self.gram)
        return inverse_matrix(self.gram)

    @cached_property
    def dual_basis(self):
        G = self.gram_inverse
        return tuple(
            tuple(sum(G[k, l] * self.basis[l][a] for l in range(self.rank))
                  for a in range(self.ambient_dim))
            for k in range(self.rank)
        )

    def coordinates(self, v):
        """Coefficients of v in the basis; NotInSpan when v leaves the span."""
        v = as_vector(v)
        pairings = [self.inner(b, v) for b in self.basis]
        G = self.gram_inverse
        coords = tuple(sum(G[k, l] * pairings[l] for l in range(self.rank))
                       for k in range(self.rank))
        if self.vector(coords) != v:
            raise NotInSpan(detail={'vector': [format_rational(x) for x in v]})
        return coords

    def vector(self, coords):
        return tuple(
            sum((c * b[a] for c, b in zip(coords, self.basis) if c), Fraction(0))
            for a in range(self.ambient_dim)
        )

    def contains(self, v):
        try:
            coords = self.coordinates(v)
        except NotInSpan:
            return False
        return all(c.denominator == 1 for c in coords)

    __contains__ = contains

    def with_basis(self, basis, name=None):
        return EvenLattice(basis, self.scale, name or self.name)


@dataclass(frozen=True)
class LatticeInvariants:
    det: Fraction
    dual_basis: tuple
    is_even: bool
    is_doubly_even: bool


def ldl(gram):
    """
    Decompose a Gram matrix as Q(x) = sum_i q_i (x_i + sum_{j>i} mu_ij x_j)^2.
    Raises NotPositiveDefinite when a pivot q_i is not positive.
    """
    n = len(gram)
    q = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        q[i] = as_fraction(gram[i][i]) - sum(mu[k][i] ** 2 * q[k] for k in range(i))
        if q[i] <= 0:
            raise NotPositiveDefinite(detail={'pivot': i, 'value': format_rational(q[i])})
        for j in range(i + 1, n):
            s = as_fraction(gram[i][j]) - sum(mu[k][i] * mu[k][j] * q[k] for k in range(i))
            mu[i][j] = s / q[i]
    return q, mu


def lattice_invariants(lat):
    ldl(lat.gram)
    gram = lat.gram
    integral = all(as_fraction(x).denominator == 1 for x in gram.flat)
    diagonal = [as_fraction(gram[i, i]) for i in range(lat.rank)]
    is_even = integral and all(d % 2 == 0 for d in diagonal)
    off_diagonal_even = all(
        as_fraction(gram[i, j]) % 2 == 0
        for i in range(lat.rank) for j in range(lat.rank) if i != j
    )
    is_doubly_even = is_even and off_diagonal_even and all(d % 4 == 0 for d in diagonal)
    return LatticeInvariants(
        det=lat.det,
        dual_basis=lat.dual_basis,
        is_even=is_even,
        is_doubly_even=is_doubly_even,
    )


def lattice_index(sub, ambient):
    """[ambient : sub] for full-rank sublattices, from the determinant ratio."""
    ratio = sub.det / ambient.det
    root = _exact_sqrt(ratio)
    if root is None:
        raise ValueError(f'determinant ratio {ratio} is not a square')
    return root


def _exact_sqrt(value):
    value = as_fraction(value)
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def load_matrix(path):
    rows = []
    for line in Path(path).read_text().splitlines():
        line = line.split(MATRIX_COMMENT, 1)[0].strip()
        if line:
            rows.append(tuple(parse_rational(entry) for entry in line.split()))
    return rows


def export_matrix(rows):
    return '\n'.join(' '.join(format_rational(x) for x in row) for row in rows) + '\n'


def sublattice(ambient, vectors, name=''):
    """
    The sublattice of `ambient` generated by `vectors` (any number of them),
    with a Hermite-normal-form basis taken in ambient coordinates.
    """
    coords = [ambient.coordinates(v) for v in vectors]
    if any(c.denominator != 1 for row in coords for c in row):
        raise NotInSpan(detail={'lattice': ambient.name})
    hnf = IntegerLattice(ambient.rank, [[int(c) for c in row] for row in coords]).hermite_form()
    return EvenLattice([ambient.vector(row) for row in hnf], ambient.scale, name)
