import logging
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from apps.codes.constants import HAMMING8
from apps.codes.construction import construction_A
from apps.codes.loaders import named_code
from apps.exact.linalg import fraction_matrix
from apps.lattice.enumeration import short_vectors
from apps.lattice.even import EvenLattice, dot, lattice_invariants

from .constants import ADJACENT_PAIRING, KEY_NORM
from .exceptions import EmbeddingError, InvalidContext

logger = logging.getLogger(__name__)


class AlgebraContext:
    """
    Weight-2 data of the lattice vertex algebra of a doubly even lattice N.

    Heisenberg coordinates are the ambient coordinates of N, whose form is
    `scale` times the dot product. Exponential keys are indices into `norm4`.
    """

    def __init__(self, lattice, name=''):
        invariants = lattice_invariants(lattice)
        if not invariants.is_doubly_even:
            raise InvalidContext(detail={'lattice': lattice.name})
        self.N = lattice
        self.scale = lattice.scale
        self.dim = lattice.ambient_dim
        self.rank = lattice.rank
        self.name = name or lattice.name
        self.norm4 = tuple(short_vectors(lattice, KEY_NORM))
        self.index = {x: k for k, x in enumerate(self.norm4)}
        self.negation = tuple(self.index[tuple(-a for a in x)] for x in self.norm4)
        logger.debug('context %s: %d exponential keys', self.name, len(self.norm4))

    def __repr__(self):
        return f'<AlgebraContext {self.name} keys={len(self.norm4)}>'

    def inner(self, u, v):
        return self.scale * dot(u, v)

    def key(self, x):
        """Index of the norm-4 vector x; EmbeddingError when x is not one."""
        k = self.index.get(tuple(Fraction(a) for a in x))
        if k is None:
            raise EmbeddingError(detail={'context': self.name, 'vector': [str(a) for a in x]})
        return k

    @cached_property
    def neighbours(self):
        """For each key x, the pairs (y, x + y) of keys with <x, y> = -2."""
        keys = self.norm4
        table = []
        for x in keys:
            row = []
            for j, y in enumerate(keys):
                if self.inner(x, y) == ADJACENT_PAIRING:
                    row.append((j, self.index[tuple(a + b for a, b in zip(x, y))]))
            table.append(tuple(row))
        return tuple(table)

    @cached_property
    def omega_matrix(self):
        """(1/2) sum (G^-1)_ij b_i b_j^T over a basis b of N."""
        B = fraction_matrix(self.N.basis)
        return B.T.dot(self.N.gram_inverse).dot(B) * Fraction(1, 2)

    def dense(self, quad):
        Q = np.full((self.dim, self.dim), Fraction(0), dtype=object)
        for (a, b), value in quad.items():
            Q[a, b] = value
            Q[b, a] = value
        return Q


@lru_cache(maxsize=None)
def e8_context():
    """sqrt2 E8 as Construction A of the Hamming code; keys are E8 roots."""
    return AlgebraContext(construction_A(named_code(HAMMING8)), name='sqrt2E8')


@lru_cache(maxsize=None)
def sqrt2_context(root_system):
    """V of sqrt2 R, keyed by the roots of R in their own coordinates."""
    lattice = EvenLattice(root_system.simple_roots, 2 * root_system.scale,
                          name=f'sqrt2({root_system.name})')
    return AlgebraContext(lattice)
