from functools import cached_property

import numpy as np

from apps.lattice.integer import IntegerLattice

from .constants import BINARY
from .gf2 import array2, dot2, in_span, row_reduce, span


def parse_word(word):
    return tuple(int(ch) for ch in word if not ch.isspace())


class BinaryCode:
    """
    Linear code over GF(2). The generator matrix is kept in reduced row
    echelon form, so two codes are equal iff their generators are.
    """

    modulus = BINARY

    def __init__(self, length, generators=(), name=''):
        self.length = length
        self.name = name
        reduced, pivots = row_reduce(array2(list(generators), length))
        self.matrix = reduced
        self.pivots = tuple(pivots)

    @classmethod
    def from_words(cls, words, name=''):
        rows = [parse_word(w) for w in words]
        return cls(len(rows[0]), rows, name=name)

    def __repr__(self):
        return f'<BinaryCode {self.name or "?"} [{self.length},{self.dimension}]>'

    @property
    def dimension(self):
        return len(self.pivots)

    @property
    def generators(self):
        return [tuple(int(x) for x in row) for row in self.matrix]

    @property
    def cardinality(self):
        return 2 ** self.dimension

    def __contains__(self, word):
        return in_span(self.matrix, self.pivots, word)

    def __eq__(self, other):
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.length == other.length and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.length, tuple(self.generators)))

    def codewords(self):
        return span(self.matrix) if self.dimension else iter([np.zeros(self.length, dtype=np.int64)])

    def weight_distribution(self):
        counts = [0] * (self.length + 1)
        for word in self.codewords():
            counts[int(word.sum())] += 1
        return tuple(counts)

    def is_self_orthogonal(self):
        return not dot2(self.matrix, self.matrix.T).any()

    def is_doubly_even(self):
        # Weight mod 4 is additive on a self-orthogonal code.
        weights_ok = all(int(row.sum()) % 4 == 0 for row in self.matrix)
        return weights_ok and self.is_self_orthogonal()

    def restrict(self, columns, name=''):
        return BinaryCode(len(columns), self.matrix[:, list(columns)], name=name)

    @cached_property
    def lift_lattice(self):
        """{x in Z^n : x mod 2 in the code} in Hermite normal form."""
        rows = self.generators + [
            tuple(BINARY * int(i == j) for j in range(self.length)) for i in range(self.length)
        ]
        return IntegerLattice(self.length, rows)
