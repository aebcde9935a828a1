from functools import cached_property

from apps.lattice.integer import IntegerLattice

from .binary import parse_word
from .constants import QUATERNARY
from .gf2 import row_reduce

UNITS = {1: 1, 3: 3}


def euclidean_weight(word):
    """Euclidean weight over Z4: 0, 1, 4, 1 for the symbols 0, 1, 2, 3."""
    return sum(min(x, QUATERNARY - x) ** 2 for x in (int(v) % QUATERNARY for v in word))


def inner4(u, v):
    return sum(int(a) * int(b) for a, b in zip(u, v)) % QUATERNARY


def standard_form(length, generators):
    """
    Split a Z4 generator set into order-4 rows (unit pivots, zero in every
    other pivot column) and order-2 rows (entries in {0, 2}, halved rows in
    binary echelon form). The code is the direct sum of the two spans.
    """
    rows = [[int(x) % QUATERNARY for x in g] for g in generators]
    order4 = []
    for col in range(length):
        hit = next((r for r in rows if r[col] in UNITS), None)
        if hit is None:
            continue
        rows.remove(hit)
        inverse = UNITS[hit[col]]
        hit = [(inverse * x) % QUATERNARY for x in hit]
        for k, r in enumerate(rows):
            if r[col]:
                rows[k] = [(a - r[col] * b) % QUATERNARY for a, b in zip(r, hit)]
        for k, r in enumerate(order4):
            if r[col]:
                order4[k] = [(a - r[col] * b) % QUATERNARY for a, b in zip(r, hit)]
        order4.append(hit)
    halves = [[x // 2 for x in r] for r in rows if any(r)]
    order2 = []
    if halves:
        reduced, _ = row_reduce(halves)
        order2 = [[2 * int(x) for x in row] for row in reduced]
    return [tuple(r) for r in order4], [tuple(r) for r in order2]


class Z4Code:
    """Linear code over Z4, stored in standard form."""

    modulus = QUATERNARY

    def __init__(self, length, generators=(), name=''):
        self.length = length
        self.name = name
        self.source_rows = tuple(tuple(int(x) % QUATERNARY for x in g) for g in generators)
        self.order4_rows, self.order2_rows = standard_form(length, self.source_rows)

    @classmethod
    def from_words(cls, words, name=''):
        rows = [parse_word(w) for w in words]
        return cls(len(rows[0]), rows, name=name)

    def __repr__(self):
        return f'<Z4Code {self.name or "?"} n={self.length} 4^{self.k1} 2^{self.k2}>'

    @property
    def k1(self):
        return len(self.order4_rows)

    @property
    def k2(self):
        return len(self.order2_rows)

    @property
    def generators(self):
        return list(self.order4_rows) + list(self.order2_rows)

    @property
    def cardinality(self):
        return QUATERNARY ** self.k1 * 2 ** self.k2

    @cached_property
    def lift_lattice(self):
        """{x in Z^n : x mod 4 in the code} in Hermite normal form."""
        rows = self.generators + [
            tuple(QUATERNARY * int(i == j) for j in range(self.length)) for i in range(self.length)
        ]
        return IntegerLattice(self.length, rows)

    def __contains__(self, word):
        return tuple(int(x) for x in word) in self.lift_lattice

    def __eq__(self, other):
        if not isinstance(other, Z4Code):
            return NotImplemented
        return self.length == other.length and self.lift_lattice == other.lift_lattice

    def __hash__(self):
        return hash(self.lift_lattice)

    def with_entry(self, row, column, value):
        """Copy of the code with one entry of the given generator matrix replaced."""
        generators = [list(g) for g in self.source_rows]
        generators[row][column] = value
        return Z4Code(self.length, generators, name=f'{self.name}*')
