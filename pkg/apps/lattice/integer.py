from bisect import bisect_left


def xgcd(a, b):
    """Return (g, s, t) with g = s*a + t*b = gcd(a, b) and g >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class IntegerLattice:
    # Echelon basis of a subgroup of Z^N, one pivot per row, kept in
    # Hermite normal form after every insertion.

    __slots__ = ['N', 'basis', 'pivot_location_in_column', 'pivot_location_in_row']

    def __init__(self, ambient_dimension, vectors=()):
        self.N = ambient_dimension
        self.pivot_location_in_column = [None] * ambient_dimension
        self.pivot_location_in_row = []
        self.basis = []
        for vec in vectors:
            self.add_vector(vec)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def pivots(self):
        return tuple(self.basis[i][j] for i, j in enumerate(self.pivot_location_in_row))

    def __contains__(self, vec):
        vec = [int(x) for x in vec]
        col_piv = self.pivot_location_in_column
        for j in range(self.N):
            b = vec[j]
            if not b:
                continue
            p = col_piv[j]
            if p is None:
                return False
            row = self.basis[p]
            q, r = divmod(b, row[j])
            if r:
                return False
            for jj in range(j, self.N):
                vec[jj] -= q * row[jj]
        return True

    def _insert(self, vec, j):
        where = bisect_left(self.pivot_location_in_row, j)
        self.basis.insert(where, vec)
        self.pivot_location_in_row.insert(where, j)
        for ii in range(where, len(self.basis)):
            self.pivot_location_in_column[self.pivot_location_in_row[ii]] = ii

    def add_vector(self, vec0):
        if len(vec0) != self.N:
            raise ValueError('vector has the wrong length')
        vec = [int(x) for x in vec0]
        col_piv = self.pivot_location_in_column
        for j in range(self.N):
            if not vec[j]:
                continue
            p = col_piv[j]
            if p is None:
                if vec[j] < 0:
                    vec = [-x for x in vec]
                self._insert(vec, j)
                break
            row = self.basis[p]
            a, b = row[j], vec[j]
            if b % a == 0:
                q = b // a
                vec = [x - q * y for x, y in zip(vec, row)]
                continue
            g, s, t = xgcd(a, b)
            new_row = [s * x + t * y for x, y in zip(row, vec)]
            vec = [(b // g) * x - (a // g) * y for x, y in zip(row, vec)]
            self.basis[p] = new_row
        self._reduce_above_pivots()

    def _reduce_above_pivots(self):
        for i, j in enumerate(self.pivot_location_in_row):
            pivot_row = self.basis[i]
            d = pivot_row[j]
            for r in range(i):
                q = self.basis[r][j] // d
                if q:
                    self.basis[r] = [x - q * y for x, y in zip(self.basis[r], pivot_row)]

    def hermite_form(self):
        return [tuple(row) for row in self.basis]

    def index_in_full(self):
        """[Z^N : self] for a full-rank lattice."""
        if self.rank != self.N:
            raise ValueError('lattice is not of full rank')
        index = 1
        for d in self.pivots:
            index *= d
        return index

    def __eq__(self, other):
        return isinstance(other, IntegerLattice) and self.hermite_form() == other.hermite_form()

    def __hash__(self):
        return hash(tuple(self.hermite_form()))
