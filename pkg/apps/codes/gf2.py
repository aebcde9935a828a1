"""
Linear algebra over GF(2) on numpy integer arrays.
"""
import numpy as np


def array2(rows, length=None):
    A = np.array(rows, dtype=np.int64) % 2
    if A.size == 0:
        if length is None:
            length = A.shape[1] if A.ndim == 2 else 0
        return np.zeros((0, length), dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape((1, -1))
    return A


def dot2(A, B):
    return A.dot(B) % 2


def row_reduce(A):
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    A = array2(A).copy()
    m, n = A.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        hits = np.nonzero(A[row:, col])[0]
        if not len(hits):
            continue
        pivot = row + hits[0]
        if pivot != row:
            A[[row, pivot]] = A[[pivot, row]]
        for r in range(m):
            if r != row and A[r, col]:
                A[r] ^= A[row]
        pivots.append(col)
        row += 1
    return A[:row], pivots


def rank(A):
    return len(row_reduce(A)[1])


def find_kernel(A, n=None):
    """Basis of {v : A v = 0} as the rows of an array."""
    A = array2(A, n)
    n = A.shape[1] if n is None else n
    reduced, pivots = row_reduce(A)
    free = [c for c in range(n) if c not in pivots]
    kernel = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        kernel[k, f] = 1
        for row, p in zip(reduced, pivots):
            kernel[k, p] = row[f]
    return kernel


def in_span(reduced, pivots, v):
    v = array2(v).reshape(-1).copy()
    for row, p in zip(reduced, pivots):
        if v[p]:
            v ^= row
    return not v.any()


def span(G):
    """Every vector of the row space, the zero vector first."""
    G = array2(G)
    k, n = G.shape
    for bits in range(2 ** k):
        v = np.zeros(n, dtype=np.int64)
        for i in range(k):
            if bits >> i & 1:
                v ^= G[i]
        yield v
