from fractions import Fraction

LEECH_RANK = 24
LEECH_MIN_NORM = 4
KISSING_NUMBER = 196560

BLOCK_COUNT = 3

# [Lambda : sqrt2E8^3] for a rank-24 unimodular lattice.
BLOCK_QUOTIENT_ORDER = 2 ** 12

DUAL_COSET_COUNT = 256
DUAL_MIN_NORMS = (0, 1, 2)

_H = Fraction(1, 2)

# Minimal representatives of the cosets of sqrt2E8 in its dual, up to
# permutation of coordinates.
COSET_SHAPES = [
    (0,) * 8,
    (1,) + (0,) * 7,
    (1, 1) + (0,) * 6,
    (_H,) * 4 + (0,) * 4,
    (_H,) * 3 + (-_H,) + (0,) * 4,
    (_H,) * 2 + (-_H,) * 2 + (0,) * 4,
    (_H,) * 4 + (1,) + (0,) * 3,
    (_H,) * 3 + (-_H, 1) + (0,) * 3,
    (_H,) * 8,
    (_H,) * 7 + (-_H,),
    (_H,) * 6 + (-_H,) * 2,
]
