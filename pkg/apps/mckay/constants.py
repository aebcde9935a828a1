from fractions import Fraction

# Conjugacy class label attached to each node of the extended E8 diagram.
LABELS = {
    0: '1A',
    1: '2A',
    2: '3A',
    3: '4A',
    4: '5A',
    5: '6A',
    6: '4B',
    7: '2B',
    8: '3C',
}

# <e, f> for each node.
TABLE_VALUES = {
    0: Fraction(1, 4),
    1: Fraction(1, 32),
    2: Fraction(13, 2 ** 10),
    3: Fraction(1, 2 ** 7),
    4: Fraction(3, 2 ** 9),
    5: Fraction(5, 2 ** 10),
    6: Fraction(1, 2 ** 8),
    7: Fraction(0),
    8: Fraction(1, 2 ** 8),
}

# (|Phi(L(i))|, (|H_1|, ..., |H_(n-1)|))
ROOT_COUNTS = {
    0: (240, ()),
    1: (128, (112,)),
    2: (78, (81, 81)),
    3: (52, (64, 60, 64)),
    4: (40, (50, 50, 50, 50)),
    5: (38, (36, 45, 40, 45, 36)),
    6: (58, (56, 70, 56)),
    7: (112, (128,)),
    8: (72, (84, 84)),
}

# <e, f> = BASE + SCALE * (|Phi| + sum_j xi^j |H_j|)
COUNTING_BASE = Fraction(1, 2 ** 6)
COUNTING_SCALE = Fraction(1, 2 ** 10)

TABLE_ANCHOR = 'exactly the values given in McKay\'s diagram'
COUNTING_ANCHOR = '<e,f> = 1/2^6 + 1/2^10 (|Phi| + sum xi^j |H_j|)'
TAU_ANCHOR = 'tau_e tau_f = (sigma^-1)^2'

VERIFIED = 'verified'
RECORDED = 'recorded, externally checkable'
ROW_STATUSES = [VERIFIED, RECORDED]

SIGMA_ROW = 'sigma'
COMPONENT_ROW = 'component'
DIFFERENCE_ROW = 'difference'
ROW_KINDS = [SIGMA_ROW, COMPONENT_ROW, DIFFERENCE_ROW]

# Rows beyond sigma^j e: (kind, component type, scale, Conway vector).
# The 5A scale -1/(35 sqrt5) is built in conway.py.
CONWAY_ROWS = {
    0: [],
    1: [(COMPONENT_ROW, ('A', 1), Fraction(1, 32), 't_2A')],
    2: [(COMPONENT_ROW, ('A', 2), Fraction(1, 45), 'u_3A')],
    3: [(COMPONENT_ROW, ('A', 3), Fraction(1, 96), 'v_4A')],
    4: [(DIFFERENCE_ROW, ('A', 4), None, 'w_5A')],
    5: [
        (COMPONENT_ROW, ('A', 1), Fraction(1, 32), 't_2A'),
        (COMPONENT_ROW, ('A', 2), Fraction(1, 45), 'u_3A'),
    ],
    6: [(COMPONENT_ROW, ('A', 1), Fraction(1, 32), 't_2A')],
    7: [],
    8: [],
}
