from fractions import Fraction

E_RANKS = [6, 7, 8]
MIN_D_RANK = 4

# Nodes 0..8 of the extended E8 diagram. Node 5 is the branch node; the arms
# are (8), (6, 7) and (4, 3, 2, 1), listed from the branch outwards; node 0
# hangs off node 1.
E8_NODES = list(range(9))
BRANCH_NODE = 5
SHORT_ARM = [8]
MIDDLE_ARM = [6, 7]
LONG_ARM = [4, 3, 2, 1]

# Coefficients of alpha_0..alpha_8 in the relation sum m_j alpha_j = 0.
MARKS = (1, 2, 3, 4, 5, 6, 4, 2, 3)

# Glue vector a of node i as (divisor, coefficients of alpha_0..alpha_8):
# a = sum_j coefficients[j] / divisor * alpha_j.
GLUE = {
    0: (1, (0, 1, 0, 0, 0, 0, 0, 0, 0)),
    1: (-2, (1, 0, 0, 0, 0, 0, 0, 0, 0)),
    2: (-3, (1, 2, 0, 0, 0, 0, 0, 0, 0)),
    3: (-4, (1, 2, 3, 0, 0, 0, 0, 0, 0)),
    4: (-5, (1, 2, 3, 4, 0, 0, 0, 0, 0)),
    5: (-6, (1, 2, 3, 4, 5, 0, 0, 0, 0)),
    6: (-8, (1, 2, 3, 4, 5, 6, 0, 0, 7)),
    7: (2, (0, 0, 0, 0, 0, 0, 1, 0, 1)),
    8: (-9, (1, 2, 3, 4, 5, 6, 7, 8, 0)),
}

# Expected decomposition of L(i), components ordered by letter then by
# decreasing rank.
NODE_COMPONENTS = {
    0: (('E', 8),),
    1: (('A', 1), ('E', 7)),
    2: (('A', 2), ('E', 6)),
    3: (('A', 3), ('D', 5)),
    4: (('A', 4), ('A', 4)),
    5: (('A', 5), ('A', 2), ('A', 1)),
    6: (('A', 7), ('A', 1)),
    7: (('D', 8),),
    8: (('A', 8),),
}

# Intermediate lattices L(i) + Z d alpha_i between L(i) and E8, with the
# power map attached to each chain.
CHAINS = [
    {'node': 3, 'step': 2, 'middle': (('D', 8),), 'power_map': '(4A)^2 = 2B'},
    {'node': 5, 'step': 3, 'middle': (('A', 2), ('E', 6)), 'power_map': '(6A)^2 = 3A'},
    {'node': 5, 'step': 2, 'middle': (('A', 1), ('E', 7)), 'power_map': '(6A)^3 = 2A'},
    {'node': 6, 'step': 2, 'middle': (('A', 1), ('E', 7)), 'power_map': '(4B)^2 = 2A'},
    {'node': 0, 'step': 1, 'middle': (('E', 8),), 'power_map': None},
]

# The E8 form in Hamming coordinates is half the dot product.
E8_SCALE = Fraction(1, 2)
