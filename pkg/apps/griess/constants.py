from fractions import Fraction

# Exponential keys e^x of the weight-2 space are the norm-4 lattice vectors.
KEY_NORM = 4

# <x, y> = -2 is the only pairing of two keys giving e^(x+y) in weight 2.
ADJACENT_PAIRING = -2

HALF = Fraction(1, 2)
SIXTEENTH = Fraction(1, 16)
THIRTY_SECOND = Fraction(1, 32)

# e = omega/16 + (1/32) sum e^x
E_HAT_OMEGA = SIXTEENTH
E_HAT_EXPONENTIAL = THIRTY_SECOND

# omega^(+-) = (1/16) lambda(-1)^2 +- (1/4)(e^lambda + e^-lambda)
FRAME_HEISENBERG = SIXTEENTH
FRAME_EXPONENTIAL = Fraction(1, 4)

ISING_CENTRAL_CHARGE = HALF
TWISTED_WEIGHT = SIXTEENTH

# Eigenvalues of e_1 for an Ising vector e.
WEIGHT_TWO_SPECTRUM = (Fraction(2), Fraction(0), HALF, SIXTEENTH)
MODULE_SPECTRUM = (Fraction(0), HALF, SIXTEENTH)

# Largest order tried when computing the order of a linear map.
MAX_MAP_ORDER = 64

SIGMA = 'sigma'
THETA = 'theta'
WEYL = 'weyl'

PROPERTY_SAMPLES = 1000
PROPERTY_SEED = 20240601
