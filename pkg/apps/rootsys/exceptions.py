from apps.exact.exceptions import VerificationError


class UnsupportedType(VerificationError):
    default_message = 'root system type is not supported'


class NotRootGenerated(VerificationError):
    default_message = 'norm-2 vectors do not span the lattice'


class ChainViolation(VerificationError):
    default_message = 'intermediate sublattice chain does not hold'
