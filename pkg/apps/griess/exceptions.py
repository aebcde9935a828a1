from apps.exact.exceptions import VerificationError


class InvalidContext(VerificationError):
    default_message = 'lattice is not doubly even'


class ContextMismatch(VerificationError):
    default_message = 'elements belong to different algebra contexts'


class NotConformal(VerificationError):
    default_message = 'element is not a conformal vector'


class EmbeddingError(VerificationError):
    default_message = 'root lattice does not embed in the algebra lattice'


class BadSpectrum(VerificationError):
    default_message = 'eigenvalue outside the Ising set'


class DimensionMismatch(VerificationError):
    default_message = 'computed subspace differs from the claimed span'


class LeavesMinimalSpace(VerificationError):
    default_message = 'vector is not supported on minimal coset vectors'
