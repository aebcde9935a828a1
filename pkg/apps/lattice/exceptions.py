from apps.exact.exceptions import VerificationError


class NotPositiveDefinite(VerificationError):
    default_message = 'Gram matrix is not positive definite'


class NotInSpan(VerificationError):
    default_message = 'vector is not in the rational span of the lattice'


class NotMinimal(VerificationError):
    default_message = 'vector does not achieve the minimum norm of its coset'


class EnumerationBudgetExceeded(VerificationError):
    default_message = 'short-vector enumeration ran out of its time budget'
