from apps.exact.exceptions import VerificationError


class CodeCheckFailed(VerificationError):
    default_message = 'code is not a type II self-dual Z4 code'


class EmbeddingNotFound(VerificationError):
    default_message = 'no embedding of three copies of sqrt2 E8 in the lattice'


class ShapeMismatch(VerificationError):
    default_message = 'minimal coset representative matches no listed shape'
