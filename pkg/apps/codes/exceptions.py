from apps.exact.exceptions import VerificationError


class InvalidCodeFile(VerificationError):
    default_message = 'code file does not hold a generator matrix'


class UnknownCode(VerificationError):
    default_message = 'no code of that name'


class BlockMatchNotFound(VerificationError):
    default_message = 'residue code has no Hamming subcode on the requested block'
