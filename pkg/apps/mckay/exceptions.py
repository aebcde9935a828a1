from apps.exact.exceptions import VerificationError


class TableMismatch(VerificationError):
    default_message = 'computed value differs from the diagram'
