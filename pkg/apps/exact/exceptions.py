class VerificationError(Exception):
    """
    Base error of the project.

    `anchor` is the quoted claim a failed check refers to, `detail` is a
    JSON-friendly mapping with the values that disagreed.
    """

    default_message = 'verification failed'

    def __init__(self, message=None, *, anchor=None, detail=None):
        self.message = message or self.default_message
        self.anchor = anchor
        self.detail = detail or {}
        super().__init__(self.message)

    def as_record(self):
        return {
            'error': type(self).__name__,
            'message': self.message,
            'anchor': self.anchor,
            'detail': self.detail,
        }


class NonRational(VerificationError):
    default_message = 'cyclotomic value does not lie in the rational field'


class SingularMatrix(VerificationError):
    default_message = 'matrix is not invertible'
