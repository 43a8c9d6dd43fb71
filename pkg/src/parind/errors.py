"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command line front-end:
2 for malformed input, 3 for mathematically meaningless requests and 4
when a resource guard trips.
"""


class ParindError(Exception):
    exit_code = 3


class InputError(ParindError):
    """Malformed or schema-violating input."""

    exit_code = 2


class InvalidCartanMatrix(InputError):
    pass


class SemanticError(ParindError):
    exit_code = 3


class NonFiniteType(SemanticError):
    pass


class UnknownRoot(SemanticError):
    pass


class MixedAmbient(SemanticError):
    pass


class InvalidNesting(SemanticError):
    pass


class NotEMinimal(SemanticError):
    pass


class InconsistentDescriptor(SemanticError):
    pass


class QOutOfRange(SemanticError):
    def __init__(self, root, message=None):
        self.root = root
        super().__init__(message or f"Q contains {root}, which lies outside P(sigma)")


class NotSupercuspidal(SemanticError):
    pass


class InvalidM1Triple(SemanticError):
    pass


class WitnessMissing(SemanticError):
    """No separating root exists although the element is outside the product set."""


class ResourceGuard(ParindError):
    exit_code = 4


class GroupTooLarge(ResourceGuard):
    pass


class UpsetGuard(ResourceGuard):
    pass
