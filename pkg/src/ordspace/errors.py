"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`OrdspaceError`,
which the command-line tool maps to exit status 1.
"""


class OrdspaceError(Exception):
    pass


class WrongGroupError(OrdspaceError, ValueError):
    pass


class WordSyntaxError(OrdspaceError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownGeneratorError(OrdspaceError, ValueError):
    pass


class BallCapError(OrdspaceError, RuntimeError):
    pass


class UnsupportedFamilyError(OrdspaceError, ValueError):
    pass


class LengthMismatchError(OrdspaceError, ValueError):
    pass


class NonConvexSubgroupError(OrdspaceError):
    """The subgroup is not convex; ``witness`` is a triple ``(x, g, y)``
    with ``x <= g <= y``, ``x`` and ``y`` in the subgroup and ``g`` outside."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class DuplicateElementError(OrdspaceError, ValueError):
    pass


class InvalidDescriptorError(OrdspaceError, ValueError):
    pass


class InfiniteFamilyError(OrdspaceError):
    pass


class ProbeError(OrdspaceError):
    """Raised when a neighbourhood probe cannot produce a verified answer.

    This is distinct from an isolated verdict, which is a normal return value.
    """
