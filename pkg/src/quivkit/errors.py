"""Exception hierarchy."""


class QuivkitError(Exception):
    """Base class for all library errors."""


class BadField(QuivkitError):
    pass


class NonAdmissible(QuivkitError):
    pass


class MalformedRelation(QuivkitError):
    pass


class NotBasic(QuivkitError):
    pass


class RadicalFailure(QuivkitError):
    pass


class NonSplitEndo(QuivkitError):
    pass


class NotIndecomposable(QuivkitError):
    pass


class ProjectiveInput(QuivkitError):
    pass


class MouthNotPeriodic(QuivkitError):
    pass


class BadSpec(QuivkitError):
    pass


class BadIndex(QuivkitError):
    pass


class NotBrick(QuivkitError):
    pass


class MouthMismatch(QuivkitError):
    pass


class NotAdmissible(QuivkitError):
    """Group action on the repetitive category is not admissible."""


class WindowTooSmall(QuivkitError):
    pass


class SupportOverflow(QuivkitError):
    pass


class DepthInsufficient(QuivkitError):
    pass


class HasProjectives(QuivkitError):
    pass


class InvalidAutomorphism(QuivkitError):
    pass
