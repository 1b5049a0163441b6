"""Exception hierarchy shared by every ksforge module."""


class KSForgeError(Exception):
    """Base class for all ksforge failures."""


class NonUniformMagnitude(KSForgeError):
    pass


class DegenerateContext(KSForgeError):
    pass


class FixtureMismatch(KSForgeError):
    pass


class UnexpectedBasisCount(KSForgeError):
    pass


class GammaMismatch(KSForgeError):
    pass


class NotHybrid(KSForgeError):
    pass


class NotParityProof(KSForgeError):
    pass


class ConstructionError(KSForgeError):
    """A manual construction could not be completed."""


class InadmissiblePick(ConstructionError):
    pass


class Stalled(ConstructionError):
    pass


class SameColumn(ConstructionError):
    pass


class CrossedPairConflict(ConstructionError):
    pass


class AmbiguousFinalBasis(ConstructionError):
    pass


class DocumentError(KSForgeError):
    """A KS-set document failed to parse or validate."""
