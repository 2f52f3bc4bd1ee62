"""Exception hierarchy shared by all sopcm modules."""


class SopcmError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(SopcmError):
    """Malformed text input (monomial, polynomial, edge, facet or poset file)."""


class UnitIdealError(SopcmError):
    """The monomial 1 appeared among generators: the ideal is the unit ideal."""


class ZeroIdealError(SopcmError):
    """An operation that needs a nonzero proper ideal received the zero ideal."""


class NonArtinianIdealError(SopcmError):
    """Quotient has infinite length (some variable has no pure power)."""


class InconsistentIdentificationError(SopcmError):
    """An identification pair merges two already-identified variables."""


class IsolatedVertexError(SopcmError):
    """Graph operation requires a graph without isolated vertices."""


class UnverifiedSopError(SopcmError):
    """The given difference sequence is not a verified sop for the ideal."""


class NotASopError(SopcmError):
    """Forms fail to cut the quotient down to dimension zero."""


class InvalidPosetError(SopcmError):
    """Input does not define a valid two-chain poset; message carries a witness."""


class ShellingVerificationError(SopcmError):
    """A produced facet order failed the direct shelling check (implementation bug)."""


class SubsetScanBoundError(SopcmError):
    """Vertex count exceeds the configured bound for the full subset scan."""


class PipelineInvariantError(SopcmError):
    """A mathematically guaranteed invariant failed; indicates a defect here, not in the inputs."""
