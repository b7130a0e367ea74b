"""Exception hierarchy.

Every error raised by the library derives from :class:`AsmProjError`, which is
itself a :class:`ValueError`. Indices carried by exceptions are 1-based.
"""


class AsmProjError(ValueError):
    """Base class for all library errors."""


class ParseError(AsmProjError):
    """Malformed input text or document."""


# -- shape / structure -------------------------------------------------------

class NotSquare(AsmProjError):
    pass


class BadShape(AsmProjError):
    pass


class OrderMismatch(AsmProjError):
    pass


class LengthMismatch(AsmProjError):
    pass


class LimitExceeded(AsmProjError):
    pass


# -- matrix validation -------------------------------------------------------

class EntryOutOfRange(AsmProjError):
    pass


class LineError(AsmProjError):
    """A row/column/vertical line failed a check.

    ``kind`` is ``"row"``, ``"column"`` or ``"vertical"``; ``index`` is a
    1-based int (or tuple of ints for hypermatrix lines).
    """

    def __init__(self, kind, index, detail=""):
        self.kind = kind
        self.index = index
        msg = f"{kind} {index}"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)


class LineNotAlternating(LineError):
    pass


class LineSumNotOne(LineError):
    pass


class NegativePartialSum(LineError):
    def __init__(self, kind, index, prefix, from_end=False):
        self.prefix = prefix
        self.from_end = from_end
        side = "suffix" if from_end else "prefix"
        super().__init__(kind, index, f"negative {side} sum of length {prefix}")


class NotAnAsm(AsmProjError):
    pass


class BadRowSums(AsmProjError):
    pass


# -- triangles ---------------------------------------------------------------

class RowNotStrict(AsmProjError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} is not strictly increasing")


class InterlacingViolated(AsmProjError):
    def __init__(self, row, col):
        self.row = row
        self.col = col
        super().__init__(f"interlacing violated at ({row},{col})")


class ValueOutOfRange(AsmProjError):
    pass


class StaleTrapezoid(AsmProjError):
    pass


# -- majorization / construction ---------------------------------------------

class NegativeEntry(AsmProjError):
    pass


class NonPositiveEntry(AsmProjError):
    pass


class Infeasible(AsmProjError):
    pass


class NotMajorized(Infeasible):
    pass


class SeamError(AssertionError):
    """An internal pipeline postcondition failed; names the failing stage."""

    def __init__(self, seam, detail):
        self.seam = seam
        super().__init__(f"[{seam}] {detail}")


# -- polytope ----------------------------------------------------------------

class ProjectionMismatch(Infeasible):
    pass


class CornerOutOfRange(AsmProjError):
    pass
