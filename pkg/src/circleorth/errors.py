class MeasureError(ValueError):
    """Invalid measure description or parameters."""


class TrivialMeasureError(MeasureError):
    """The measure has too few support points for the requested degree."""


class InsufficientMomentsError(MeasureError):
    """A computation asked for moments beyond the cached table."""


class SzegoConditionError(MeasureError):
    """The weight touches zero on the quadrature grid."""


class AdmissibilityError(ValueError):
    """Coefficient data violates a Favard admissibility condition.

    ``index`` is the offending ``n`` and ``clause`` names the violated
    condition.
    """

    def __init__(self, message, index=None, clause=None):
        super().__init__(message)
        self.index = index
        self.clause = clause
