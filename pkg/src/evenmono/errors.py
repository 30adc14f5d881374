"""Exception types shared across the package."""


class ZeroPolynomialError(ValueError):
    pass


class ConstantPolynomialError(ValueError):
    pass


class NonMonicError(ValueError):
    pass


class NotIrreducibleError(ValueError):
    pass


class ReducibleInputError(NotIrreducibleError):
    pass


class ZeroDiscriminantError(ValueError):
    pass


class DegreeMismatchError(ValueError):
    pass


class DivisibilityViolation(ValueError):
    pass


class DegenerateConductorError(ValueError):
    pass


class InconsistencyError(RuntimeError):
    """An internal invariant failed; never expected on correct code."""


class VerificationFailure(AssertionError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
