"""Exception hierarchy.

``ParameterError`` subclasses signal bad user input (CLI exit code 2);
everything else under ``HermcodesError`` signals a failed internal check
(CLI exit code 1).
"""


class HermcodesError(Exception):
    pass


class ParameterError(HermcodesError, ValueError):
    pass


class CompositeP(ParameterError):
    pass


class EvenM(ParameterError):
    pass


class TooLarge(ParameterError):
    pass


class TooLargeToEnumerate(ParameterError):
    pass


class NotADivisor(ParameterError):
    pass


class NotInSubfield(ParameterError):
    pass


class InvalidBasis(ParameterError):
    pass


class NotABasis(ParameterError):
    pass


class InternalInconsistency(HermcodesError):
    pass


class NonRationalSum(HermcodesError):
    pass


class NonIntegralWeight(HermcodesError):
    pass


class VerificationFailed(HermcodesError):
    def __init__(self, clause, detail=""):
        self.clause = clause
        super().__init__(f"{clause}: {detail}" if detail else clause)
