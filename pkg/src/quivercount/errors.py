"""Exception types shared across the package."""


class QuivercountError(Exception):
    """Base class for all package-specific errors."""


class PoleAtEvaluationPoint(QuivercountError):
    pass


class NonzeroConstantTerm(QuivercountError):
    pass


class ConstantTermNotOne(QuivercountError):
    pass


class DimensionMismatch(QuivercountError):
    pass


class ContractLoop(QuivercountError):
    pass


class NotConnected(QuivercountError):
    pass


class Not2Connected(QuivercountError):
    pass


class InvalidType(QuivercountError):
    pass


class ReflectionAtImaginaryVertex(QuivercountError):
    pass


class CapExceeded(QuivercountError):
    pass


class EnumerationCapExceeded(CapExceeded):
    pass


class EndTooLargeForLocalityTest(CapExceeded):
    pass


class NonGenericLambda(QuivercountError):
    pass


class CharacteristicTooSmall(QuivercountError):
    pass
