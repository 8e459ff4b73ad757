"""Exception hierarchy.  ``exit_code`` is what the CLI returns for each family."""


class BlockcalcError(Exception):
    exit_code = 1


class InputError(BlockcalcError):
    exit_code = 2


class UnsupportedError(BlockcalcError):
    exit_code = 3


class SearchBoundExceeded(BlockcalcError):
    exit_code = 4


class DivisionByZero(BlockcalcError, ZeroDivisionError):
    pass


class InvalidAutomorphism(InputError):
    pass


class NotARootOfUnity(BlockcalcError):
    pass


class CoefficientBasisTooSmall(InputError):
    pass


class UnsupportedClassOrder(UnsupportedError):
    pass


class InsufficientCoefficients(InputError):
    pass


class NotACharacter(BlockcalcError):
    pass


class InternalReciprocityViolation(BlockcalcError):
    pass


class DegreeMismatch(InputError):
    pass


class NoConjugatorFound(BlockcalcError):
    pass


class EmbeddingIncomplete(BlockcalcError):
    pass


class IndivisibleMultiplicity(InputError):
    pass


class SchemaError(InputError):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path


class CocycleInvalid(InputError):
    def __init__(self, triple, message="cocycle identity fails"):
        super().__init__(f"{message} at {triple}")
        self.triple = triple


class PipelineInvariantViolation(BlockcalcError):
    pass


class StageError(BlockcalcError):
    """Wraps an error raised inside a pipeline stage, keeping its exit code."""

    def __init__(self, stage, error):
        super().__init__(f"[{stage}] {error}")
        self.stage = stage
        self.error = error
        self.exit_code = getattr(error, "exit_code", 1)
