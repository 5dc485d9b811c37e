from typing import Optional


class MultirankError(ValueError):
    pass


class StateSyntaxError(MultirankError):
    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ):
        self.line = line
        self.column = column
        if line is not None:
            location = f"line {line}" + (f", column {column}" if column else "")
            message = f"{location}: {message}"
        super().__init__(message)


class IndexOutOfRangeError(MultirankError):
    pass


class ZeroStateError(MultirankError):
    pass


class ParameterConflictError(MultirankError):
    pass


class DimensionMismatchError(MultirankError):
    pass


class ParametricEntryError(MultirankError):
    pass


class PrimeError(MultirankError):
    pass


class DenominatorDivisibleError(PrimeError):
    pass


class LevelOutOfRangeError(MultirankError):
    pass


class MatrixTooLargeError(MultirankError):
    pass
