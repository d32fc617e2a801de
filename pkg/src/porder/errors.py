"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class PAdicError(ValueError):
    code = "Error"


class NonPrimeError(PAdicError):
    code = "NonPrime"


class OutOfRangeError(PAdicError):
    code = "OutOfRange"


class DuplicateError(PAdicError):
    code = "Duplicate"


class EmptyInputError(PAdicError):
    code = "EmptyInput"


class ContextMismatchError(PAdicError):
    code = "ContextMismatch"


class OverlapError(PAdicError):
    code = "Overlap"


class ExpansionCapError(PAdicError):
    code = "ExpansionCap"


class LengthError(PAdicError):
    code = "Length"


class ResidueError(PAdicError):
    code = "MixedResidue"


class UnsupportedLevelError(PAdicError):
    code = "UnsupportedLevel"


class ParseError(PAdicError):
    code = "Parse"
