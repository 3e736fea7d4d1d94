"""Exception hierarchy shared by every module."""


class QHopfError(Exception):
    pass


class InputError(QHopfError, ValueError):
    """Malformed or inconsistent input (dimension mismatch, bad normalization, ...)."""


class NotInvertible(QHopfError, ArithmeticError):
    pass


class Unsupported(QHopfError):
    """The request is outside what the algorithm covers (e.g. p = 2 square roots)."""


class NotIdempotentModRadical(InputError):
    pass


class ChevalleyViolation(QHopfError):
    """The radical is not a Hopf ideal, so gr(H) carries no Hopf structure."""


class ResourceLimit(QHopfError):
    pass


class SpecError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
