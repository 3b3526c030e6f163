"""Exception types raised across the package."""


class QRCError(Exception):
    """Base class for all errors raised by qrcqe."""


class ZeroInput(QRCError, ValueError):
    pass


class ZeroPolynomial(QRCError, ValueError):
    pass


class FormulaSyntaxError(QRCError, SyntaxError):
    """Parse failure with a 1-based line/column and the expected-token set."""

    def __init__(self, message, text="", pos=0, expected=()):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at line {self.line}, column {self.column}"
        if self.expected:
            detail += f"; expected one of: {', '.join(self.expected)}"
        super().__init__(detail)
        # SyntaxError stores its own lineno/offset; keep them consistent.
        self.lineno = self.line
        self.offset = self.column


class EvenBound(QRCError, ValueError):
    pass


class UnsupportedFragment(QRCError):
    def __init__(self, location, reason):
        self.location = location
        self.reason = reason
        super().__init__(f"unsupported fragment at {location}: {reason}")


class BudgetExceeded(QRCError):
    pass


class TableMiss(QRCError):
    pass


class NotASentence(QRCError, ValueError):
    pass


class MissingAssignment(QRCError, KeyError):
    def __str__(self):
        return f"no value assigned to variable(s): {', '.join(self.args)}"


class NoSquareRoot(QRCError, ArithmeticError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"no square root: {reason}")


class UnsupportedQuantifierShape(QRCError):
    pass


class PrecisionExhausted(QRCError, ArithmeticError):
    pass


class NotSimpleResidueRoot(QRCError, ValueError):
    pass


class FreeVariableMismatch(QRCError, ValueError):
    pass
