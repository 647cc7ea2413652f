"""Exception hierarchy shared by every module.

Each exception carries a stable ``code`` string; the CLI prints it on
stderr so scripts can match on failures without parsing messages.
"""


class KRLError(Exception):
    code = "error"


class KRLSyntaxError(KRLError):
    code = "syntax-error"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class EmptyTrace(KRLError):
    code = "empty-trace"


class UnknownVariable(KRLError):
    code = "unknown-variable"


class TimeOutOfRange(KRLError):
    code = "time-out-of-range"


class DoubleDefinition(KRLError):
    code = "double-definition"


class RecursiveProgram(KRLError):
    code = "recursive-program"

    def __init__(self, cycle):
        super().__init__("dependency cycle: " + " -> ".join(cycle))
        self.cycle = list(cycle)


class ArityMismatch(KRLError):
    code = "arity-mismatch"


class ArityError(KRLError):
    code = "arity-error"


class UnknownOperator(KRLError):
    code = "unknown-operator"


class DuplicateName(KRLError):
    code = "duplicate-name"


class LetterNotInAlphabet(KRLError):
    code = "letter-not-in-alphabet"


class EmptyInput(KRLError):
    code = "empty-input"


class NotAnAcceptor(KRLError):
    code = "not-an-acceptor"


class AlphabetMismatch(KRLError):
    code = "alphabet-mismatch"


class WiringMismatch(KRLError):
    code = "wiring-mismatch"


class StateSpaceTooLarge(KRLError):
    code = "state-space-too-large"


class NotBitAlphabet(KRLError):
    code = "not-bit-alphabet"


class UnsupportedOperator(KRLError):
    code = "unsupported-operator"


class UnsupportedInitialState(KRLError):
    code = "unsupported-initial-state"


class NotAGroup(KRLError):
    code = "not-a-group"


class TooLarge(KRLError):
    code = "too-large"


class NoInitialPreimage(KRLError):
    code = "no-initial-preimage"


class BudgetExceeded(KRLError):
    code = "budget-exceeded"
