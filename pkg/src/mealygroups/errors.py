"""Exception hierarchy shared by every module in the package."""
from __future__ import annotations


class MealyError(Exception):
    """Base class for all package errors."""

    line: int | None = None
    column: int | None = None

    def at(self, line: int, column: int):
        """Attach a 1-based source location and return ``self``."""
        self.line, self.column = line, column
        self.args = (f"line {line}, column {column}: {self.args[0] if self.args else ''}",)
        return self


class UnknownState(MealyError):
    def __init__(self, state, where=None):
        self.state = state
        self.where = where
        msg = f"unknown state {state!r}"
        if where:
            msg += f" in {where}"
        super().__init__(msg)


class UnknownLetter(MealyError):
    def __init__(self, letter):
        self.letter = letter
        super().__init__(f"unknown letter {letter!r}")


class ArityMismatch(MealyError):
    def __init__(self, state, got, expected):
        self.state, self.got, self.expected = state, got, expected
        super().__init__(f"row {state!r} has {got} sections, expected {expected}")


class NonBijectivePermutation(MealyError):
    pass


class NonInvertible(MealyError):
    """Raised when some state sends two letters to the same output."""

    def __init__(self, state, letters, output):
        self.state = state
        self.letters = letters
        self.output = output
        super().__init__(
            f"state {state!r} maps letters {letters[0]!r} and {letters[1]!r} "
            f"both to {output!r}"
        )


class AutomatonMismatch(MealyError):
    pass


class EmptyPeriod(MealyError):
    pass


class NotInW(MealyError):
    pass


class IdentityInput(MealyError):
    pass


class DocumentSyntaxError(MealyError):
    """Parse failure with a 1-based line/column location."""

    def __init__(self, message, line, column, expected=None):
        self.expected = expected
        text = message + (f" (expected {expected})" if expected else "")
        super().__init__(text)
        self.at(line, column)
