"""Exception hierarchy shared by every linext module."""

from __future__ import annotations


class LinextError(Exception):
    """Base class for all library errors."""


class InputError(LinextError):
    """Malformed or inconsistent user input (CLI exit code 1)."""


class CycleError(InputError):
    pass


class DuplicateLabelError(InputError):
    pass


class UnknownLabelError(InputError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return Exception.__str__(self)


class SameElementError(InputError, ValueError):
    pass


class EmptyFamilyError(InputError, ValueError):
    pass


class UndefinedAtOrigin(InputError, ValueError):
    pass


class NotAdmissibleError(InputError, ValueError):
    pass


class OutOfRange(InputError, ValueError):
    pass


class PosetFormatError(InputError, ValueError):
    pass


class BudgetError(LinextError):
    """A computation refused to run because it would be too large (exit code 2)."""


class IdealBudgetExceeded(BudgetError):
    def __init__(self, cap: int):
        super().__init__(f"order-ideal lattice exceeds budget of {cap} states")
        self.cap = cap


class TooLargeForBrute(BudgetError):
    pass


class TooLargeToSurvey(BudgetError):
    pass


class IdentityFailure(LinextError):
    """An exact identity that must hold did not (exit code 3)."""


class NonIntegerResult(IdentityFailure):
    pass
