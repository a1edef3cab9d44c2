"""Exception hierarchy shared by all modules.

The command-line layer maps these onto exit codes: a
:class:`FalsificationError` means a mathematical claim the library treats as
testable failed on concrete data (exit code 1); the remaining types are usage,
budget, or regime problems (exit code 2).
"""

from __future__ import annotations


class BnCellsError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(BnCellsError, ValueError):
    """Malformed window, word, tableau, or other user-supplied data."""


class RankError(InvalidInputError):
    """A rank is outside the supported range, or data mixes ranks."""


class BudgetError(BnCellsError):
    """A computation was refused because it exceeds the documented budget."""


class RegimeError(BnCellsError):
    """The weight function lies outside the validity region of an operation."""


class FalsificationError(BnCellsError):
    """A tested mathematical claim failed on explicit data.

    Raised, for example, when a bounded search that is guaranteed to succeed
    exhausts its space, or when a build-time identity check fails.  This is
    deliberately *not* an ``AssertionError``: it must survive ``python -O``.
    """
