"""Error types shared across the package.

Every error carries a short machine-readable ``code`` so callers (and the
CLI) can distinguish failure modes without parsing messages.
"""

from __future__ import annotations


class OlabError(Exception):
    """Base class; ``code`` is a stable machine-readable identifier."""

    code = "error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


class NotSymmetricError(OlabError):
    code = "not_symmetric"


class NotPositiveDefiniteError(OlabError):
    code = "not_positive_definite"


class OddDiagonalError(OlabError):
    code = "odd_diagonal"


class NotIsometryError(OlabError):
    code = "not_isometry"


class NotFourvolutionError(OlabError):
    code = "not_fourvolution"


class OrderBoundExceededError(OlabError):
    code = "order_exceeds_bound"


class NotFiniteIndexError(OlabError):
    code = "not_finite_index"


class EnumerationBudgetError(OlabError):
    code = "enumeration_budget_exceeded"


class DiscrepancyError(OlabError):
    """An identity that is supposed to hold exactly failed.

    Raised instead of silently passing; ``details`` holds the computed
    values so reports can show the counterexample.
    """

    code = "discrepancy"


class CodeTooLargeError(OlabError):
    code = "dimension_too_large"


class NotDoublyEvenError(OlabError):
    code = "code_not_doubly_even"


class RootSystemError(OlabError):
    code = "root_system_not_a1n"


class SublatticeError(OlabError):
    code = "bad_sublattice"


class UnsupportedProductError(OlabError):
    code = "unsupported_product"


class SigmaDomainError(OlabError):
    code = "outside_sigma_domain"


class LiftOrderError(OlabError):
    code = "no_lift_with_requested_order"


class NonSquareIndexError(OlabError):
    code = "non_perfect_square_index"


class BudgetExceededError(OlabError):
    code = "budget_exceeded"


class FormatError(OlabError):
    code = "bad_format"
