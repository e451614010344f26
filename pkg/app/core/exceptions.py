"""
Domain Exceptions - built on the atams exception hierarchy

Every exception carries a human message (``reason``) and a ``context`` dict,
mirroring the ``details`` payload the atams exceptions take.
"""
from typing import Any, Dict, Optional

from atams.exceptions import (
    BadRequestException,
    InternalServerException,
    UnprocessableEntityException,
)


class DomainError(Exception):
    """
    Common base of every domain error, caught once at the command boundary

    Concrete errors pair it with an atams exception; the atams base receives
    the message and details through the cooperative ``__init__``.
    """

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, details=details)
        self.reason = message
        self.context = details or {}

    def __str__(self) -> str:
        return self.reason


class GraphParseError(DomainError, BadRequestException):
    """Malformed edge-list document"""


class InvalidWalkError(DomainError, BadRequestException):
    """Walk is not closed, uses a non-edge, or is not Hamiltonian when it must be"""


class InvalidChordError(DomainError, BadRequestException):
    """Edge or vertex triple violates an operation precondition"""


class NotACycleError(DomainError, BadRequestException):
    """1-chain whose reduced boundary is nonzero"""


class NotInCycleSpaceError(DomainError, BadRequestException):
    """Oriented edge vector outside the kernel of the incidence map"""


class DimensionMismatchError(DomainError, BadRequestException):
    """Vector length does not match the ambient lattice"""


class NotHamiltonianError(DomainError, UnprocessableEntityException):
    """Graph has no Hamiltonian cycle (or none was pinned)"""


class EnumerationBudgetExceeded(DomainError, UnprocessableEntityException):
    """Singular 2-simplex enumeration would exceed the configured budget"""

    def __init__(self, budget: int, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            f"Simplex enumeration exceeded budget of {budget}",
            details={"budget": budget, **(details or {})}
        )
        self.budget = budget


class LatticeContainmentError(DomainError, InternalServerException):
    """Image generators escape the kernel lattice (upstream boundary bug)"""


class CorpusParameterError(DomainError, BadRequestException):
    """Corpus request outside the configured limits"""
