"""Common errors that may be thrown."""
from typing import Any


class FlagAlgebraError(Exception):
    """Base class of every error raised by this package."""


class InputError(FlagAlgebraError):
    """Thrown when user-provided input (files, flags, specs) cannot be used."""


class IndexOutOfRange(InputError):
    """Thrown when a pair mentions an element outside of {1..n}."""


class MalformedInput(InputError):
    """Thrown when a preorder or group table file cannot be parsed."""

    def __init__(self, message: str, token: str = "") -> None:
        super().__init__(message)
        self.token = token


class NotPrime(InputError):
    """Thrown when a field modulus is not a prime (or is above the supported cap)."""


class UnknownGroupSpec(InputError):
    """Thrown when a group spec string does not name a known group."""


class GroupAxiomError(InputError):
    """
    Thrown when a multiplication table fails the group axioms. `witness` holds
    the offending elements (a triple for associativity).
    """

    def __init__(self, message: str, witness: tuple[int, ...]) -> None:
        super().__init__(f"{message} (witness: {witness})")
        self.witness = witness


class CocycleViolation(FlagAlgebraError):
    """Thrown when u(i,j)·u(j,r) != u(i,r) for some triple (i, j, r)."""

    def __init__(self, witness: tuple[int, int, int]) -> None:
        super().__init__(f"Labeling is not transitive at {witness}.")
        self.witness = witness


class DomainMismatch(FlagAlgebraError):
    """Thrown when a labeling is not defined exactly on the expected pairs."""


class ShapeMismatch(FlagAlgebraError):
    """Thrown when combining values built over different preorders or fields."""


class SingularMatrix(FlagAlgebraError):
    """Thrown when inverting a matrix with zero determinant."""


class NotMultiplicityPreserving(FlagAlgebraError):
    """Thrown when a poset automorphism sends a class to one of another size."""


class NotAnAntichain(FlagAlgebraError):
    """Thrown when a set of classes contains two comparable members."""


class NotALatticeAutomorphism(FlagAlgebraError):
    """
    Thrown when a map on antichains is not an order automorphism of the
    antichain lattice. `witness` is the pair of antichains breaking it.
    """

    def __init__(self, message: str, witness: tuple[Any, Any]) -> None:
        super().__init__(f"{message} (witness: {witness})")
        self.witness = witness


class InconsistentLabeling(FlagAlgebraError):
    """Thrown when two parallel Hasse paths carry different products."""

    def __init__(self, witness: tuple[Any, Any]) -> None:
        super().__init__(f"Parallel paths disagree: {witness}")
        self.witness = witness


class InvalidComponent(FlagAlgebraError):
    """Thrown when a connected component index is out of range."""


class BudgetExceeded(FlagAlgebraError):
    """Thrown when an enumeration would be larger than its configured budget."""

    def __init__(self, what: str, size: int, budget: int) -> None:
        super().__init__(f"{what}: {size} candidates exceed the budget of {budget}.")
        self.what = what
        self.size = size
        self.budget = budget
