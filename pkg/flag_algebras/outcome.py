"""Three-valued verdicts and budget guards."""
from enum import Enum

from .errors import BudgetExceeded


class Verdict(str, Enum):
    """Answer of a decision procedure that may run out of budget."""

    TRUE = "true"
    FALSE = "false"
    UNDECIDED = "undecided"

    @staticmethod
    def of(value: bool) -> "Verdict":
        """Converts a plain boolean."""
        return Verdict.TRUE if value else Verdict.FALSE


def check_budget(what: str, size: int, budget: int) -> None:
    """Raises `BudgetExceeded` when `size` is above `budget`."""
    if size > budget:
        raise BudgetExceeded(what, size, budget)
