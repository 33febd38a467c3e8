"""Exception types shared by the rewriting engines and the CLI."""

import os


class ParseError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """The rewriting step budget ran out before a normal form was reached."""

    def __init__(self, budget: int, where: str = ""):
        super().__init__(f"rewriting budget of {budget} steps exceeded" + (f" while reducing {where}" if where else ""))
        self.budget = budget
        self.where = where


class CycleDetected(RuntimeError):
    def __init__(self, stuck: str):
        super().__init__(f"rewriting cycle detected at {stuck}")
        self.stuck = stuck


class Unsupported(ValueError):
    pass


DEFAULT_BUDGET = 10 ** 6


def default_budget() -> int:
    env = os.environ.get("ABMW_BUDGET")
    if env:
        try:
            val = int(env)
        except ValueError:
            raise ValueError(f"ABMW_BUDGET must be a positive integer, got {env!r}") from None
        if val <= 0:
            raise ValueError("ABMW_BUDGET must be positive")
        return val
    return DEFAULT_BUDGET
