"""Step budgets for searches that are not known to terminate quickly."""

import os

DEFAULT_BUDGET = 100_000


def search_budget(default=DEFAULT_BUDGET):
    """The DDC_BUDGET environment variable, when set, overrides ``default``."""
    value = os.environ.get("DDC_BUDGET")
    return int(value) if value else default
