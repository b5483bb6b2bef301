"""Exact EFX+PO allocation solver for two good types.

Thin dict-based wrappers over the C++ extension; documents use the same JSON
schema as the ``efxpo`` command line tool.
"""

import json

from efxpo._efxpo import (  # noqa: F401
    BudgetExceeded,
    __version__,
    generate_json,
    solve_json,
    validate_theorems_json,
)

__all__ = ["solve", "generate", "validate_theorems", "BudgetExceeded"]


def solve(instance, verify="fast", budget=2_000_000):
    """Solve an instance dict and return the result dict.

    ``instance`` is ``{"m1": int, "m2": int, "agents": [{"v1": v, "v2": v}]}``
    with values given as ints or strings like ``"2/3"`` or ``"0.25"``.
    """
    return json.loads(solve_json(json.dumps(instance), verify, budget))


def generate(n, m1, m2, seed=1, denom_bound=10, adversarial=False):
    """Generate an instance dict with uniform rational ratios."""
    return json.loads(generate_json(n, str(m1), str(m2), seed, denom_bound, adversarial))


def validate_theorems(instance, budget=2_000_000):
    """Run the structural property sweep; returns the report dict."""
    return json.loads(validate_theorems_json(json.dumps(instance), budget))
