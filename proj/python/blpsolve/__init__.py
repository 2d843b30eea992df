"""Exact solvers for bilevel linear programs in fixed dimensions.

All numeric values cross the boundary as exact rational strings ("p/q" or
integers); nothing is rounded.
"""

from ._core import (
    Instance,
    eval_phi,
    generate,
    mis_bruteforce,
    parse_instance,
    pessimistic_evaluate,
    reduce_mis,
    solve,
    validate,
    value_function_pieces,
)

__all__ = [
    "Instance",
    "eval_phi",
    "generate",
    "mis_bruteforce",
    "parse_instance",
    "pessimistic_evaluate",
    "reduce_mis",
    "solve",
    "validate",
    "value_function_pieces",
]

__version__ = "0.1.0"
