"""Ordered groups, chains of subsets, poset completions and cardinal Krull dimension.

Results come back as plain dicts and lists shaped like the CLI's JSON output.
Failures raise KrullkitError with args (code, message).
"""

from ._core import (
    KrullkitError,
    berry_family,
    build_ep,
    c_order,
    catalog,
    chain_to_dense,
    check_concatenation,
    cofinality,
    completion,
    ded_bounds,
    ded_finite,
    dense_to_chain,
    exists_ring,
    exp2,
    group_rank,
    max_separated,
    predicates,
    run_cli,
    spectrum_order,
    tree_group,
    valuation_spectrum,
)

__version__ = "0.3.0"

__all__ = [
    "KrullkitError",
    "berry_family",
    "build_ep",
    "c_order",
    "catalog",
    "chain_to_dense",
    "check_concatenation",
    "cofinality",
    "completion",
    "ded_bounds",
    "ded_finite",
    "dense_to_chain",
    "exists_ring",
    "exp2",
    "group_rank",
    "max_separated",
    "predicates",
    "run_cli",
    "spectrum_order",
    "tree_group",
    "valuation_spectrum",
]
