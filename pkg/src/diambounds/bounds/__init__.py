"""Diameter bound catalog and the combinators behind the tail bounds."""

from .catalog import (
    BestBound,
    BoundFamily,
    BoundParams,
    Target,
    almost_linear_exponent,
    applicable_families,
    best_bound,
    bound_applies,
    bound_value,
    bounds_target,
    catalog_json,
    catalog_records,
    subcubic_exponent,
)
from .combinators import (
    BaseRow,
    binomial_factor,
    iterated_kk,
    log_quarter,
    nested_binomial_bound,
    nested_sum_count,
)
from .tail import Lemma73Result, cubic_chain, lemma73_check

__all__ = [
    "BaseRow", "BestBound", "BoundFamily", "BoundParams", "Lemma73Result",
    "Target", "almost_linear_exponent", "applicable_families", "best_bound",
    "binomial_factor", "bound_applies", "bound_value", "bounds_target",
    "catalog_json", "catalog_records", "cubic_chain", "iterated_kk",
    "lemma73_check", "log_quarter", "nested_binomial_bound", "nested_sum_count",
    "subcubic_exponent",
]
