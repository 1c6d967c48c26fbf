"""Exact rationals, expression trees and a rigorous comparator."""

from fractions import Fraction as Rat

from .compare import LADDER, MAX_PRECISION, Comparison, Ordering3, compare, floor_log2
from .expr import (
    Add,
    Div,
    Exp,
    Expr,
    Floor,
    IntLit,
    Ln,
    Log2,
    Max,
    Mul,
    Pow,
    RatLit,
    Sqrt,
    Sub,
    canonical,
    const,
    exp,
    floor,
    fold,
    lift,
    ln,
    log2,
    maximum,
    power,
    sqrt,
)
from .interval import Interval, eval_interval

__all__ = [
    "Add", "Comparison", "Div", "Exp", "Expr", "Floor", "IntLit", "Interval",
    "LADDER", "Ln", "Log2", "MAX_PRECISION", "Max", "Mul", "Ordering3", "Pow",
    "Rat", "RatLit", "Sqrt", "Sub", "canonical", "compare", "const", "eval_interval", "exp",
    "floor", "floor_log2", "fold", "lift", "ln", "log2", "maximum", "power",
    "sqrt",
]
