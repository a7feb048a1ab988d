from .bench import BenchConfig, BenchReport, random_bench_poly, run_bench
from .expr import (
    ExprError,
    ExprSyntaxError,
    NonconstantExponent,
    PolyExpr,
    UnknownIdentifier,
    parse_poly,
)
from .main import main

__all__ = [
    "BenchConfig",
    "BenchReport",
    "ExprError",
    "ExprSyntaxError",
    "NonconstantExponent",
    "PolyExpr",
    "UnknownIdentifier",
    "main",
    "parse_poly",
    "random_bench_poly",
    "run_bench",
]
