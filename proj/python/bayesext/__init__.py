"""Bayesian extensions of finite Boolean algebras."""

from ._core import (
    EpsScalar,
    Error,
    GrowthLimitExceeded,
    ParseError,
    Rational,
    Tower,
    ValidationError,
    cantor_pair,
    cantor_unpair,
    check_derivation,
    find_counterexample,
    lewis_search,
    normalize_sequent,
    run_cli,
)

__all__ = [
    "EpsScalar",
    "Error",
    "GrowthLimitExceeded",
    "ParseError",
    "Rational",
    "Tower",
    "ValidationError",
    "cantor_pair",
    "cantor_unpair",
    "check_derivation",
    "find_counterexample",
    "lewis_search",
    "normalize_sequent",
    "run_cli",
]
