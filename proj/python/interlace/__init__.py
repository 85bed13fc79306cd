"""Interlaced periodic words, derived substitutions and Robinson patches."""

from ._core import (
    DerivationError,
    DivergenceError,
    DomainError,
    InterlaceError,
    ParseError,
    Spec,
    UsageError,
    VerificationError,
    check,
    compose,
    definition_layer,
    derive,
    expanded_period,
    robinson_patch,
    verify_hierarchy,
    window,
)

__all__ = [
    "DerivationError",
    "DivergenceError",
    "DomainError",
    "InterlaceError",
    "ParseError",
    "Spec",
    "UsageError",
    "VerificationError",
    "check",
    "compose",
    "definition_layer",
    "derive",
    "expanded_period",
    "robinson_patch",
    "verify_hierarchy",
    "window",
]
