"""Resets, semaphore codes and right congruences on left-infinite words."""

from ._core import (
    Alphabet,
    Ideal,
    SemacodeError,
    TuringMachine,
    classify,
    example_nonreset,
    graph_resets,
    is_k_reset,
    is_semaphore_code,
    reset_search,
    rho_k,
    rsc_ell,
    verify_projective,
)

__all__ = [
    "Alphabet",
    "Ideal",
    "SemacodeError",
    "TuringMachine",
    "classify",
    "example_nonreset",
    "graph_resets",
    "is_k_reset",
    "is_semaphore_code",
    "reset_search",
    "rho_k",
    "rsc_ell",
    "verify_projective",
]
