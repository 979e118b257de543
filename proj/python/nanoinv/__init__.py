"""Python bindings for the nanoinv C++ library."""

from ._core import (
    Alphabet,
    NanoError,
    arnold,
    canonical,
    cyclic_canonical,
    gamma,
    orbit,
    pair,
    pair_class,
    rank,
    run_cli,
    subphrases,
    verify,
)

__all__ = [
    "Alphabet",
    "NanoError",
    "arnold",
    "canonical",
    "cyclic_canonical",
    "gamma",
    "orbit",
    "pair",
    "pair_class",
    "rank",
    "run_cli",
    "subphrases",
    "verify",
]
