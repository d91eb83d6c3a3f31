"""Exact coalgebra computations over Q and GF(p)."""

from ._coalg import (
    Coalgebra,
    Colored,
    Definition,
    ParseError,
    UnsupportedCharacteristic,
    load,
    matrix_coalgebra,
    parse,
    path_coalgebra,
    run,
)

__all__ = [
    "Coalgebra",
    "Colored",
    "Definition",
    "ParseError",
    "UnsupportedCharacteristic",
    "load",
    "matrix_coalgebra",
    "parse",
    "path_coalgebra",
    "run",
]
