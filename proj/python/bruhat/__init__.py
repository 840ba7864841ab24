"""Bruhat intervals of S_n: R-polynomials and hypercube decompositions."""

from ._bruhat import (
    dh,
    ds,
    elements,
    hcds,
    inspect,
    is_cosimple,
    length,
    leq,
    rtilde,
    rtilde_coefficients,
    rtilde_z,
    shortcuts,
    standard_hcds,
)

__all__ = [
    "dh",
    "ds",
    "elements",
    "hcds",
    "inspect",
    "is_cosimple",
    "length",
    "leq",
    "rtilde",
    "rtilde_coefficients",
    "rtilde_z",
    "shortcuts",
    "standard_hcds",
]
