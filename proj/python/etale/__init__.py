"""Exact tools for etale covers of the affine line from hyperelliptic models."""

from ._etale import (
    EtaleError,
    admissible,
    cartier,
    cover,
    exists,
    family,
    legendre,
    mindeg,
    poly_canon,
    search,
    ss_j,
    table,
    verify,
)

__all__ = [
    "EtaleError",
    "admissible",
    "cartier",
    "cover",
    "exists",
    "family",
    "legendre",
    "mindeg",
    "poly_canon",
    "search",
    "ss_j",
    "table",
    "verify",
]
