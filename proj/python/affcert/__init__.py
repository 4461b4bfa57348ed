"""Exact-arithmetic certification of affine vertex algebra computations.

Thin Python facade over the C++ engine: all values cross the boundary
as strings in the documented plain-text formats, so results stay exact.
"""

from ._core import (
    classify,
    lemma32_rows,
    search_singular,
    verify_singular,
    w_top,
    zhu_image,
)

__all__ = [
    "classify",
    "lemma32_rows",
    "search_singular",
    "verify_singular",
    "w_top",
    "zhu_image",
]
