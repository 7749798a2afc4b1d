"""Lexicographic graph products."""

from lexpacking.products.lexicographic import (
    ProductGraph,
    lex_distance,
    lex_product,
    product_alpha_set,
)

__all__ = ["ProductGraph", "lex_distance", "lex_product", "product_alpha_set"]
