"""
Independent brute-force cross-checks.
"""
from nilmult.oracle.lyndon import LyndonWord, is_lyndon, iter_lyndon_words, lyndon_words, lyndon_count
from nilmult.oracle.schur import tensor_cyclic, tensor_product, direct_product_multiplier, schur_oracle

__all__ = [
    "LyndonWord", "is_lyndon", "iter_lyndon_words", "lyndon_words", "lyndon_count",
    "tensor_cyclic", "tensor_product", "direct_product_multiplier", "schur_oracle",
]
