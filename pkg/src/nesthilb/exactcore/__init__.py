from .field import DEFAULT_PRIME, QQ, Field
from .kernels import BACKEND
from .linalg import DenseMatrix, Subspace, kernel, kernel_rows, rank, rank_rows, rref, solve_rows
from .poly import Monomial, TruncPoly, basis_size, monomial_index, monomials_below, trunc_mul

__all__ = [
    "BACKEND", "DEFAULT_PRIME", "DenseMatrix", "Field", "Monomial", "QQ", "Subspace",
    "TruncPoly", "basis_size", "kernel", "kernel_rows", "monomial_index", "monomials_below",
    "rank", "rank_rows", "rref", "solve_rows", "trunc_mul",
]
