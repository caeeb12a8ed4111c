"""Euler characteristics of sheaves on projective space, symbolically.

For a coherent sheaf F of rank n on projective N-space with Chern classes
c_1..c_N, the Euler characteristic is a universal polynomial evaluated at
those classes:

    chi(F) = (1/N!) * sum_{k=1}^{N} [N+1, k+1] * B_k(C_1..C_k) + n

where [.,.] are unsigned Stirling numbers of the first kind and B_k is
the k-th power sum written in the elementary-symmetric variables C_i
(which stand in for the Chern classes).  Twisting by O(t) replaces each
C_i by

    C_i(T) = sum_{j=0}^{i} binom(n-i+j, j) T^j C_{i-j},    C_0 = 1,

so chi(F(t)) is the same bracket evaluated at the twisted classes, a
polynomial in C_1..C_N and T.  Everything here is exact over Q; the rank
may be a specific integer or left symbolic as the variable n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import RANK, TWIST, Polynomial, chern
from .stirling import unsigned_stirling1
from .symmfun import PowerSumCache, power_sum_matrix, power_sum_recursive

METHODS = ("matrix", "recursive")


def _check_dim(dim: int) -> None:
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"projective-space dimension must be a positive integer, got {dim!r}")


def _check_rank(rank) -> None:
    if rank is not None and (not isinstance(rank, int) or rank < 1):
        raise ValueError(f"rank must be a positive integer or None for symbolic, got {rank!r}")


def _rank_poly(rank) -> Polynomial:
    if rank is None:
        return Polynomial.variable(RANK)
    return Polynomial.constant(rank)


def build_chi_polynomial(
    rank,
    dim: int,
    method: str = "recursive",
    cache: PowerSumCache | None = None,
) -> Polynomial:
    """Uncached construction of the chi polynomial; see chi_polynomial.

    The benchmark calls this directly with a fresh PowerSumCache so that
    each timed run pays the full cost of its method.
    """
    _check_dim(dim)
    _check_rank(rank)
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    total = Polynomial.zero()
    for k in range(1, dim + 1):
        if method == "matrix":
            bk = power_sum_matrix(k)
        else:
            bk = power_sum_recursive(k, cache)
        total = total + unsigned_stirling1(dim + 1, k + 1) * bk
    return total / math.factorial(dim) + _rank_poly(rank)


@lru_cache(maxsize=None)
def chi_polynomial(rank, dim: int, method: str = "recursive") -> Polynomial:
    """The universal polynomial P with chi(F) = P(c_1, ..., c_N).

    rank is an integer or None for the symbolic rank variable n; dim is
    the N of projective N-space.  Results are cached per (rank, dim,
    method).
    """
    return build_chi_polynomial(rank, dim, method)


def _binomial_poly(top: Polynomial, j: int) -> Polynomial:
    """Generalized binomial coefficient binom(top, j) for polynomial top."""
    out = Polynomial.constant(1)
    for l in range(j):
        out = out * (top - l)
    return out / math.factorial(j)


def twisted_chern_polynomial(index: int, rank) -> Polynomial:
    """C_index of the twist F(t) in terms of the untwisted classes and T."""
    if not isinstance(index, int) or index < 1:
        raise ValueError(f"Chern index must be a positive integer, got {index!r}")
    _check_rank(rank)
    top_base = _rank_poly(rank)
    total = Polynomial.zero()
    for j in range(index + 1):
        binom = _binomial_poly(top_base - (index - j), j)
        term = binom * Polynomial.variable(TWIST) ** j
        if index - j > 0:
            term = term * Polynomial.variable(chern(index - j))
        total = total + term
    return total


@lru_cache(maxsize=None)
def chi_twist_polynomial(rank, dim: int) -> Polynomial:
    """The polynomial G with chi(F(t)) = G(c_1, ..., c_N, t)."""
    _check_dim(dim)
    _check_rank(rank)
    base = chi_polynomial(rank, dim)
    bindings = {chern(i): twisted_chern_polynomial(i, rank) for i in range(1, dim + 1)}
    return base.substitute(bindings)


@dataclass(frozen=True)
class ChernVector:
    """Chern classes of a rank `rank` sheaf on projective `dim`-space."""

    dim: int
    rank: int
    classes: tuple

    def __post_init__(self):
        _check_dim(self.dim)
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        classes = tuple(self.classes)
        if len(classes) != self.dim:
            raise ValueError(
                f"need exactly {self.dim} Chern classes, got {len(classes)}"
            )
        for c in classes:
            if not isinstance(c, int):
                raise ValueError(f"Chern classes must be integers, got {c!r}")
        object.__setattr__(self, "classes", classes)


def _int_binomial(m: int, j: int) -> int:
    """binom(m, j) for any integer m (product of j consecutive integers / j!)."""
    num = 1
    for l in range(j):
        num *= m - l
    return num // math.factorial(j)


def twist_chern_values(cv: ChernVector, t: int) -> ChernVector:
    """Numerically twisted Chern vector of F(t); mirrors the symbolic rule."""
    classes = (1,) + cv.classes
    twisted = []
    for i in range(1, cv.dim + 1):
        acc = 0
        for j in range(i + 1):
            acc += _int_binomial(cv.rank - i + j, j) * t**j * classes[i - j]
        twisted.append(acc)
    return ChernVector(cv.dim, cv.rank, tuple(twisted))


def evaluate_chi(cv: ChernVector, twist: int | None = None) -> Fraction:
    """Exact chi(F) (or chi(F(twist))) at a concrete Chern vector."""
    point = {chern(i): cv.classes[i - 1] for i in range(1, cv.dim + 1)}
    if twist is None:
        poly = chi_polynomial(cv.rank, cv.dim)
    else:
        if not isinstance(twist, int):
            raise ValueError(f"twist must be an integer, got {twist!r}")
        poly = chi_twist_polynomial(cv.rank, cv.dim)
        point[TWIST] = twist
    return poly.evaluate(point)


def prefactor_parts(poly: Polynomial, dim: int) -> tuple[Polynomial, Polynomial]:
    """Split a chi polynomial into (dim!-scaled bracket, rank tail).

    Returns (bracket, tail) with poly == bracket / dim! + tail, where the
    tail collects the constant and pure-rank terms.  This is the shape in
    which the polynomials are usually displayed.
    """
    _check_dim(dim)
    tail = Polynomial.constant(poly.constant_term()) + poly.coefficient(
        {RANK: 1}
    ) * Polynomial.variable(RANK)
    bracket = (poly - tail) * math.factorial(dim)
    return bracket, tail
