"""Stirling numbers of the first kind and factorial polynomials.

The unsigned number [N, m] counts permutations of N elements with exactly
m cycles.  The whole module works from the triangle recurrence

    [N, m] = [N-1, m-1] + (N-1) * [N-1, m]

with [0, 0] = 1 and zero outside 0 <= m <= N.  The signed variant is
s(N, m) = (-1)^(N-m) [N, m], the coefficients of the falling factorial.
"""

from __future__ import annotations

import math
import threading

from .algebra import AUX, Polynomial


class StirlingTable:
    """Memoized triangle of unsigned Stirling numbers of the first kind.

    Rows are built on demand and kept forever; filling is guarded by a
    lock so concurrent lookups stay consistent.
    """

    def __init__(self):
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def ensure_rows(self, n: int) -> None:
        """Make sure rows 0..n are filled."""
        if n < len(self._rows):
            return
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                size = len(self._rows)
                row = [0] * (size + 1)
                for m in range(size + 1):
                    term = prev[m - 1] if m >= 1 else 0
                    if m < size:
                        term += (size - 1) * prev[m]
                    row[m] = term
                self._rows.append(tuple(row))

    def unsigned(self, n: int, m: int) -> int:
        if n < 0 or m < 0 or m > n:
            return 0
        self.ensure_rows(n)
        return self._rows[n][m]

    def signed(self, n: int, m: int) -> int:
        value = self.unsigned(n, m)
        return -value if (n - m) % 2 else value

    def row(self, n: int, signed: bool = False) -> tuple[int, ...]:
        if n < 0:
            raise ValueError(f"row index must be nonnegative, got {n}")
        self.ensure_rows(n)
        if not signed:
            return self._rows[n]
        return tuple(self.signed(n, m) for m in range(n + 1))


_TABLE = StirlingTable()


def unsigned_stirling1(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind [n, m]."""
    return _TABLE.unsigned(n, m)


def signed_stirling1(n: int, m: int) -> int:
    """Signed Stirling number s(n, m) = (-1)^(n-m) [n, m]."""
    return _TABLE.signed(n, m)


def rising_factorial_poly(n: int) -> Polynomial:
    """(X+1)(X+2)...(X+n) expanded in X.

    The coefficient of X^k is [n+1, k+1], which is how the whole triangle
    enters the Euler-characteristic formula.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rising factorial needs a positive length, got {n!r}")
    _TABLE.ensure_rows(n + 1)
    return Polynomial.from_terms(
        [({AUX: k}, _TABLE.unsigned(n + 1, k + 1)) for k in range(n + 1)]
    )


def falling_factorial_poly(n: int) -> Polynomial:
    """X(X-1)...(X-n+1) expanded in X; coefficients are the signed numbers."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"falling factorial needs a positive length, got {n!r}")
    _TABLE.ensure_rows(n)
    return Polynomial.from_terms(
        [({AUX: k}, _TABLE.signed(n, k)) for k in range(n + 1)]
    )


def h0_line_bundle(dim: int, degree: int) -> int:
    """Global sections of O(degree) on projective dim-space, for degree >= 0.

    Computed as the rising factorial (degree+1)...(degree+dim) over dim!,
    which is exact for any integer degree (the numerator is a product of
    dim consecutive integers); for degree >= 0 it equals the usual
    binomial count of monomials.
    """
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    num = 1
    for j in range(1, dim + 1):
        num *= degree + j
    return num // math.factorial(dim)
