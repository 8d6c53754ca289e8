"""Arithmetic progressions that enumerate the odd composite numbers.

Every odd composite m factors as m = d * q with d and q odd and
3 <= d <= q.  Fixing d = 2n + 1 and letting q run over the odd values
>= d yields, for each row index n >= 1, the arithmetic progression

    t(n, r) = (2n + 1)^2 + 2 (r - 1)(2n + 1),   r = 1, 2, 3, ...

i.e. row n of the multiplication table of odd numbers >= 3.  It starts at
the odd square (2n + 1)^2 and advances in steps of 2 (2n + 1); together
the rows cover every odd composite at least once.  Counting how often the
rows hit [9, N] is the raw material for the prime counter in
:mod:`picount.counting`.

All arithmetic here is exact integer arithmetic.  Square roots go through
:func:`math.isqrt`; a floating-point sqrt would misplace ``n_max`` near
perfect squares.  Python integers are unbounded, so no intermediate can
overflow or wrap.  Everything in this module is pure and safe to call
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

__all__ = ["ApSpec", "ap_count", "ap_term", "isqrt", "n_max"]


def ap_term(n: int, r: int) -> int:
    """Return the r-th term of row n: (2n+1)^2 + 2(r-1)(2n+1).

    Equal to the difference of squares (2n+r)^2 - (r-1)^2, and always an
    odd composite.  Requires n >= 1 and r >= 1.
    """
    if n < 1:
        raise ValueError(f"row index n must be >= 1, got {n}")
    if r < 1:
        raise ValueError(f"term index r must be >= 1, got {r}")
    odd = 2 * n + 1
    return odd * odd + 2 * (r - 1) * odd


def n_max(limit: int) -> int:
    """Largest row index whose progression can start at or below ``limit``.

    Equals floor((sqrt(limit) - 1) / 2), computed exactly: row n starts at
    (2n+1)^2, so rows beyond this index contribute nothing below ``limit``.
    Requires limit >= 2; returns 0 when limit < 9 (no row starts that low).
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    return (isqrt(limit) - 1) // 2


def ap_count(n: int, limit: int) -> int:
    """Number of terms of row n that are <= limit.

    floor((limit - (2n+1)^2) / (2(2n+1))) + 1 when the row starts at or
    below ``limit``, else 0 (the clamp makes the function total instead of
    returning a negative floor for rows that start above ``limit``).
    """
    if n < 1:
        raise ValueError(f"row index n must be >= 1, got {n}")
    odd = 2 * n + 1
    start = odd * odd
    if start > limit:
        return 0
    return (limit - start) // (2 * odd) + 1


@dataclass(frozen=True, slots=True)
class ApSpec:
    """One odd-composite progression: row ``n`` starting at ``first_term``.

    ``first_term`` is the odd square (2n+1)^2 and ``step`` is 2(2n+1).
    """

    n: int
    first_term: int
    step: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"row index n must be >= 1, got {self.n}")
        odd = 2 * self.n + 1
        if self.first_term != odd * odd or self.step != 2 * odd:
            raise ValueError(
                f"inconsistent spec for row {self.n}: expected "
                f"first_term={odd * odd}, step={2 * odd}"
            )

    @classmethod
    def from_index(cls, n: int) -> "ApSpec":
        if n < 1:
            raise ValueError(f"row index n must be >= 1, got {n}")
        odd = 2 * n + 1
        return cls(n=n, first_term=odd * odd, step=2 * odd)

    def term(self, r: int) -> int:
        return ap_term(self.n, r)

    def count_upto(self, limit: int) -> int:
        return ap_count(self.n, limit)
