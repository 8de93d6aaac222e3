"""Small integer combinatorics shared by the closed-form sums."""
from __future__ import annotations

from math import comb, factorial
from typing import Iterator, Optional, Sequence, Tuple


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """``n! / prod(p!)`` when the parts are nonnegative and sum to ``n``, else 0."""
    if any(p < 0 for p in parts) or sum(parts) != n:
        return 0
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def compositions(
    total: int,
    parts: int,
    lower: int = 0,
    upper: Optional[Sequence[int]] = None,
) -> Iterator[Tuple[int, ...]]:
    """Tuples of ``parts`` integers >= ``lower`` summing to ``total``.

    ``upper`` optionally bounds each entry from above.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < parts * lower:
        return
    hi = total - (parts - 1) * lower
    if upper is not None:
        hi = min(hi, upper[0])
    if parts == 1:
        if lower <= total <= hi:
            yield (total,)
        return
    rest_upper = upper[1:] if upper is not None else None
    for first in range(lower, hi + 1):
        for rest in compositions(total - first, parts - 1, lower, rest_upper):
            yield (first,) + rest
