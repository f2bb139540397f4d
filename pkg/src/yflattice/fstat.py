"""The f-statistic: number of saturated chains from the empty word.

Two independent routes are kept side by side.  f_recursive follows the
defining recursion (sum over the covered words) and serves as the oracle;
f_product is the O(length) production path, a hook-length analog with one
factor per 2 in the word.  f_mod evaluates the product form modulo m with
every intermediate reduced, so huge rows never touch big integers.
"""

from __future__ import annotations

from .core import Word, covers_down


def f_recursive(w: Word) -> int:
    """Chain count by the downward recursion, memoized within this call.

    The cache is local, so the function stays pure from the caller's view.
    """
    memo: dict[Word, int] = {(): 1}

    def go(u: Word) -> int:
        cached = memo.get(u)
        if cached is not None:
            return cached
        memo[u] = total = sum(go(v) for v in covers_down(u))
        return total

    return go(w)


def f_product(w: Word) -> int:
    """Chain count by the product form.

    One factor per 2: the digit sum from that 2 through the end of the
    word, minus one.  The empty product is 1.
    """
    suffix = 0
    f = 1
    for x in reversed(w):
        suffix += x
        if x == 2:
            f *= suffix - 1
    return f


def f_mod(w: Word, m: int) -> int:
    """f_product(w) reduced modulo m, with all intermediates reduced."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    suffix = 0
    f = 1
    for x in reversed(w):
        suffix += x
        if x == 2:
            f = f * (suffix - 1) % m
    return f
