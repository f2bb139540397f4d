"""Coprimality of chain counts to a prime p, and counting by rank.

A word's chain count is coprime to p exactly when the word splits into a
prefix of rank n mod p followed by segments of rank exactly p, with every
segment boundary falling between digits.  The count C_p(n) of such words
is determined by the counts at ranks 0..p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Word, enumerate_rank, rank
from .fstat import f_mod

ENUMERATION_MAX_RANK = 24

# deterministic Miller-Rabin witness set, sound far beyond 2^64
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(p: int) -> bool:
    """Deterministic primality test for the moduli used here."""
    if p < 2:
        return False
    for q in _WITNESSES:
        if p % q == 0:
            return p == q
    d = p - 1
    s = ((d & -d)).bit_length() - 1
    d >>= s
    for a in _WITNESSES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _check_rank_guard(n: int) -> None:
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if n > ENUMERATION_MAX_RANK:
        raise ValueError(f"rank {n} exceeds the enumeration guard of {ENUMERATION_MAX_RANK}")


def is_coprime_direct(w: Word, p: int) -> bool:
    """True iff the chain count of w is not a multiple of p."""
    _check_prime(p)
    return f_mod(w, p) != 0


def is_coprime_structural(w: Word, p: int) -> bool:
    """Coprimality read off the digits, no arithmetic on chain counts.

    Requires cut points at cumulative ranks n mod p, n mod p + p, ..., n;
    each must land on a digit boundary (a 2 straddling a cut kills the
    split).  The prefix before the first cut is the only part allowed a
    rank below p.
    """
    _check_prime(p)
    n = rank(w)
    boundaries = {0}
    acc = 0
    for x in w:
        acc += x
        boundaries.add(acc)
    return all(c in boundaries for c in range(n % p, n + 1, p))


@dataclass(frozen=True)
class CoprimeCount:
    p: int
    n: int
    count: int


@lru_cache(maxsize=None)
def _base_counts(p: int) -> tuple[int, ...]:
    """Counts of coprime-to-p words at ranks 0..p, by enumeration."""
    return tuple(
        sum(1 for w in enumerate_rank(n) if f_mod(w, p) != 0) for n in range(p + 1)
    )


def coprime_count(p: int, n: int, method: str = "closed") -> CoprimeCount:
    """Number of rank-n words whose chain count is coprime to p.

    method="closed" evaluates base^m * base[r] with n = p*m + r from the
    enumerated counts at ranks 0..p, and works at any rank; method="enum"
    counts words one by one under the rank guard.
    """
    _check_prime(p)
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if method == "enum":
        _check_rank_guard(n)
        count = sum(1 for w in enumerate_rank(n) if f_mod(w, p) != 0)
    elif method == "closed":
        base = _base_counts(p)
        m, r = divmod(n, p)
        count = base[p] ** m * base[r]
    else:
        raise ValueError(f"method must be 'closed' or 'enum', got {method!r}")
    return CoprimeCount(p, n, count)


def coprime_table(p: int, max_n: int) -> list[tuple[int, int, int, bool]]:
    """Rows (n, enumerated count, closed-form count, agree) for n <= max_n."""
    _check_rank_guard(max_n)
    table = []
    for n in range(max_n + 1):
        enum = coprime_count(p, n, method="enum").count
        closed = coprime_count(p, n, method="closed").count
        table.append((n, enum, closed, enum == closed))
    return table


def residue_distribution_mod_p(n: int, p: int) -> dict[int, int]:
    """Counts of nonzero chain-count residues mod an odd prime over rank n.

    Reporting only: unlike the power-of-two case these need not flatten
    out, and no verdict is attached.
    """
    _check_prime(p)
    if p == 2:
        raise ValueError("p must be an odd prime; modulus 2 is covered by the power-of-two histograms")
    _check_rank_guard(n)
    counts = dict.fromkeys(range(1, p), 0)
    for w in enumerate_rank(n):
        r = f_mod(w, p)
        if r:
            counts[r] += 1
    return counts
