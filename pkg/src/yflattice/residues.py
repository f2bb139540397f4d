"""Residue statistics of odd-row chain counts modulo powers of two.

The chain counts over the odd words of rank n form the multiset of subset
products of {1, 3, ..., 2*(n//2) - 1}.  This module builds their histograms
mod 2^k two ways (per-subset enumeration and a bucket convolution), decides
flatness, and packages the row-threshold and one-step verdicts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

# 2^(n//2) subset products; 2^20 is still comfortable, beyond that is not
ENUMERATION_MAX_RANK = 40


def _row_factors(n: int) -> range:
    """The odd factors available in row n: 1, 3, ..., 2*(n//2) - 1."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    return range(1, 2 * (n // 2), 2)


def _check_modulus_pow(k: int) -> None:
    if k < 1:
        raise ValueError(f"modulus exponent must be at least 1, got {k}")


@dataclass
class ResidueHistogram:
    """Counts of odd residues mod a power of two; keys cover all of them."""

    modulus: int
    counts: dict[int, int]


def residue_histogram_enum(n: int, k: int) -> ResidueHistogram:
    """Histogram mod 2^k of row n's chain counts, one subset at a time.

    Walks all 2^(n//2) block-tag subsets and reduces each product as it
    goes; the slow reference path for residue_histogram_dp.
    """
    _check_modulus_pow(k)
    if n > ENUMERATION_MAX_RANK:
        raise ValueError(f"rank {n} exceeds the enumeration guard of {ENUMERATION_MAX_RANK}")
    m = 1 << k
    prods = [1]
    for c in _row_factors(n):
        prods += [p * c % m for p in prods]
    tally = Counter(prods)
    return ResidueHistogram(m, {r: tally.get(r, 0) for r in range(1, m, 2)})


def residue_histogram_dp(n: int, k: int) -> ResidueHistogram:
    """Same histogram as residue_histogram_enum, by bucket convolution.

    Folds in one factor at a time over the 2^(k-1) odd-residue buckets, so
    the cost is (n//2) * 2^(k-1) instead of 2^(n//2).
    """
    _check_modulus_pow(k)
    m = 1 << k
    half = m >> 1
    h = [0] * half
    h[0] = 1  # bucket j holds residue 2j+1
    for c in _row_factors(n):
        g = list(h)
        for j, count in enumerate(h):
            if count:
                g[((2 * j + 1) * c % m) >> 1] += count
        h = g
    return ResidueHistogram(m, {2 * j + 1: h[j] for j in range(half)})


def is_equidistributed(h: ResidueHistogram) -> bool:
    """True iff every residue class in the histogram has the same count."""
    return len(set(h.counts.values())) == 1


def multiplicative_shift(h: ResidueHistogram, c: int) -> ResidueHistogram:
    """Push the histogram forward along residue -> residue * c."""
    if c % 2 == 0:
        raise ValueError(f"shift factor must be odd, got {c}")
    m = h.modulus
    shifted = dict.fromkeys(range(1, m, 2), 0)
    for r, count in h.counts.items():
        shifted[r * c % m] += count
    return ResidueHistogram(m, shifted)


def _added(a: ResidueHistogram, b: ResidueHistogram) -> ResidueHistogram:
    if a.modulus != b.modulus:
        raise ValueError("histogram moduli differ")
    return ResidueHistogram(a.modulus, {r: count + b.counts[r] for r, count in a.counts.items()})


def _stepped(h: ResidueHistogram, n: int) -> ResidueHistogram:
    """Histogram of row n+1 from the histogram of row n.

    Even n adds no factor; odd n folds in the new factor n itself.
    """
    if n % 2 == 0:
        return h
    return _added(h, multiplicative_shift(h, n % h.modulus))


@dataclass(frozen=True)
class RowVerdict:
    n: int
    k: int
    flat: bool


def verify_main_theorem(k: int, n_extra: int) -> list[RowVerdict]:
    """Flatness verdicts mod 2^k for rows 2^(k-1)+2 through 2^(k-1)+2+n_extra.

    The first row comes from the convolution directly; later rows reuse the
    previous histogram, folding in one factor per odd step.  Every verdict
    in the report must be flat.
    """
    _check_modulus_pow(k)
    if n_extra < 0:
        raise ValueError("n_extra must be nonnegative")
    start = (1 << (k - 1)) + 2
    h = residue_histogram_dp(start, k)
    verdicts = [RowVerdict(start, k, is_equidistributed(h))]
    for n in range(start, start + n_extra):
        h = _stepped(h, n)
        verdicts.append(RowVerdict(n + 1, k, is_equidistributed(h)))
    return verdicts


@dataclass(frozen=True)
class StepVerdict:
    """One n -> n+1 comparison: flatness on both sides plus the step law.

    step_identity records whether the (n+1)-histogram equals the stepped
    n-histogram: unchanged after even n, the sum of itself and its n-shift
    after odd n.
    """

    n: int
    k: int
    flat_before: bool
    flat_after: bool
    step_identity: bool

    @property
    def implication_ok(self) -> bool:
        return self.flat_after or not self.flat_before

    @property
    def ok(self) -> bool:
        return self.implication_ok and self.step_identity


def verify_one_step(k: int, n_max: int) -> list[StepVerdict]:
    """Check every step n -> n+1 for n up to n_max, mod 2^k.

    Both rows of each step are recomputed from scratch so the step law is
    compared, not assumed.
    """
    _check_modulus_pow(k)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    verdicts = []
    h = residue_histogram_dp(0, k)
    for n in range(n_max + 1):
        succ = residue_histogram_dp(n + 1, k)
        verdicts.append(
            StepVerdict(
                n,
                k,
                flat_before=is_equidistributed(h),
                flat_after=is_equidistributed(succ),
                step_identity=succ == _stepped(h, n),
            )
        )
        h = succ
    return verdicts


def pi_multiset(n: int, strict: bool = False) -> Counter[int]:
    """Multiset of products of distinct odd factors attached to row n.

    The factors are 1, 3, ..., 2*(n//2) - 1, one subset per product, empty
    product included; as a multiset this equals f_valued_row(n).  With
    strict=True the factors are instead every odd integer <= n, a variant
    kept only for comparison: at odd n it has one factor too many and the
    row identity breaks.
    """
    if n < 0:
        raise ValueError("rank must be nonnegative")
    if n > ENUMERATION_MAX_RANK:
        raise ValueError(f"rank {n} exceeds the enumeration guard of {ENUMERATION_MAX_RANK}")
    factors = range(1, n + 1, 2) if strict else _row_factors(n)
    prods = [1]
    for c in factors:
        prods += [p * c for p in prods]
    return Counter(prods)
