"""Closed-form code parameters.

Everything here is exact integer arithmetic on set sizes.  Projective
functions take the full size vector ``(d_0, ..., d_n)`` (``d_0`` never
enters a formula); affine functions take ``(d_1, ..., d_n)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

EXACT = "exact-theorem"
CONJECTURED = "conjectured"
UPPER_BOUND = "upper-bound"
TRIVIAL_ONE = "trivial-one"


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, and 0 whenever ``b < 0``, ``b > a`` or ``a < 0``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class KLDecomposition:
    k: int
    ell: int


def _split(s: int, tail: Sequence[int]) -> KLDecomposition:
    # s = sum_{i<=k} (tail_i - 1) + ell with 0 <= ell < tail_{k+1} - 1
    k, rest = 0, s
    while k < len(tail) and rest >= tail[k] - 1:
        rest -= tail[k] - 1
        k += 1
    return KLDecomposition(k, rest)


def kl_decompose(d: int, sizes: Sequence[int]) -> KLDecomposition:
    """The unique ``(k, ell)`` with ``d - 1 = sum_{i=1}^k (d_i - 1) + ell``."""
    tail = list(sizes[1:])
    top = sum(s - 1 for s in tail)
    if not 1 <= d <= top:
        raise ValueError(f"degree {d} outside 1..{top}; the distance there is 1")
    kl = _split(d - 1, tail)
    assert 0 <= kl.k <= len(tail) - 1 and 0 <= kl.ell < tail[kl.k] - 1
    assert sum(s - 1 for s in tail[:kl.k]) + kl.ell == d - 1
    return kl


def length_formula(sizes: Sequence[int]) -> int:
    tail = list(sizes[1:])
    return 1 + sum(math.prod(tail[i:]) for i in range(len(tail)))


def _alternating(nvars: int, d: int, subset_sizes: Sequence[int]) -> int:
    # sum_k (-1)^k sum_{|T|=k} C(nvars + d - S_T, d - S_T)
    total = 0
    for k in range(len(subset_sizes) + 1):
        sign = -1 if k % 2 else 1
        for T in itertools.combinations(subset_sizes, k):
            s = sum(T)
            total += sign * binomial(nvars + d - s, d - s)
    return total


def dimension_formula(sizes: Sequence[int], d: int) -> int:
    """Hilbert function of the projective nested cartesian set at degree d."""
    if d < 0:
        return 0
    tail = list(sizes[1:])
    n = len(tail)
    total = 1
    for j in range(1, n + 1):
        # index subsets of {n+1-j, ..., n}: the last j entries of the tail
        total += _alternating(j, d - 1, tail[n - j:])
    return total


def footprint_count_formula(sizes: Sequence[int], d: int) -> int:
    """Inclusion-exclusion count of degree-d monomials outside the leading-term ideal."""
    if d < 0:
        return 0
    tail = list(sizes[1:])
    n = len(tail)
    total = binomial(n + d, n)
    for k in range(1, n + 1):
        sign = -1 if k % 2 else 1
        if k == n:
            total += sign * binomial(n + d - (sum(tail) + 1), n)
            continue
        for J in itertools.combinations(range(1, n + 1), k):
            s = sum(tail[j - 1] for j in J)
            j1 = J[0]
            total += sign * (binomial(n + d - s, n) - binomial(n - j1 + d - s, n - j1))
    return total


def affine_dimension(sizes: Sequence[int], d: int) -> int:
    """Dimension of the affine cartesian code on a product with these sizes."""
    sizes = list(sizes)
    if d < 0:
        return 0
    if d >= sum(s - 1 for s in sizes):
        return math.prod(sizes)
    return _alternating(len(sizes), d, sizes)


def affine_min_distance(sizes: Sequence[int], d: int) -> int:
    """Minimum distance of the affine cartesian code (sizes nondecreasing)."""
    sizes = list(sizes)
    if d >= sum(s - 1 for s in sizes):
        return 1
    kl = _split(max(d, 0), sizes)
    return (sizes[kl.k] - kl.ell) * math.prod(sizes[kl.k + 1:])


def min_product(sizes: Sequence[int], s: int) -> int:
    """``min prod (d_i - a_i)`` over ``0 <= a_i < d_i`` with ``sum a_i <= s``."""
    sizes = list(sizes)
    top = sum(x - 1 for x in sizes)
    if not 0 <= s <= top:
        raise ValueError(f"s={s} outside 0..{top}")
    if s == top:
        return 1
    kl = _split(s, sizes)
    return (sizes[kl.k] - kl.ell) * math.prod(sizes[kl.k + 1:])


@dataclass(frozen=True)
class DistanceResult:
    value: int
    status: str

    @property
    def proven_upper_bound(self) -> bool:
        # the witness polynomial attains this weight for every nested spec
        return True


def projective_min_distance(sizes: Sequence[int], d: int,
                            classification=None) -> DistanceResult:
    """Exact for towers of subfields, otherwise the conjectured value.

    The value is always attained by a codeword, so it is a proven upper
    bound in every case.  At ``d = 0`` the code is spanned by the all-ones
    word and the distance is the length.
    """
    if d < 0:
        raise ValueError(f"minimum distance formula needs d >= 0, got {d}")
    if d == 0:
        return DistanceResult(length_formula(sizes), EXACT)
    tail = list(sizes[1:])
    if d > sum(s - 1 for s in tail):
        return DistanceResult(1, TRIVIAL_ONE)
    kl = kl_decompose(d, sizes)
    value = (tail[kl.k] - kl.ell) * math.prod(tail[kl.k + 1:])
    exact = classification is not None and getattr(
        classification, "is_product_of_fields", classification == "product_of_fields")
    return DistanceResult(value, EXACT if exact else CONJECTURED)


def prm_parameters(n: int, q: int, d: int) -> tuple[int, int, int]:
    """``(length, dimension, distance)`` of the projective Reed-Muller code."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    length = (q ** (n + 1) - 1) // (q - 1)
    dim = sum((-1) ** k * binomial(j, k) * binomial(j + d - 1 - k * q, d - 1 - k * q)
              for j in range(n + 1) for k in range(j + 1))
    if d == 1:
        dist = q ** n
    elif d <= n * (q - 1):
        # d = 1 + k(q-1) + ell with 1 <= ell <= q-1
        k, ell = divmod(d - 2, q - 1)
        ell += 1
        dist = (q - ell) * q ** (n - k - 1)
    else:
        dist = 1
    return length, dim, dist
