"""Base number fields and prime-ideal counting.

Supports the rational field and real/imaginary quadratic fields Q(sqrt(d)).
Prime ideals are carried only through their norms and residue degrees:
a rational prime p either splits (two ideals of norm p), stays inert
(one ideal of norm p^2) or ramifies (one ideal of norm p), decided by the
Kronecker symbol of the field discriminant.  This is exactly the data the
dyadic sieve sums and the short-interval counts need.

The rational prime table is produced by a segmented sieve of Eratosthenes
(working memory O(sqrt(limit) + segment)) and cached; all queries against
it are pure and cheap (binary search).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ArgumentError, ResourceError

#: Largest norm the sieve will serve by default.  Callers may raise this
#: per call; it exists so a typo'd exponent fails fast instead of eating RAM.
DEFAULT_CAPACITY = 10**7

_SEGMENT = 1 << 20


@dataclass(frozen=True)
class NumberField:
    """The rational field (degree 1) or a quadratic field Q(sqrt(d))."""

    d: int | None = None  # None for Q; squarefree, != 0, 1 otherwise

    def __post_init__(self):
        if self.d is not None:
            if self.d in (0, 1):
                raise ArgumentError(f"d={self.d} does not define a quadratic field")
            if not _is_squarefree(self.d):
                raise ArgumentError(f"d={self.d} is not squarefree")

    @property
    def degree(self) -> int:
        return 1 if self.d is None else 2

    @property
    def discriminant(self) -> int:
        if self.d is None:
            return 1
        return self.d if self.d % 4 == 1 else 4 * self.d

    def __repr__(self):
        return "Q" if self.d is None else f"Q(sqrt({self.d}))"


RATIONALS = NumberField()


def quadratic(d: int) -> NumberField:
    return NumberField(d)


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    """A prime ideal, carried through (norm, residue data) only."""

    norm: int
    p: int  # residue characteristic
    f: int  # residue degree, norm == p**f
    ramified: bool = False
    tag: int = 0  # distinguishes the two ideals above a split prime

    def __post_init__(self):
        if self.norm != self.p**self.f:
            raise ArgumentError(f"norm {self.norm} != {self.p}^{self.f}")

    def __repr__(self):
        extra = ", ramified" if self.ramified else ""
        return f"PrimeIdeal(norm={self.norm}, p={self.p}, f={self.f}{extra})"


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


# ---------------------------------------------------------------------------
# rational primes: segmented sieve
# ---------------------------------------------------------------------------

def _simple_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


@lru_cache(maxsize=8)
def rational_primes(limit: int) -> np.ndarray:
    """All primes <= limit, ascending.  Cached; treat the array as read-only."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    base = _simple_sieve(math.isqrt(limit))
    chunks = []
    lo = 2
    while lo <= limit:
        hi = min(lo + _SEGMENT, limit + 1)  # exclusive
        mask = np.ones(hi - lo, dtype=bool)
        for p in base:
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start < hi:
                mask[start - lo :: p] = False
        if lo <= 1:
            mask[: 2 - lo] = False
        chunks.append(np.flatnonzero(mask) + lo)
        lo = hi
    out = np.concatenate(chunks).astype(np.int64)
    out.setflags(write=False)
    return out


def _check_capacity(hi: float, capacity: int):
    if hi > capacity:
        raise ResourceError(
            f"requested norms up to {hi:g} exceed the sieve capacity {capacity}; "
            "raise `capacity` explicitly if this is intentional"
        )


# ---------------------------------------------------------------------------
# Kronecker symbol
# ---------------------------------------------------------------------------

def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for arbitrary integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    # factor out twos of n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    # Jacobi symbol (a|n), n odd positive
    a %= n
    result = sign
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@lru_cache(maxsize=32)
def _chi_table(disc: int) -> np.ndarray:
    """(disc|.) tabulated over residues mod |disc| (disc fundamental)."""
    m = abs(disc)
    return np.array([kronecker(disc, r) for r in range(m)], dtype=np.int8)


def splitting_symbols(field: NumberField, primes: np.ndarray) -> np.ndarray:
    """Kronecker symbol of the field discriminant at each prime:
    +1 split, -1 inert, 0 ramified.  For Q every prime reads +1."""
    if field.d is None:
        return np.ones(len(primes), dtype=np.int8)
    disc = field.discriminant
    table = _chi_table(disc)
    return table[np.asarray(primes) % abs(disc)]


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def primes_in_norm_range(
    field: NumberField, lo: int, hi: int, capacity: int = DEFAULT_CAPACITY
) -> list[PrimeIdeal]:
    """Prime ideals of the field with lo <= norm <= hi, sorted by (norm, p).

    Split rational primes yield two distinct ideals of the same norm.
    """
    if lo > hi:
        raise ArgumentError(f"empty norm range: lo={lo} > hi={hi}")
    if lo < 2:
        raise ArgumentError(f"lo must be >= 2, got {lo}")
    _check_capacity(hi, capacity)

    out: list[PrimeIdeal] = []
    if field.d is None:
        ps = rational_primes(hi)
        for p in ps[np.searchsorted(ps, lo) :]:
            out.append(PrimeIdeal(int(p), int(p), 1))
        return out

    ps = rational_primes(hi)
    sym = splitting_symbols(field, ps)
    for p, s in zip(ps, sym):
        p = int(p)
        if s == 0 and lo <= p <= hi:
            out.append(PrimeIdeal(p, p, 1, ramified=True))
        elif s == 1 and lo <= p <= hi:
            out.append(PrimeIdeal(p, p, 1, tag=0))
            out.append(PrimeIdeal(p, p, 1, tag=1))
        elif s == -1 and lo <= p * p <= hi:
            out.append(PrimeIdeal(p * p, p, 2))
    out.sort(key=lambda q: (q.norm, q.p, q.tag))
    return out


def prime_count(field: NumberField, x: float, capacity: int = DEFAULT_CAPACITY) -> int:
    """pi_F(x) = #{prime ideals of norm <= x}, split primes counted twice."""
    if x < 0:
        raise ArgumentError(f"x must be >= 0, got {x}")
    if x < 2:
        return 0
    _check_capacity(x, capacity)
    xf = math.floor(x)
    ps = rational_primes(xf)
    if field.d is None:
        return int(np.searchsorted(ps, xf, side="right"))
    sym = splitting_symbols(field, ps)
    n_split = int(np.count_nonzero(sym == 1))
    n_ram = int(np.count_nonzero(sym == 0))
    inert_ps = ps[: np.searchsorted(ps, math.isqrt(xf), side="right")]
    n_inert = int(np.count_nonzero(splitting_symbols(field, inert_ps) == -1))
    return 2 * n_split + n_ram + n_inert


def brun_titchmarsh_margin(
    field: NumberField, x: float, y: float, capacity: int = DEFAULT_CAPACITY
) -> dict:
    """Short-interval prime-ideal count against the bound 4*[F:Q]*y/log(y).

    Hypotheses 2 <= y <= x are those of the inequality being checked and
    are enforced, not patched.
    """
    if not (2 <= y <= x):
        raise ArgumentError(f"need 2 <= y <= x, got x={x}, y={y}")
    count = prime_count(field, x + y, capacity) - prime_count(field, x, capacity)
    bound = 4 * field.degree * y / math.log(y)
    return {"count": count, "bound": bound, "satisfied": count <= bound}
