"""Monomials of F2[x1..xk]: weight vectors, orders, spikes, enumeration.

A monomial is a plain tuple of k non-negative exponents.  A weight vector is
a tuple of non-negative integers with trailing zeros removed; entry i counts
the variables whose exponent has bit i-1 set.  Both are compared in the left
lexicographical order (tuple comparison, which agrees with zero-padding for
normalized vectors).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple

from hitprob.errors import CapacityError

Monomial = Tuple[int, ...]
WeightVector = Tuple[int, ...]

MAX_VARS = 6
EXPONENT_BITS = 16
MAX_EXPONENT = (1 << EXPONENT_BITS) - 1


def check_monomial(m: Sequence[int]) -> Monomial:
    """Validate and canonicalize a monomial given as an exponent sequence."""
    m = tuple(m)
    if not 1 <= len(m) <= MAX_VARS:
        raise ValueError(f"variable count {len(m)} outside [1, {MAX_VARS}]")
    for a in m:
        if a < 0:
            raise ValueError(f"negative exponent {a}")
        if a > MAX_EXPONENT:
            raise CapacityError(f"exponent {a} exceeds {EXPONENT_BITS}-bit bound")
    return m


def degree(m: Monomial) -> int:
    return sum(m)


def weight_vector(m: Monomial) -> WeightVector:
    """Entry i (1-based) counts exponents with dyadic digit i-1 equal to 1."""
    w = []
    exps = list(m)
    while any(exps):
        w.append(sum(a & 1 for a in exps))
        exps = [a >> 1 for a in exps]
    return tuple(w)


def exponent_vector(m: Monomial) -> Tuple[int, ...]:
    return tuple(m)


def normalize_weight(entries: Sequence[int]) -> WeightVector:
    """Strip trailing zeros; reject negative entries."""
    w = list(entries)
    if any(e < 0 for e in w):
        raise ValueError("weight entries must be non-negative")
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


def weight_degree(w: Sequence[int]) -> int:
    return sum(e << i for i, e in enumerate(w))


def weight_to_run_length(w: Sequence[int]) -> Tuple[Tuple[int, int], ...]:
    """(value, repeat) runs, e.g. (3,3,2,2,2,1) -> ((3,2),(2,3),(1,1))."""
    runs = []
    for e in normalize_weight(w):
        if runs and runs[-1][0] == e:
            runs[-1][1] += 1
        else:
            runs.append([e, 1])
    return tuple((v, c) for v, c in runs)


def weight_from_run_length(runs: Sequence[Tuple[int, int]]) -> WeightVector:
    flat = []
    for value, count in runs:
        flat.extend([value] * count)
    return normalize_weight(flat)


def omega_kb(k: int, b: int) -> WeightVector:
    """((k-1)^(b)): the top weight vector of degree (k-1)(2^b - 1)."""
    return normalize_weight([k - 1] * b)


def omega_bar_kb(k: int, b: int) -> WeightVector:
    """((k-1)^(b-1), k-3, 1)."""
    if b < 1:
        raise ValueError("b must be positive")
    return normalize_weight([k - 1] * (b - 1) + [k - 3, 1])


def sort_key(m: Monomial) -> Tuple[WeightVector, Tuple[int, ...]]:
    """Total-order key: weight vector first, then exponent vector, left-lex."""
    return (weight_vector(m), tuple(m))


def compare_monomials(x: Monomial, y: Monomial) -> int:
    """-1, 0 or 1 for x < y, x = y, x > y in the (weight, exponent) order."""
    if len(x) != len(y):
        raise ValueError("cannot compare monomials with different variable counts")
    if degree(x) != degree(y):
        raise ValueError("cannot compare monomials of different degrees")
    kx, ky = sort_key(x), sort_key(y)
    return (kx > ky) - (kx < ky)


@lru_cache(maxsize=None)
def mu(n: int) -> int:
    """Least r with n a sum of r numbers of the form 2^d - 1, d >= 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 0
    best = None
    d = 1
    while (1 << d) - 1 <= n:
        cand = 1 + mu(n - ((1 << d) - 1))
        if best is None or cand < best:
            best = cand
        d += 1
    return best


def is_spike(m: Monomial) -> bool:
    """True iff every exponent is 2^d - 1 for some d >= 0."""
    return all(a & (a + 1) == 0 for a in m)


def minimal_spike(k: int, n: int) -> Optional[Monomial]:
    """The unique spike x1^(2^d1-1)...xr^(2^dr-1), d1 > ... > d_{r-1} >= dr > 0.

    Returns None when mu(n) > k (no spike of degree n fits in k variables).
    """
    if n == 0:
        return (0,) * k
    r = mu(n)
    if r > k:
        return None

    def search(remaining: int, terms_left: int, d_max: int) -> Optional[list]:
        if terms_left == 0:
            return [] if remaining == 0 else None
        for d in range(d_max, 0, -1):
            v = (1 << d) - 1
            if v > remaining:
                continue
            # all but the last step must strictly decrease; the last two may tie
            if terms_left >= 2:
                tail = search(remaining - v, terms_left - 1, d if terms_left == 2 else d - 1)
            else:
                tail = [] if remaining == v else None
            if tail is not None:
                return [v] + tail
        return None

    exps = search(n, r, n.bit_length())
    if exps is None:
        return None
    return tuple(exps) + (0,) * (k - r)


def monomial_count(k: int, n: int) -> int:
    return math.comb(n + k - 1, k - 1)


def iter_compositions(k: int, n: int) -> Iterator[Monomial]:
    """All exponent tuples of length k summing to n (no particular order)."""
    if n > MAX_EXPONENT:
        raise CapacityError(f"degree {n} exceeds the {EXPONENT_BITS}-bit exponent bound")
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in iter_compositions(k - 1, n - first):
            yield (first,) + rest


class DegreeContext:
    """The degree-n slice of F2[x1..xk], sorted descending in the total order.

    Provides the rank/unrank bijection between monomials and [0, C(n+k-1,k-1)).
    Column/index 0 is the largest monomial.
    """

    def __init__(self, k: int, n: int):
        if not 1 <= k <= MAX_VARS:
            raise ValueError(f"k={k} outside [1, {MAX_VARS}]")
        if n < 0:
            raise ValueError("degree must be non-negative")
        self.k = k
        self.n = n
        self.count = monomial_count(k, n)
        self._monomials: Optional[list] = None
        self._index: Optional[dict] = None

    @property
    def monomials(self) -> list:
        if self._monomials is None:
            ms = list(iter_compositions(self.k, self.n))
            ms.sort(key=sort_key, reverse=True)
            self._monomials = ms
        return self._monomials

    def index(self, m: Monomial) -> int:
        if self._index is None:
            self._index = {m: i for i, m in enumerate(self.monomials)}
        return self._index[m]

    def monomial(self, i: int) -> Monomial:
        return self.monomials[i]

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def __len__(self) -> int:
        return self.count


_CTX_CACHE: dict = {}


def degree_context(k: int, n: int) -> DegreeContext:
    """Shared, memoized DegreeContext."""
    key = (k, n)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = _CTX_CACHE[key] = DegreeContext(k, n)
    return ctx


def enumerate_monomials(ctx: DegreeContext) -> Iterator[Monomial]:
    """Every degree-n monomial exactly once, strictly descending."""
    return iter(ctx)


def format_monomial(m: Monomial) -> str:
    return " ".join(str(a) for a in m)


def parse_monomial(text: str) -> Monomial:
    return check_monomial(int(tok) for tok in text.split())


def format_weight(w: WeightVector) -> str:
    return ",".join(str(e) for e in w)


def parse_weight(text: str) -> WeightVector:
    text = text.strip()
    if not text:
        return ()
    return normalize_weight([int(tok) for tok in text.split(",")])
