"""Action of the Steenrod squares on F2[x1..xk] via the Cartan formula.

On a power, Sq^i(x^a) = C(a,i) x^(a+i) with the binomial reduced mod 2
(Lucas: odd iff the bits of i are a subset of the bits of a).  On a monomial
the square distributes over the variables, so the expansion enumerates the
ways of splitting i into per-variable parts t_j with bits(t_j) subset of
bits(a_j).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Tuple

from hitprob.errors import CapacityError
from hitprob.monomials import MAX_EXPONENT, Monomial, monomial_count, iter_compositions
from hitprob.polynomials import Polynomial


def sq_on_power(i: int, a: int) -> Tuple[int, int]:
    """(coefficient bit, resulting exponent) for Sq^i(x^a)."""
    if i < 0 or a < 0:
        raise ValueError("indices must be non-negative")
    coeff = 1 if (i & ~a) == 0 else 0
    return coeff, a + i


def sq_monomial(i: int, exps: Monomial) -> List[Monomial]:
    """Terms of Sq^i applied to a single monomial (no duplicates arise)."""
    k = len(exps)
    out: List[Monomial] = []
    acc = [0] * k

    def rec(j: int, rem: int) -> None:
        if j == k - 1:
            a = exps[j]
            if (rem & ~a) == 0:  # C(a, rem) odd
                acc[j] = a + rem
                out.append(tuple(acc))
            return
        a = exps[j]
        # subsets of bits(a), descending, capped at rem
        s = a
        while True:
            if s <= rem:
                acc[j] = a + s
                rec(j + 1, rem - s)
            if s == 0:
                break
            s = (s - 1) & a

    rec(0, i)
    return out


def sq(i: int, f: Polynomial) -> Polynomial:
    """Sq^i on a polynomial: Cartan across variables, additive over terms."""
    if i == 0:
        return f
    acc: set = set()
    for term in f.terms:
        for t in sq_monomial(i, term):
            if t in acc:
                acc.discard(t)
            else:
                acc.add(t)
    for term in acc:
        for a in term:
            if a > MAX_EXPONENT:
                raise CapacityError("exponent overflow in Steenrod action")
    return Polynomial(f.k, acc, _validated=True)


def square_powers(n: int) -> List[int]:
    """The exponents u with 1 <= 2^u <= n (indices of the spanning squares)."""
    out = []
    u = 0
    while (1 << u) <= n:
        out.append(u)
        u += 1
    return out


def hit_generator_rows(k: int, n: int) -> Iterator[Tuple[int, Monomial, List[Monomial]]]:
    """(u, source monomial m, terms of Sq^(2^u)(m)) spanning the hit subspace.

    Images of the Sq^(2^u) on all monomials of degree n - 2^u span
    (A+ P_k)_n; zero images are skipped.
    """
    if n < 1:
        return
    for u in square_powers(n):
        t = 1 << u
        for m in iter_compositions(k, n - t):
            terms = sq_monomial(t, m)
            if terms:
                yield u, m, terms


def hit_generators(k: int, n: int) -> Iterator[Polynomial]:
    """The spanning stream as polynomials (for API users; the engine streams
    raw term lists)."""
    for _u, _m, terms in hit_generator_rows(k, n):
        yield Polynomial(k, terms, _validated=True)


def hit_generator_count(k: int, n: int) -> int:
    """Number of source monomials streamed (including zero images)."""
    return sum(monomial_count(k, n - (1 << u)) for u in square_powers(n))


@lru_cache(maxsize=1 << 18)
def _preimage_splits(a: int) -> Tuple[Tuple[int, int], ...]:
    """All (t, a-t) with Sq^t(x^(a-t)) = x^a, i.e. bits(t) subset bits(a-t)."""
    return tuple((t, a - t) for t in range(a + 1) if (t & ~(a - t)) == 0)


def sq_preimages(y: Monomial, t: int) -> Iterator[Monomial]:
    """All monomials m with y a term of Sq^t(m)."""
    k = len(y)
    acc = [0] * k

    def rec(j: int, rem: int) -> Iterator[Monomial]:
        if j == k - 1:
            a = y[j]
            if rem <= a and ((rem & ~(a - rem)) == 0):
                acc[j] = a - rem
                yield tuple(acc)
            return
        for tj, mj in _preimage_splits(y[j]):
            if tj > rem:
                continue
            acc[j] = mj
            yield from rec(j + 1, rem - tj)

    yield from rec(0, t)
