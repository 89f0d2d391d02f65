"""Structural maps between P_(k-1) and P_k.

f_i inserts a fresh variable at slot i; phi_(i;I) lifts a compatible
monomial into the all-positive part of P_k; p_(i;I) merges variable x_i into
the variables indexed by I and is a map of modules over the Steenrod
algebra.  Together they transport admissible bases between variable counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from hitprob.errors import ArityError
from hitprob.monomials import Monomial
from hitprob.polynomials import Polynomial


@dataclass(frozen=True)
class IndexPair:
    """(i; I) with 1 <= i < i_1 < ... < i_r <= k for the ambient k."""

    i: int
    I: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.i < 1:
            raise ValueError("i must be at least 1")
        prev = self.i
        for s in self.I:
            if s <= prev:
                raise ValueError("I must increase strictly and exceed i")
            prev = s

    @property
    def length(self) -> int:
        return len(self.I)

    def max_index(self) -> int:
        return self.I[-1] if self.I else self.i

    @classmethod
    def parse(cls, text: str) -> "IndexPair":
        """Parse 'i;(a,b,...)' or 'i;()' or just 'i'."""
        head, _, tail = text.partition(";")
        i = int(head.strip())
        tail = tail.strip().strip("()")
        I = tuple(int(tok) for tok in tail.split(",") if tok.strip())
        return cls(i, I)

    def __str__(self) -> str:
        return f"{self.i};({','.join(str(s) for s in self.I)})"


def iter_index_pairs(
    k: int, min_len: int = 0, max_len: Optional[int] = None
) -> Iterator[IndexPair]:
    """All (i; I) for the given k, by i ascending then I length-then-lex."""
    if max_len is None:
        max_len = k - 1
    for i in range(1, k + 1):
        for r in range(min_len, max_len + 1):
            for I in combinations(range(i + 1, k + 1), r):
                yield IndexPair(i, I)


def f_monomial(i: int, x: Monomial) -> Monomial:
    """x in P_(k-1) with a zero exponent spliced in at slot i (1-based)."""
    k = len(x) + 1
    if not 1 <= i <= k:
        raise ValueError(f"i={i} outside [1, {k}]")
    return x[: i - 1] + (0,) + x[i - 1 :]


def f_i(i: int, y: Polynomial) -> Polynomial:
    """The algebra homomorphism P_(k-1) -> P_k skipping variable x_i."""
    return Polynomial(y.k + 1, (f_monomial(i, t) for t in y.terms), _validated=True)


def u_compatible(x: Monomial, pair: IndexPair, u: int) -> bool:
    """The four exponent/bit conditions; vacuous for I empty and u = 1."""
    r = pair.length
    if r == 0:
        if u != 1:
            raise ValueError("for an empty I only u = 1 is meaningful")
        return True
    if not 1 <= u <= r:
        raise ValueError(f"u={u} outside [1, {r}]")
    if pair.max_index() > len(x) + 1:
        raise ArityError("index pair does not fit the ambient variable count")
    nu = lambda j: x[j - 1]
    I = pair.I
    threshold = (1 << r) - 1
    for t in range(1, u):
        if nu(I[t - 1] - 1) != threshold:
            return False
    if nu(I[u - 1] - 1) <= threshold:
        return False
    for t in range(1, u + 1):
        if not (nu(I[u - 1] - 1) >> (r - t)) & 1:
            return False
    for t in range(u + 1, r + 1):
        if not (nu(I[t - 1] - 1) >> (r - t)) & 1:
            return False
    return True


def compatible_u(x: Monomial, pair: IndexPair) -> Optional[int]:
    """The unique u making x u-compatible with the pair, if any."""
    if pair.length == 0:
        return 1
    found = None
    for u in range(1, pair.length + 1):
        if u_compatible(x, pair, u):
            assert found is None, "u-compatibility must be unique"
            found = u
    return found


def _x_Iu(pair: IndexPair, u: int, k: int) -> Monomial:
    """The correction monomial divided out of the lift."""
    exps = [0] * k
    r = pair.length
    if r > 0:
        exps[pair.I[u - 1] - 1] = sum(1 << (r - s) for s in range(1, u + 1))
        for t in range(u + 1, r + 1):
            exps[pair.I[t - 1] - 1] = 1 << (r - t)
    return tuple(exps)


def phi(pair: IndexPair, x: Monomial) -> Optional[Monomial]:
    """Lift of x from P_(k-1) to P_k, or None when no u is compatible.

    The lift is x_i^(2^r - 1) * f_i(x) divided by the correction monomial;
    exactness of the division is guaranteed by the compatibility conditions
    and asserted.
    """
    k = len(x) + 1
    if pair.max_index() > k:
        raise ArityError("index pair does not fit the ambient variable count")
    u = compatible_u(x, pair)
    if u is None:
        return None
    r = pair.length
    lifted = list(f_monomial(pair.i, x))
    lifted[pair.i - 1] += (1 << r) - 1
    corr = _x_Iu(pair, u, k)
    out = tuple(a - b for a, b in zip(lifted, corr))
    assert all(a >= 0 for a in out), "non-exact division in the lift"
    return out


def phi_poly(pair: IndexPair, y: Polynomial) -> Polynomial:
    """Termwise linear extension of the lift (non-compatible terms drop)."""
    terms = []
    for t in y.terms:
        image = phi(pair, t)
        if image is not None:
            terms.append(image)
    return Polynomial(y.k + 1, terms)


def p(pair: IndexPair, f: Polynomial) -> Polynomial:
    """The merging homomorphism P_k -> P_(k-1): x_i maps to the sum of the
    variables indexed by I (shifted down), other variables shift past i."""
    k = f.k
    if pair.max_index() > k:
        raise ArityError("index pair does not fit the ambient variable count")
    target = k - 1
    images = []
    for j in range(1, k + 1):
        if j < pair.i:
            images.append(Polynomial.variable(j, target))
        elif j == pair.i:
            img = Polynomial.zero(target)
            for s in pair.I:
                img = img + Polynomial.variable(s - 1, target)
            images.append(img)
        else:
            images.append(Polynomial.variable(j - 1, target))
    return f.substitute(images, target)


def p_monomial(pair: IndexPair, x: Monomial) -> Polynomial:
    return p(pair, Polynomial.monomial(x))


def phi_sets(
    B: Iterable[Monomial], k: int
) -> Tuple[Set[Monomial], Set[Monomial], Set[Monomial]]:
    """(Phi0, Phi+, Phi) of a set of monomials in P_(k-1).

    Phi0 collects the variable-insertion images; Phi+ collects the nonzero
    lifts along pairs with nonempty I that land in the all-positive part.
    """
    B = list(B)
    phi0: Set[Monomial] = set()
    for i in range(1, k + 1):
        for b in B:
            phi0.add(f_monomial(i, b))
    phiplus: Set[Monomial] = set()
    for pair in iter_index_pairs(k, min_len=1):
        for b in B:
            image = phi(pair, b)
            if image is not None and 0 not in image:
                phiplus.add(image)
    return phi0, phiplus, phi0 | phiplus
