"""The hit-problem engine: admissible bases, normal forms, fast filters.

`compute_basis(k, n)` streams every Sq^(2^u) image of a degree-(n - 2^u)
monomial into one echelon basis whose columns are the degree-n monomials in
descending order.  A pivot column is the leading monomial of a hit element,
hence inadmissible; the admissible monomials are exactly the non-pivot
columns and their count is dim (QP_k)_n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

import numpy as np

from hitprob.errors import CapacityError, SingerInapplicableError
from hitprob.gf2 import EchelonBasis
from hitprob.monomials import (
    DegreeContext,
    Monomial,
    degree,
    degree_context,
    minimal_spike,
    monomial_count,
    mu,
    sort_key,
    weight_vector,
)
from hitprob.polynomials import Polynomial
from hitprob.steenrod import hit_generator_rows, sq_monomial, sq_preimages

DEFAULT_MAX_COLUMNS = 10**6
CACHE_ENV_VAR = "HITPROB_CACHE_DIR"


@dataclass
class AdmissibleBasis:
    """Admissible monomials of degree n in P_k plus the echelonized hit space."""

    k: int
    n: int
    ctx: DegreeContext
    hit_space: EchelonBasis
    admissibles: List[Monomial] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.admissibles)

    def is_admissible(self, m: Monomial) -> bool:
        return not self.hit_space.is_pivot(self.ctx.index(m))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "dim": self.dimension,
            "admissibles": [list(m) for m in self.admissibles],
        }


def _admissibles_from_pivots(ctx: DegreeContext, basis: EchelonBasis) -> List[Monomial]:
    pivots = basis.pivot_columns()
    return [m for i, m in enumerate(ctx.monomials) if i not in pivots]


def cache_dir() -> Optional[str]:
    return os.environ.get(CACHE_ENV_VAR) or None


def _cache_path(k: int, n: int) -> Optional[str]:
    d = cache_dir()
    if not d:
        return None
    return os.path.join(d, f"echelon_k{k}_n{n}.bin")


_BASIS_CACHE: dict = {}


def compute_basis(
    k: int,
    n: int,
    max_columns: int = DEFAULT_MAX_COLUMNS,
    use_cache: bool = True,
) -> AdmissibleBasis:
    """Admissible basis of (QP_k)_n by one monolithic elimination.

    Results are memoized per (k, n); with the cache directory environment
    variable set, echelon pivot rows are checkpointed to disk.
    """
    key = (k, n)
    if use_cache and key in _BASIS_CACHE:
        return _BASIS_CACHE[key]
    cols = monomial_count(k, n)
    if cols > max_columns:
        raise CapacityError(
            f"degree slice has {cols} columns > cap {max_columns}; "
            "use the weight-filtration path"
        )
    ctx = degree_context(k, n)

    path = _cache_path(k, n) if use_cache else None
    if path and os.path.exists(path):
        hit = EchelonBasis.load(path)
        if hit.column_count != cols:
            raise ValueError(f"stale checkpoint {path}")
    else:
        hit = EchelonBasis(cols)
        index = ctx.index
        words = hit.words
        one = np.uint64(1)
        for _u, _m, terms in hit_generator_rows(k, n):
            row = np.zeros(words, dtype=np.uint64)
            for t in terms:
                c = index(t)
                row[c >> 6] ^= one << np.uint64(c & 63)
            hit.insert(row)
        if path:
            os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
            hit.dump(path)

    basis = AdmissibleBasis(k, n, ctx, hit, _admissibles_from_pivots(ctx, hit))
    if use_cache:
        _BASIS_CACHE[key] = basis
    return basis


def clear_memory_cache() -> None:
    _BASIS_CACHE.clear()


def _poly_row(basis: AdmissibleBasis, f: Polynomial) -> np.ndarray:
    if f.k != basis.k:
        raise ValueError(f"polynomial in P_{f.k}, basis for P_{basis.k}")
    if not f.is_zero() and f.degree() != basis.n:
        raise ValueError(f"degree {f.degree()} does not match basis degree {basis.n}")
    return basis.hit_space.row_from_columns(basis.ctx.index(t) for t in f.terms)


def normal_form_poly(basis: AdmissibleBasis, f: Polynomial) -> Polynomial:
    """The unique representative of [f] supported on admissible monomials."""
    row = basis.hit_space.normal_form(_poly_row(basis, f))
    terms = [basis.ctx.monomial(c) for c in EchelonBasis.row_columns(row)]
    return Polynomial(basis.k, terms, _validated=True)


def is_hit(basis: AdmissibleBasis, f: Polynomial) -> bool:
    return not basis.hit_space.normal_form(_poly_row(basis, f)).any()


def singer_filter(x: Monomial) -> bool:
    """True only if the weight of x is below the minimal spike's weight,
    which certifies that x is hit (one-sided)."""
    k, n = len(x), degree(x)
    if mu(n) > k:
        raise SingerInapplicableError(f"mu({n}) > {k}: no minimal spike in P_{k}")
    z = minimal_spike(k, n)
    assert z is not None
    return weight_vector(x) < weight_vector(z)


def wood_filter(k: int, n: int) -> bool:
    """True iff mu(n) > k, which forces (QP_k)_n = 0."""
    return mu(n) > k


def split_basis(basis: AdmissibleBasis) -> Tuple[List[Monomial], List[Monomial]]:
    """(B0, B+): admissibles with some zero exponent / all positive."""
    b0 = [m for m in basis.admissibles if 0 in m]
    bplus = [m for m in basis.admissibles if 0 not in m]
    return b0, bplus


def _columns_at_or_above(ctx: DegreeContext, x: Monomial) -> List[Monomial]:
    """Monomials >= x in the total order (a prefix of the descending list)."""
    return ctx.monomials[: ctx.index(x) + 1]


def is_strictly_inadmissible(
    x: Monomial,
    max_columns: int = DEFAULT_MAX_COLUMNS,
) -> bool:
    """True iff x is a sum of strictly smaller monomials plus Sq^u images
    with 1 <= u <= 2^s - 1, s the length of the weight vector of x.

    Columns below x are dropped (they are absorbed by the smaller-monomial
    part), so only the projection of each Sq^u image onto the columns >= x
    matters; the relevant sources are found by inverting the action from the
    surviving columns.
    """
    k, n = len(x), degree(x)
    s = len(weight_vector(x))
    if s == 0:
        return False
    ctx = degree_context(k, n)
    upper = _columns_at_or_above(ctx, x)
    if len(upper) > max_columns:
        raise CapacityError(
            f"{len(upper)} columns above the candidate exceed cap {max_columns}"
        )
    col_of = {m: i for i, m in enumerate(upper)}
    ncols = len(col_of)
    u_max = (1 << s) - 1

    sources = set()
    for y in upper:
        for u in range(1, min(u_max, n) + 1):
            for m in sq_preimages(y, u):
                sources.add((u, m))

    span = EchelonBasis(ncols)
    for u, m in sorted(sources):
        cols = [col_of[t] for t in sq_monomial(u, m) if t in col_of]
        if cols:
            span.insert_columns(cols)
    return span.contains(span.row_from_columns([col_of[x]]))
