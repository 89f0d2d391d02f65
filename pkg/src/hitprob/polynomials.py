"""Polynomials over F2 as finite sets of monomials.

Addition is symmetric difference of term sets; multiplication distributes
with exponent addition mod-2 coefficient bookkeeping.  Substitution is the
algebra homomorphism determined by images of the variables, with powers
expanded along dyadic digits (Frobenius: squaring a polynomial over F2 just
doubles every exponent).
"""

from __future__ import annotations

import json
from typing import Iterable, List, Sequence, Tuple

from hitprob.errors import ArityError, CapacityError
from hitprob.monomials import (
    MAX_EXPONENT,
    Monomial,
    check_monomial,
    format_monomial,
    parse_monomial,
    sort_key,
)


def _xor_terms(terms: Iterable[Monomial]) -> frozenset:
    acc: set = set()
    for t in terms:
        if t in acc:
            acc.discard(t)
        else:
            acc.add(t)
    return frozenset(acc)


class Polynomial:
    """An element of F2[x1..xk], stored as a frozenset of exponent tuples."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Iterable[Sequence[int]] = (), _validated: bool = False):
        self.k = k
        if _validated:
            self.terms = frozenset(terms)  # type: frozenset
        else:
            checked = []
            for t in terms:
                t = check_monomial(t)
                if len(t) != k:
                    raise ArityError(f"term of arity {len(t)} in P_{k}")
                checked.append(t)
            self.terms = _xor_terms(checked)

    @classmethod
    def zero(cls, k: int) -> "Polynomial":
        return cls(k, (), _validated=True)

    @classmethod
    def one(cls, k: int) -> "Polynomial":
        return cls(k, [(0,) * k], _validated=True)

    @classmethod
    def monomial(cls, exps: Sequence[int]) -> "Polynomial":
        m = check_monomial(exps)
        return cls(len(m), [m], _validated=True)

    @classmethod
    def variable(cls, j: int, k: int) -> "Polynomial":
        """x_j in P_k, 1-based."""
        if not 1 <= j <= k:
            raise ValueError(f"variable index {j} outside [1, {k}]")
        exps = [0] * k
        exps[j - 1] = 1
        return cls(k, [tuple(exps)], _validated=True)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {sum(t) for t in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Degree of a homogeneous polynomial (-1 for zero)."""
        degs = {sum(t) for t in self.terms}
        if not degs:
            return -1
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def sorted_terms(self) -> List[Monomial]:
        """Terms in descending (weight, exponent) order, higher degree first."""
        return sorted(self.terms, key=lambda t: (sum(t),) + sort_key(t), reverse=True)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.k != other.k:
            raise ArityError(f"cannot add P_{self.k} and P_{other.k} elements")
        return Polynomial(self.k, self.terms ^ other.terms, _validated=True)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.k != other.k:
            raise ArityError(f"cannot multiply P_{self.k} and P_{other.k} elements")
        acc: set = set()
        for s in self.terms:
            for t in other.terms:
                prod = tuple(a + b for a, b in zip(s, t))
                if prod in acc:
                    acc.discard(prod)
                else:
                    acc.add(prod)
        for term in acc:
            for a in term:
                if a > MAX_EXPONENT:
                    raise CapacityError(f"exponent {a} overflows in product")
        return Polynomial(self.k, acc, _validated=True)

    def square(self) -> "Polynomial":
        """Frobenius: over F2, (sum of terms)^2 doubles every exponent."""
        terms = [tuple(2 * a for a in t) for t in self.terms]
        for term in terms:
            for a in term:
                if a > MAX_EXPONENT:
                    raise CapacityError(f"exponent {a} overflows in square")
        return Polynomial(self.k, terms, _validated=True)

    def substitute(self, images: Sequence["Polynomial"], target_k: int) -> "Polynomial":
        """Apply the algebra homomorphism x_j -> images[j-1] into P_target_k."""
        if len(images) != self.k:
            raise ArityError(f"expected {self.k} images, got {len(images)}")
        for g in images:
            if g.k != target_k:
                raise ArityError("image arity does not match target ring")
        # cache dyadic powers images[j]^(2^i)
        powers: List[List[Polynomial]] = [[g] for g in images]
        result = Polynomial.zero(target_k)
        for term in self.terms:
            factor = Polynomial.one(target_k)
            for j, a in enumerate(term):
                bit = 0
                while a:
                    while len(powers[j]) <= bit:
                        powers[j].append(powers[j][-1].square())
                    if a & 1:
                        factor = factor * powers[j][bit]
                    a >>= 1
                    bit += 1
            result = result + factor
        return result

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.k, self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"Polynomial(k={self.k}, 0)"
        body = " + ".join(format_monomial(t) for t in self.sorted_terms())
        return f"Polynomial(k={self.k}, [{body}])"

    # -- text / JSON forms ------------------------------------------------

    def to_text(self) -> str:
        """One monomial per line (space-separated exponents)."""
        return "\n".join(format_monomial(t) for t in self.sorted_terms())

    @classmethod
    def from_text(cls, text: str, k: int = 0) -> "Polynomial":
        """Parse one monomial per line; a blank line terminates."""
        terms = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                break
            terms.append(parse_monomial(line))
        if not terms and k <= 0:
            raise ValueError("cannot infer arity of an empty polynomial")
        arity = k if k > 0 else len(terms[0])
        return cls(arity, terms)

    def to_json(self) -> str:
        return json.dumps([list(t) for t in self.sorted_terms()])

    @classmethod
    def from_json(cls, text: str, k: int = 0) -> "Polynomial":
        data = json.loads(text)
        terms = [tuple(int(a) for a in row) for row in data]
        if not terms and k <= 0:
            raise ValueError("cannot infer arity of an empty polynomial")
        arity = k if k > 0 else len(terms[0])
        return cls(arity, terms)
