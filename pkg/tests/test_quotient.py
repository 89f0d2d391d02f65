import random

import pytest

from hitprob.errors import CapacityError, SingerInapplicableError
from hitprob.gf2 import gf2_rank_dense
from hitprob.monomials import (
    degree_context,
    is_spike,
    iter_compositions,
    monomial_count,
    mu,
    weight_vector,
)
from hitprob.polynomials import Polynomial
from hitprob.quotient import (
    compute_basis,
    is_hit,
    is_strictly_inadmissible,
    normal_form_poly,
    singer_filter,
    split_basis,
    wood_filter,
)
from hitprob.steenrod import hit_generators, sq

rng = random.Random(1009)


def dim_dense_oracle(k, n):
    """Quotient dimension via a plain dense rank, no streaming echelon."""
    ctx = degree_context(k, n)
    rows = []
    for g in hit_generators(k, n):
        mask = 0
        for t in g.terms:
            mask |= 1 << ctx.index(t)
        rows.append(mask)
    return ctx.count - gf2_rank_dense(rows, ctx.count)


def test_one_variable_dimensions():
    # (QP_1)_n is spanned by x^n and x^n is hit unless n = 2^j - 1
    for n in range(0, 64):
        expected = 1 if n & (n + 1) == 0 else 0
        assert compute_basis(1, n).dimension == expected


def test_two_variable_small_slice():
    basis = compute_basis(2, 3)
    assert basis.dimension == 3
    assert set(basis.admissibles) == {(3, 0), (0, 3), (1, 2)}


def test_dimension_matches_dense_oracle():
    for k in (1, 2, 3):
        for n in range(0, 13):
            assert compute_basis(k, n).dimension == dim_dense_oracle(k, n)


def test_admissibles_are_sorted_descending():
    from hitprob.monomials import sort_key

    basis = compute_basis(3, 10)
    keys = [sort_key(m) for m in basis.admissibles]
    assert keys == sorted(keys, reverse=True)


def test_spikes_are_admissible():
    for k in (2, 3, 4):
        for n in range(1, 20):
            basis = compute_basis(k, n)
            for m in iter_compositions(k, n):
                if is_spike(m):
                    assert basis.is_admissible(m)


def test_hit_generators_are_hit():
    basis = compute_basis(3, 11)
    for g in hit_generators(3, 11):
        assert is_hit(basis, g)


def test_normal_form_properties():
    basis = compute_basis(3, 9)
    pool = list(iter_compositions(3, 9))
    for _ in range(25):
        f = Polynomial(3, rng.sample(pool, 4))
        nf = normal_form_poly(basis, f)
        # supported on admissibles only
        assert all(basis.is_admissible(t) for t in nf.terms)
        # f - nf is hit, and nf is a fixed point
        assert is_hit(basis, f + nf)
        assert normal_form_poly(basis, nf) == nf


def test_normal_form_of_sq_image_is_zero():
    f = sq(2, Polynomial.monomial((3, 2, 1)))
    basis = compute_basis(3, f.degree())
    assert is_hit(basis, f)
    assert normal_form_poly(basis, f).is_zero()


def test_singer_filter_soundness_small():
    for k in (2, 3, 4):
        for n in range(1, 21):
            if mu(n) > k:
                continue
            basis = compute_basis(k, n)
            for m in iter_compositions(k, n):
                if singer_filter(m):
                    assert not basis.is_admissible(m), (k, n, m)


def test_singer_filter_raises_without_spike():
    with pytest.raises(SingerInapplicableError):
        singer_filter((5, 7))  # mu(12) = 4 > 2


def test_wood_filter_agreement():
    for k in (1, 2, 3, 4):
        for n in range(1, 31):
            if wood_filter(k, n):
                assert compute_basis(k, n).dimension == 0, (k, n)


def test_split_basis_partitions():
    basis = compute_basis(4, 12)
    b0, bplus = split_basis(basis)
    assert sorted(b0 + bplus) == sorted(basis.admissibles)
    assert all(0 in m for m in b0)
    assert all(0 not in m for m in bplus)


def test_capacity_error():
    with pytest.raises(CapacityError):
        compute_basis(5, 60, max_columns=10**5)


def test_strictly_inadmissible_basics():
    # x^2 y = x y^2 + Sq^1(x y) rewrites it into a strictly smaller monomial
    assert is_strictly_inadmissible((2, 1))
    assert not is_strictly_inadmissible((1, 2))  # that one is admissible
    # spikes are never even inadmissible
    assert not is_strictly_inadmissible((3, 3))
    assert not is_strictly_inadmissible((7, 1))
    assert not is_strictly_inadmissible((1, 0))


def test_strictly_inadmissible_implies_inadmissible():
    for k, n in ((2, 6), (3, 8), (3, 10)):
        basis = compute_basis(k, n)
        for m in iter_compositions(k, n):
            if is_strictly_inadmissible(m):
                assert not basis.is_admissible(m), (k, n, m)


def test_disk_checkpoint_round_trip(tmp_path, monkeypatch):
    from hitprob import quotient

    monkeypatch.setenv(quotient.CACHE_ENV_VAR, str(tmp_path))
    quotient.clear_memory_cache()
    fresh = compute_basis(3, 12)
    quotient.clear_memory_cache()
    reloaded = compute_basis(3, 12)  # second call reads the checkpoint
    assert (tmp_path / "echelon_k3_n12.bin").exists()
    assert reloaded.admissibles == fresh.admissibles
    quotient.clear_memory_cache()
