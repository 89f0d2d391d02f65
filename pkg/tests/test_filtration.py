from math import comb

import pytest

from hitprob.filtration import (
    BlockReport,
    block_monomials,
    block_size,
    compute_block,
    dim_by_filtration,
    enumerate_weights,
    filtration_report,
    singer_certified_zero,
    weight_dichotomy_check,
)
from hitprob.monomials import (
    iter_compositions,
    monomial_count,
    omega_bar_kb,
    omega_kb,
    sort_key,
    weight_degree,
    weight_vector,
)
from hitprob.quotient import compute_basis


def test_enumerate_weights_is_complete_and_sorted():
    for k in (2, 3, 5):
        for n in (0, 1, 7, 12):
            weights = enumerate_weights(k, n)
            assert weights == sorted(weights, reverse=True)
            assert len(weights) == len(set(weights))
            brute = {weight_vector(m) for m in iter_compositions(k, n)}
            assert set(weights) == brute
            for w in weights:
                assert weight_degree(w) == n
                assert all(0 <= e <= k for e in w)


def test_block_monomials_partition_the_slice():
    for k, n in ((3, 8), (4, 9), (5, 12)):
        seen = []
        for w in enumerate_weights(k, n):
            mons = block_monomials(k, w)
            assert len(mons) == block_size(k, w)
            assert block_size(k, w) == \
                __import__("math").prod(comb(k, e) for e in w)
            assert all(weight_vector(m) == w for m in mons)
            keys = [sort_key(m) for m in mons]
            assert keys == sorted(keys, reverse=True)
            seen.extend(mons)
        assert len(seen) == monomial_count(k, n)
        assert len(set(seen)) == len(seen)


def test_compute_block_matches_global_grading():
    """Every block, both routes: prefix elimination vs graded monolithic."""
    for k in (2, 3, 4):
        for n in range(0, 15):
            global_reports = {r.omega: r.dim
                              for r in filtration_report(k, n, use_singer=False)}
            for w in enumerate_weights(k, n):
                block = compute_block(k, w)
                assert block.dimension == global_reports[w], (k, n, w)
                assert len(block.admissibles) == block.dimension
                assert all(weight_vector(m) == w for m in block.admissibles)


def test_block_admissibles_agree_with_basis():
    basis = compute_basis(5, 12)
    for w in ((4, 4), (4, 2, 1)):
        block = compute_block(5, w)
        expected = {m for m in basis.admissibles if weight_vector(m) == w}
        assert set(block.admissibles) == expected


def test_singer_certified_blocks_are_zero():
    for k in (3, 4, 5):
        for n in (7, 9, 12):
            reports = {r.omega: r.dim
                       for r in filtration_report(k, n, use_singer=False)}
            for w in enumerate_weights(k, n):
                if singer_certified_zero(k, w):
                    assert reports[w] == 0, (k, n, w)


def test_dim_by_filtration_equals_monolithic_small():
    for k in (1, 2, 3):
        for n in range(0, 16):
            expected = compute_basis(k, n).dimension
            assert dim_by_filtration(k, n, use_singer=True) == expected
            assert dim_by_filtration(k, n, use_singer=False) == expected


def test_degree_twelve_blocks():
    assert compute_block(5, omega_kb(5, 2)).dimension == 15
    assert compute_block(5, omega_bar_kb(5, 2)).dimension == 175
    assert dim_by_filtration(5, 12) == 190


def test_weight_dichotomy_low_degrees():
    assert weight_dichotomy_check(1)
    assert weight_dichotomy_check(2)
    assert weight_dichotomy_check(2, use_singer=False)


def test_report_structure():
    reports = filtration_report(5, 12)
    assert all(isinstance(r, BlockReport) for r in reports)
    assert sum(r.block_size for r in reports) == monomial_count(5, 12)
    by_method = {r.method for r in reports}
    assert by_method <= {"eliminated", "singer"}
    assert sum(r.dim for r in reports) == 190
