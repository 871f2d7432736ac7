"""
Testcases for the Sylvester operator z -> F z + z G:
- matrix columns against the operator
- closed form determinant against exact elimination
- eigenvalues against numpy
- rank classes on the exact and the floating path
- conjugator solver and the h ladder
"""

import numpy as np
from pytest import raises

from mincq.cq_core import ComplexQuaternion, L, ONE, QI, QJ, QK
from mincq.polyring import QLaurent
from mincq.sylvester import (
    BASIS,
    RankClass,
    operator_matrix,
    det_closed_form,
    eigenvalues,
    eigenvalue_deviation,
    check_eigenvalues,
    classify_rank,
    numeric_rank,
    solve_conjugator,
    conjugator_ladder,
    find_conjugator,
)
from mincq.util.sampling import random_quaternion, random_invertible_quaternion
from mincq.errors import ConjugacyObstruction, NonInvertibleChi, SearchExhausted
from mincq.examples import richmond_phi, richmond_preimage

TRIALS = 1000


def rank3_pair():
    F = np.array([0, 0, 1j, 1], dtype=complex)
    G = np.array([1j, 0, np.sqrt(2) / 2, np.sqrt(2) / 2], dtype=complex)
    return F, G


def test_matrix_columns(rng):
    F, G = random_quaternion(rng), random_quaternion(rng)
    M = operator_matrix(F, G)
    for z in (random_quaternion(rng) for _ in range(10)):
        assert M.apply(z) == F * z + z * G
    for n, e in enumerate(BASIS):
        assert tuple(M[r, n] for r in range(4)) == (F * e + e * G).coeffs


def test_determinant_closed_form(rng):
    for _ in range(TRIALS):
        F, G = random_quaternion(rng, 3), random_quaternion(rng, 3)
        assert det_closed_form(F, G) == operator_matrix(F, G).determinant()


def test_eigenvalues(rng):
    for _ in range(20):
        F, G = random_quaternion(rng), random_quaternion(rng)
        expected = np.linalg.eigvals(operator_matrix(F, G).to_numpy())
        closed = eigenvalues(F, G)
        for value in expected:
            assert np.min(np.abs(closed - value)) < 1e-8 * max(1.0, abs(value))


def test_eigenvalue_check(rng):
    for _ in range(20):
        F, G = random_quaternion(rng), random_quaternion(rng)
        assert check_eigenvalues(F, G, rtol=1e-6)
    assert check_eigenvalues(QI, QJ)
    assert eigenvalue_deviation(QI, QJ) < 1e-12
    assert not check_eigenvalues(QI, QJ, rtol=-1.0)


def test_rank3_floating():
    F, G = rank3_pair()
    assert classify_rank(F, G) is RankClass.RANK3
    assert numeric_rank(F, G) == 3
    sv = np.linalg.svd(operator_matrix(F, G).to_numpy(), compute_uv=False)
    assert sv[-1] / sv[0] < 1e-10
    assert np.sum(np.abs(eigenvalues(F, G)) < 1e-9) == 1


def test_rank2_real_conjugate():
    assert classify_rank(QI, QJ) is RankClass.RANK2
    assert numeric_rank(QI, QJ) == 2
    F = ComplexQuaternion(0, 1, 2, 2)
    G = -ComplexQuaternion(0, 2, 2, 1)
    assert classify_rank(F, G) is RankClass.RANK2
    assert numeric_rank(F, G) == 2


def test_full_and_degenerate():
    assert classify_rank(ONE, ONE) is RankClass.FULL
    assert numeric_rank(ONE, ONE) == 4
    assert classify_rank(ComplexQuaternion(2), QI) is RankClass.SCALAR_DEGENERATE


def test_solve_conjugator(rng):
    for _ in range(50):
        f = random_quaternion(rng)
        q = random_invertible_quaternion(rng)
        g = q * f * q.inverse()
        h = QLaurent.constant(random_quaternion(rng))
        try:
            chi = solve_conjugator(f, g, h)
        except NonInvertibleChi:
            continue
        assert QLaurent.constant(f) * chi == chi * QLaurent.constant(g)


def test_conjugacy_obstruction():
    with raises(ConjugacyObstruction):
        solve_conjugator(ONE, QI, ONE)
    with raises(ConjugacyObstruction):
        solve_conjugator(QI, L, ONE)


def test_scalar_pair_returns_seed():
    h = QLaurent.constant(ComplexQuaternion(1, 2, 0, 0))
    assert solve_conjugator(ComplexQuaternion(3), ComplexQuaternion(3), h) == h


def test_ladder_clears_poles():
    ladder = conjugator_ladder(richmond_phi().phi, L)
    first = [next(ladder) for _ in range(5)]
    assert first[0] == QLaurent.monomial(2, ONE)
    assert first[3] == QLaurent.monomial(2, QK)
    assert first[4] == QLaurent.monomial(3, ONE)


def test_find_conjugator_richmond():
    h, chi = find_conjugator(richmond_phi().phi, L)
    assert h == QLaurent.monomial(2, ONE)
    assert chi == richmond_preimage().A
    with raises(SearchExhausted):
        find_conjugator(richmond_phi().phi, L, budget=0)

