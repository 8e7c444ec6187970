import numpy as np
import pytest

from weylsym import matcore
from weylsym.errors import NotInLie, NotInS, NotSymplectic
from weylsym.sympgroup import (
    SpLieReal,
    SpReal,
    SuBlocks,
    SuLie,
    random_sp,
    random_sp_lie,
    random_su,
    sp_from_su,
    sp_inv,
    sp_mul,
    su_exp,
    su_from_sp,
    su_inv,
    su_lie_from_sp_lie,
    su_mul,
    validate_sp,
    validate_sp_lie,
    validate_su,
    validate_su_lie,
)


def test_random_elements_validate():
    for n in (1, 2, 3):
        for seed in range(10):
            g = random_sp(n, seed)
            assert validate_sp(g).ok
            k = random_su(n, seed)
            assert validate_su(k).ok
            x = random_sp_lie(n, seed)
            assert validate_sp_lie(x).ok
            assert validate_su_lie(su_lie_from_sp_lie(x)).ok


def test_frame_round_trip():
    for n in (1, 2):
        for seed in range(10):
            g = random_sp(n, seed)
            back = sp_from_su(su_from_sp(g))
            assert np.allclose(back.g, g.g, atol=1e-12)
            k = random_su(n, seed + 100)
            again = su_from_sp(sp_from_su(k))
            assert np.allclose(again.P, k.P, atol=1e-12)
            assert np.allclose(again.Q, k.Q, atol=1e-12)


def test_frame_is_conjugation_by_U():
    # k = U g U^{-1} as full matrices
    for n in (1, 2):
        g = random_sp(n, 42)
        u = matcore.matrix_U(n)
        k = su_from_sp(g)
        assert np.allclose(k.full, u @ g.g @ np.linalg.inv(u), atol=1e-12)


def test_group_operations():
    for n in (1, 2):
        g1, g2 = random_sp(n, 1), random_sp(n, 2)
        prod = sp_mul(g1, g2)
        assert np.allclose(prod.g, g1.g @ g2.g)
        assert np.allclose(sp_mul(g1, sp_inv(g1)).g, np.eye(2 * n), atol=1e-12)

        k1, k2 = random_su(n, 3), random_su(n, 4)
        assert np.allclose(su_mul(k1, k2).full, k1.full @ k2.full, atol=1e-12)
        assert np.allclose(su_mul(k1, su_inv(k1)).full, np.eye(2 * n), atol=1e-12)


def test_su_inverse_blocks():
    # k^{-1} = (P*, -Q^t; -Q*, P^t)
    k = random_su(2, 9)
    ki = su_inv(k)
    assert np.allclose(ki.P, k.P.conj().T, atol=1e-12)
    assert np.allclose(ki.Q, -k.Q.T, atol=1e-12)


def test_su_invariants():
    for seed in range(5):
        k = random_su(2, seed)
        eye = np.eye(2)
        assert np.allclose(k.P @ k.P.conj().T - k.Q @ k.Q.conj().T, eye, atol=1e-12)
        assert np.allclose(k.P @ k.Q.T, k.Q @ k.P.T, atol=1e-12)


def test_su_exp_matches_group_exponential():
    for n in (1, 2):
        x = su_lie_from_sp_lie(random_sp_lie(n, 17, scale=0.3))
        k = su_exp(x)
        assert validate_su(k).ok
        assert np.allclose(k.full, matcore.mat_exp(x.full), atol=1e-12)


def test_lie_frame_change_matches_derivative():
    # d/dt U exp(tX) U^{-1} |_0 agrees with the block formulas
    x = random_sp_lie(2, 23)
    xs = su_lie_from_sp_lie(x)
    u = matcore.matrix_U(2)
    assert np.allclose(xs.full, u @ x.full @ np.linalg.inv(u), atol=1e-12)


def test_validators_reject_bad_input():
    with pytest.raises(NotInS):
        sp_from_su(SuBlocks(1, np.array([[2.0]]), np.array([[0.0]])))
    with pytest.raises(NotSymplectic):
        su_from_sp(SpReal(1, np.array([[2.0, 0.0], [0.0, 2.0]])))
    rep = validate_su_lie(SuLie(1, np.array([[1.0]]), np.array([[0.0]])))
    assert not rep.ok  # A must be skew-Hermitian
