import numpy as np
import pytest

from cosetkernel import group
from cosetkernel.statevector import (
    X,
    Z,
    haar_random_state,
    operator_norm,
    rx,
    rz,
    zero_state,
)


def test_from_euler_identity():
    g = group.from_euler(np.zeros((3, 3)))
    for f in g.factors:
        np.testing.assert_allclose(f, np.eye(2), atol=1e-14)


def test_from_euler_pi_is_x():
    g = group.from_euler([(np.pi, 0, 0)])
    np.testing.assert_allclose(g.factors[0], -1j * X, atol=1e-14)


def test_from_euler_matches_matrix_product():
    g = group.from_euler([(0.3, 0.7, 0.1)])
    np.testing.assert_allclose(
        g.factors[0], rx(0.3) @ rz(0.7) @ rx(0.1), atol=1e-14
    )


def test_from_euler_rejects_nonfinite():
    with pytest.raises(ValueError):
        group.from_euler([(np.inf, 0, 0)])


def test_from_pauli():
    g = group.from_pauli("II")
    np.testing.assert_allclose(g.factors[0], np.eye(2))
    g = group.from_pauli("XZ")
    np.testing.assert_allclose(g.factors[0], X)
    np.testing.assert_allclose(g.factors[1], Z)
    with pytest.raises(ValueError):
        group.from_pauli("XQ")


def test_z_action_on_basis():
    z = group.from_pauli("Z")
    np.testing.assert_allclose(group.apply(z, zero_state(1)), zero_state(1))
    one = np.array([0, 1], dtype=complex)
    np.testing.assert_allclose(group.apply(z, one), -one)


def test_compose_identity_and_inverse():
    rng = np.random.default_rng(0)
    g = group.haar_random_element(3, rng)
    same = group.compose(g, group.identity_element(3))
    np.testing.assert_allclose(same.factors, g.factors, atol=1e-14)
    ident = group.compose(g, group.inverse(g))
    np.testing.assert_allclose(
        ident.factors, group.identity_element(3).factors, atol=1e-12
    )


def test_homomorphism():
    rng = np.random.default_rng(1)
    g = group.haar_random_element(3, rng)
    h = group.haar_random_element(3, rng)
    psi = haar_random_state(8, rng)
    lhs = group.apply(group.compose(g, h), psi)
    rhs = group.apply(g, group.apply(h, psi))
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_apply_matches_kronecker_oracle():
    rng = np.random.default_rng(2)
    g = group.haar_random_element(4, rng)
    psi = haar_random_state(16, rng)
    np.testing.assert_allclose(
        group.apply(g, psi), group.dense(g) @ psi, atol=1e-12
    )


def test_chain_generators_small():
    assert group.chain_generators(2) == ["XZ", "ZX"]
    assert group.chain_generators(3) == ["XZI", "ZXZ", "IZX"]
    with pytest.raises(ValueError):
        group.chain_generators(1)


@pytest.mark.parametrize("n", range(2, 11))
def test_generators_fix_fiducial_state(n):
    psi = group.prepare_fiducial(group.fiducial_preparation(n))
    for p in group.chain_generators(n):
        fixed = group.apply(group.from_pauli(p), psi)
        assert abs(abs(np.vdot(psi, fixed)) - 1) < 1e-10


def test_fiducial_two_qubits():
    psi = group.prepare_fiducial(group.fiducial_preparation(2))
    np.testing.assert_allclose(psi, [0.5, 0.5, 0.5, -0.5], atol=1e-12)


def test_fiducial_zero_offsets_is_ideal():
    ideal = group.prepare_fiducial(group.fiducial_preparation(3))
    offs = group.prepare_fiducial(group.fiducial_preparation(3, np.zeros(3)))
    np.testing.assert_allclose(ideal, offs)


def test_fiducial_offset_budget():
    # all offsets at the budget 2 eps / N keep the operators within eps
    eps = 0.05
    n = 3
    v = group.fiducial_operator(group.fiducial_preparation(n))
    w = group.fiducial_operator(
        group.fiducial_preparation(n, np.full(n, 2 * eps / n))
    )
    assert operator_norm(v - w) <= eps + 1e-6


def test_fiducial_operator_unitary_and_consistent():
    rng = np.random.default_rng(3)
    for n in (2, 4):
        prep = group.fiducial_preparation(n, rng.uniform(-0.2, 0.2, n))
        op = group.fiducial_operator(prep)
        np.testing.assert_allclose(op.conj().T @ op, np.eye(2**n), atol=1e-10)
        np.testing.assert_allclose(
            op @ zero_state(n), group.prepare_fiducial(prep), atol=1e-12
        )


def test_composed_factors_stay_unitary():
    rng = np.random.default_rng(4)
    g = group.from_euler(rng.uniform(-np.pi, np.pi, (3, 3)))
    h = group.from_euler(rng.uniform(-np.pi, np.pi, (3, 3)))
    for f in group.compose(g, h).factors:
        np.testing.assert_allclose(f.conj().T @ f, np.eye(2), atol=1e-12)
