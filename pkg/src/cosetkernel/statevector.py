"""Dense statevector simulation primitives.

States are 1-D complex numpy arrays of length 2**N, qubit 0 is the most
significant bit of the basis index. All operations return new arrays; inputs
are never mutated.
"""

import numpy as np

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)

PAULIS = {"I": I2, "X": X, "Y": Y, "Z": Z}


def rx(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def ry(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rz(theta):
    return np.array(
        [[np.exp(-1j * theta / 2), 0], [0, np.exp(1j * theta / 2)]], dtype=complex
    )


def num_qubits(state):
    n = int(np.log2(len(state)))
    if 2**n != len(state):
        raise ValueError(f"state length {len(state)} is not a power of two")
    return n


def zero_state(n):
    if n < 1:
        raise ValueError("need at least one qubit")
    state = np.zeros(2**n, dtype=complex)
    state[0] = 1.0
    return state


def apply_single_qubit(state, gate, qubit):
    """Apply a 2x2 gate on one tensor factor of the state."""
    n = num_qubits(state)
    if not 0 <= qubit < n:
        raise IndexError(f"qubit {qubit} out of range for {n} qubits")
    psi = state.reshape([2] * n)
    psi = np.moveaxis(psi, qubit, -1)
    psi = psi @ np.asarray(gate, dtype=complex).T
    return np.moveaxis(psi, -1, qubit).reshape(-1)


def apply_cz(state, q1, q2):
    """Negate amplitudes where both qubits are 1."""
    n = num_qubits(state)
    if q1 == q2:
        raise ValueError("CZ needs two distinct qubits")
    for q in (q1, q2):
        if not 0 <= q < n:
            raise IndexError(f"qubit {q} out of range for {n} qubits")
    psi = state.reshape([2] * n).copy()
    idx = [slice(None)] * n
    idx[q1] = 1
    idx[q2] = 1
    psi[tuple(idx)] *= -1
    return psi.reshape(-1)


def inner_product(a, b):
    """<a|b>, conjugate-linear in the first argument."""
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return complex(np.vdot(a, b))


def operator_norm(a):
    """Largest singular value."""
    a = np.asarray(a)
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite entries")
    return float(np.linalg.svd(a, compute_uv=False)[0])


def haar_random_su2(rng):
    """Haar-random SU(2) element via QR of a 2x2 complex Ginibre matrix."""
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    # fix the phase ambiguity of QR, then normalize the determinant
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return q / np.sqrt(np.linalg.det(q))


def haar_random_state(dim, rng):
    """Haar-random pure state on a dim-dimensional space."""
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def dense_apply(a, state):
    a = np.asarray(a, dtype=complex)
    if a.shape[1] != len(state):
        raise ValueError("dimension mismatch")
    return a @ state


def dense_compose(a, b):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[1] != b.shape[0]:
        raise ValueError("dimension mismatch")
    return a @ b
