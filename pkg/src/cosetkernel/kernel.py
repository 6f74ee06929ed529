"""Covariant kernel evaluation by statevector simulation.

Every entry is the exact squared amplitude
|<0| V_left^dag D_x^dag D_x' V_right |0>|^2; no measurement sampling. The
gate-level path builds one feature state per data point; the dense path
multiplies full 2^N x 2^N matrices and serves as the oracle in tests.
"""

from dataclasses import dataclass

import numpy as np

from . import group
from .statevector import inner_product, zero_state


@dataclass(frozen=True)
class KernelMatrix:
    entries: np.ndarray  # (P, P) real, symmetric
    coset_labels: np.ndarray  # (P,) int
    subgroup_indices: np.ndarray  # (P,) int

    @property
    def size(self):
        return self.entries.shape[0]

    def point_labels(self):
        return [
            f"c{i}s{a}" for i, a in zip(self.coset_labels, self.subgroup_indices)
        ]


def feature_state(point, prep, perturbation=None, method="gate"):
    """|phi(x)> = (D_e) D_x V |0>, optionally with a selection perturbation."""
    if method == "gate":
        psi = group.prepare_fiducial(prep)
        psi = group.apply(point.element, psi)
        if perturbation is not None:
            psi = group.apply(perturbation, psi)
        return psi
    if method == "dense":
        op = group.dense(point.element) @ group.fiducial_operator(prep)
        if perturbation is not None:
            op = group.dense(perturbation) @ op
        return op @ zero_state(prep.num_qubits)
    raise ValueError(f"unknown method {method!r}")


def feature_states(points, prep, perturbations=None, method="gate"):
    if perturbations is None:
        perturbations = [None] * len(points)
    if len(perturbations) != len(points):
        raise ValueError("need one perturbation per point")
    return np.stack(
        [feature_state(p, prep, e, method) for p, e in zip(points, perturbations)]
    )


def kernel_entry(x, xp, prep_left=None, prep_right=None, *, n_qubits=None,
                 pert_left=None, pert_right=None, method="gate"):
    """Single kernel value for the pair (x, x').

    prep_left / prep_right are the fiducial preparations on the two sides of
    the overlap; they differ only in the fiducial-error model.
    """
    n = n_qubits if n_qubits is not None else x.element.num_qubits
    if prep_left is None:
        prep_left = group.fiducial_preparation(n)
    if prep_right is None:
        prep_right = prep_left
    left = feature_state(x, prep_left, pert_left, method)
    right = feature_state(xp, prep_right, pert_right, method)
    return abs(inner_product(left, right)) ** 2


def kernel_matrix(points, n_qubits, *, offsets_left=None, offsets_right=None,
                  perturbations=None, method="gate"):
    """All pairwise kernel values.

    offsets_left/offsets_right attach the fiducial-error model (two
    independently sampled noisy preparations on the two sides of every
    entry); perturbations attaches one selection-error element per point.
    The upper triangle is computed and mirrored, so the result is exactly
    symmetric.
    """
    if (offsets_left is None) != (offsets_right is None):
        raise ValueError("fiducial offsets must be given for both sides")
    if offsets_left is not None and perturbations is not None:
        raise ValueError("choose one noise attachment per job")
    prep_l = group.fiducial_preparation(n_qubits, offsets_left)
    if offsets_right is None:
        left = right = feature_states(points, prep_l, perturbations, method)
    else:
        prep_r = group.fiducial_preparation(n_qubits, offsets_right)
        left = feature_states(points, prep_l, method=method)
        right = feature_states(points, prep_r, method=method)
    gram = np.abs(left.conj() @ right.T) ** 2
    entries = np.triu(gram) + np.triu(gram, 1).T
    return KernelMatrix(
        entries,
        np.array([p.coset_label for p in points]),
        np.array([p.subgroup_index for p in points]),
    )


def restrict(kmat, indices):
    """Kernel matrix restricted to a subset of points (e.g. a train split)."""
    idx = np.asarray(indices)
    return KernelMatrix(
        kmat.entries[np.ix_(idx, idx)],
        kmat.coset_labels[idx],
        kmat.subgroup_indices[idx],
    )


def alpha_matrix(ds):
    """alpha_{i,j} = |<psi| D_ci^dag D_cj |psi>|^2 with unit diagonal."""
    psi = group.prepare_fiducial(group.fiducial_preparation(ds.num_qubits))
    states = np.stack([group.apply(c, psi) for c in ds.representatives])
    gram = np.abs(states.conj() @ states.T) ** 2
    alphas = np.triu(gram, 1)
    alphas = alphas + alphas.T
    np.fill_diagonal(alphas, 1.0)
    return alphas


def offdiag_stats(kmat):
    """Mean and population variance over all off-diagonal entries."""
    k = kmat.entries
    mask = ~np.eye(k.shape[0], dtype=bool)
    vals = k[mask]
    return float(vals.mean()), float(vals.var())


def cross_coset_values(kmat):
    """Off-diagonal entries between points of different cosets."""
    labels = kmat.coset_labels
    mask = labels[:, None] != labels[None, :]
    return kmat.entries[mask]


def export_heatmap(kmat, path):
    """CSV heat map: label header row/column, full-precision entries."""
    labels = kmat.point_labels()
    lines = ["," + ",".join(labels)]
    for lab, row in zip(labels, kmat.entries):
        lines.append(lab + "," + ",".join(repr(float(v)) for v in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
