"""Labeled coset datasets: m hidden Haar-random representatives acting on the
N chain-graph stabilizer generators, plus the coverage-constrained train/test
split."""

import json
from dataclasses import dataclass

import numpy as np

from . import group


@dataclass(frozen=True)
class DataPoint:
    element: group.GroupElement  # c_i * s_a
    coset_label: int
    subgroup_index: int


@dataclass(frozen=True)
class CosetDataset:
    num_qubits: int
    representatives: tuple  # m hidden GroupElements
    subgroup_elems: tuple  # the N chain generators as GroupElements
    points: tuple  # m*n DataPoints, coset-major order

    @property
    def num_cosets(self):
        return len(self.representatives)

    @property
    def subgroup_size(self):
        return len(self.subgroup_elems)


@dataclass(frozen=True)
class SplitIndices:
    train: tuple
    test: tuple


def generate(n_qubits, m, rng):
    """Dataset of m * N points x_{i,a} = c_i s_a, coset-major order."""
    if n_qubits < 2:
        raise ValueError("need at least 2 qubits")
    if m < 2:
        raise ValueError("need at least 2 cosets")
    reps = tuple(group.haar_random_element(n_qubits, rng) for _ in range(m))
    subgroup = tuple(group.from_pauli(p) for p in group.chain_generators(n_qubits))
    points = tuple(
        DataPoint(group.compose(c, s), i, a)
        for i, c in enumerate(reps)
        for a, s in enumerate(subgroup)
    )
    return CosetDataset(n_qubits, reps, subgroup, points)


def split(ds, rng):
    """Uniformly random half of the points, resampled until every coset is
    represented in the training half."""
    total = len(ds.points)
    train_size = total // 2
    m = ds.num_cosets
    if m > train_size:
        raise ValueError(f"cannot cover {m} cosets with {train_size} train slots")
    labels = np.array([p.coset_label for p in ds.points])
    while True:
        train = rng.choice(total, size=train_size, replace=False)
        if len(set(labels[train])) == m:
            break
    train = tuple(sorted(int(i) for i in train))
    test = tuple(i for i in range(total) if i not in set(train))
    return SplitIndices(train, test)


def _element_to_json(g):
    return [[[ [v.real, v.imag] for v in row] for row in f] for f in g.factors]


def _element_from_json(data):
    factors = np.array(
        [[[complex(re, im) for re, im in row] for row in f] for f in data]
    )
    return group.GroupElement(factors)


def to_json(ds, seed=None):
    """Serialize a dataset; factor matrices as real/imag pairs."""
    return json.dumps(
        {
            "num_qubits": ds.num_qubits,
            "seed": seed,
            "representatives": [_element_to_json(c) for c in ds.representatives],
            "subgroup_elems": [_element_to_json(s) for s in ds.subgroup_elems],
            "points": [
                {
                    "element": _element_to_json(p.element),
                    "coset_label": p.coset_label,
                    "subgroup_index": p.subgroup_index,
                }
                for p in ds.points
            ],
        },
        sort_keys=True,
    )


def from_json(text):
    data = json.loads(text)
    return CosetDataset(
        data["num_qubits"],
        tuple(_element_from_json(c) for c in data["representatives"]),
        tuple(_element_from_json(s) for s in data["subgroup_elems"]),
        tuple(
            DataPoint(
                _element_from_json(p["element"]),
                p["coset_label"],
                p["subgroup_index"],
            )
            for p in data["points"]
        ),
    )
