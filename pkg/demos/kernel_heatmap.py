"""Build one dataset, compute its full kernel, and export a heat map.

The printed matrix shows the block structure directly: ones inside each
coset block, a single shared value alpha_ij across each cross-coset block.
The CSV written at the end is the same format the CLI's --heatmap flag
produces.

Run: python3 demos/kernel_heatmap.py
"""

import numpy as np

from cosetkernel import dataset, kernel

rng = np.random.default_rng(3)
n_qubits, m = 3, 3
ds = dataset.generate(n_qubits, m, rng)
kmat = kernel.kernel_matrix(list(ds.points), n_qubits)

labels = kmat.point_labels()
print("    " + " ".join(f"{l:>6}" for l in labels))
for row_label, row in zip(labels, kmat.entries):
    print(f"{row_label:>4} " + " ".join(f"{v:6.3f}" for v in row))

print()
alphas = kernel.alpha_matrix(ds)
for i in range(m):
    for j in range(i + 1, m):
        print(f"alpha[{i},{j}] = {alphas[i, j]:.6f}")

kernel.export_heatmap(kmat, "demo_heatmap.csv")
print("\nwrote demo_heatmap.csv")
