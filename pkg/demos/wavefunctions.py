"""
Normalized radial wavefunctions
===============================

Builds R(r) for a few bound states, confirms unit norm by quadrature,
counts the interior nodes, and (when matplotlib is available) saves the
curves to wavefunctions.png.
"""

import numpy as np
import scipy.integrate as si

from mrspec import PotentialParams, QuantumState, build_radial_wavefunction, radial_value

params = PotentialParams(A=80.0, alpha=0.75, b=40.0)
labels = ("2p", "3p", "3d", "4f")

print("alpha = 0.75, 1/b = 0.025, A = 2b (atomic units)")
print(f"{'state':>5} {'epsilon':>10} {'Lambda':>8} {'norm N':>12} "
      f"{'int R^2 dr':>14} {'nodes':>6} {'peak r':>8}")
curves = []
for label in labels:
    s = QuantumState.from_label(label)
    wf = build_radial_wavefunction(params, s)
    r_cut = 80.0 * wf.b / wf.epsilon
    integral, _ = si.quad(lambda r: radial_value(wf, r) ** 2, 0.0, r_cut, limit=400)
    r = np.linspace(0.0, 40.0, 4000)
    R = radial_value(wf, r)
    curves.append((label, r, R))
    nodes = int(np.sum(R[1:-1] * R[2:] < 0.0))
    peak = r[np.argmax(np.abs(R))]
    print(f"{label:>5} {wf.epsilon:>10.5f} {wf.Lambda:>8.5f} {wf.norm:>12.6g} "
          f"{integral:>14.12f} {nodes:>6} {peak:>8.3f}")

print()
print("the node count equals the radial quantum number n = N - l - 1.")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the plot")
else:
    fig, ax = plt.subplots(figsize=(7, 4))
    for label, r, R in curves:
        ax.plot(r, R, label=label)
    ax.axhline(0.0, color="k", lw=0.5)
    ax.set_xlabel("r (bohr)")
    ax.set_ylabel("R(r)")
    ax.set_title("alpha = 0.75, 1/b = 0.025")
    ax.legend()
    fig.tight_layout()
    fig.savefig("wavefunctions.png", dpi=120)
    print("wrote wavefunctions.png")
