"""
Manning-Rosen potential shapes
==============================

Scans V(r) for the two table alphas at three screening lengths, checks the
grid minimum against the closed form, and (when matplotlib is available)
saves the curves to potential_shapes.png.
"""

import numpy as np

from mrspec import PotentialParams, atomic_units, force_constant, minimum, mr_value

u = atomic_units()
r = np.linspace(0.05, 60.0, 4000)

print("grid-scan minimum vs closed form (A = 2b, atomic units)")
print(f"{'alpha':>6} {'1/b':>6} {'r0 (grid)':>12} {'r0 (exact)':>12} "
      f"{'V(r0)':>12} {'k (exact)':>12}")
curves = []
for alpha in (0.75, 1.5):
    for inv_b in (0.025, 0.050, 0.100):
        b = 1.0 / inv_b
        params = PotentialParams(A=2.0 * b, alpha=alpha, b=b)
        v = mr_value(params, u, r)
        curves.append((alpha, inv_b, v))
        spot = minimum(params, u)
        if spot is None:
            # alpha in (0, 1) kills the repulsive core: no interior minimum
            print(f"{alpha:>6} {inv_b:>6} {'-':>12} {'-':>12} {'-':>12} {'-':>12}")
            continue
        r0, v0 = spot
        r0_grid = r[np.argmin(v)]
        k = force_constant(params, u)
        print(f"{alpha:>6} {inv_b:>6} {r0_grid:>12.4f} {r0:>12.4f} "
              f"{v0:>12.6f} {k:>12.6f}")

print()
print("alpha and 1 - alpha give the same potential:")
pa = PotentialParams(A=80.0, alpha=1.5, b=40.0)
pb = PotentialParams(A=80.0, alpha=-0.5, b=40.0)
print("  max |V_1.5 - V_-0.5| =", np.max(np.abs(mr_value(pa, u, r) - mr_value(pb, u, r))))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the plot")
else:
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.5), sharey=True)
    for ax, alpha in zip(axes, (0.75, 1.5)):
        for a, inv_b, v in curves:
            if a == alpha:
                ax.plot(r, v, label=f"1/b = {inv_b:g}")
        ax.set_xlabel("r (bohr)")
        ax.set_title(f"alpha = {alpha:g}")
        ax.set_ylim(-1.5, 1.0)
        ax.legend()
    axes[0].set_ylabel("V(r) (hartree)")
    fig.tight_layout()
    fig.savefig("potential_shapes.png", dpi=120)
    print("wrote potential_shapes.png")
