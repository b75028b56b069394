"""
Closed form vs finite-difference solver
=======================================

Solves the radial equation on a grid, twice per state: once with the
Greene-Aldrich centrifugal term (the equation the closed form solves
exactly, so agreement cross-validates both code paths) and once with the
true 1/r^2 term (an independent reference showing the real accuracy of
the approximate spectrum).
"""

from mrspec import (
    EXACT,
    GREENE_ALDRICH,
    PotentialParams,
    QuantumState,
    atomic_units,
    default_problem,
    energy,
    solve,
)

u = atomic_units()
labels = ("2p", "3p", "3d", "4d", "4f")

for inv_b in (0.025, 0.075):
    b = 1.0 / inv_b
    params = PotentialParams(A=2.0 * b, alpha=0.75, b=b)
    states = [QuantumState.from_label(lab) for lab in labels]
    by_l = {}
    for s in states:
        by_l[s.l] = max(by_l.get(s.l, -1), s.n)

    numeric = {}
    for scheme in (GREENE_ALDRICH, EXACT):
        for l, n_top in by_l.items():
            rp = default_problem(params, u, l, scheme, n_max=n_top)
            result = solve(rp, n_top + 1)
            for n, ev in enumerate(result.eigenvalues):
                numeric[(scheme.kind, n, l)] = ev

    print(f"alpha = 0.75, 1/b = {inv_b:g}, A = 2b (hartree, 20k grid)")
    print(f"{'state':>5} {'analytic':>12} {'ga solver':>12} {'|dev|':>9} "
          f"{'exact solver':>13} {'|dev|':>9}")
    for s in states:
        analytic = energy(params, u, s)
        ga = numeric[("greene_aldrich", s.n, s.l)]
        ex = numeric[("exact", s.n, s.l)]
        print(f"{s.label:>5} {analytic:>12.7f} {ga:>12.7f} {abs(ga - analytic):>9.1e} "
              f"{ex:>13.7f} {abs(ex - analytic):>9.1e}")
    print()

print("the greene_aldrich column tracks the closed form to solver accuracy;")
print("the exact column drifts as l and 1/b grow, which is precisely the")
print("error budget of the approximation behind the closed form.")
