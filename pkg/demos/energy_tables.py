"""
Reproducing the published energy tables
=======================================

Prints the atomic-units bound-state table (A = 2b, both alphas) and one
molecular block in eV. The same numbers are available from the command
line via `mrspec table table1|table2|table3`.
"""

from mrspec import (
    PotentialParams,
    QuantumState,
    atomic_units,
    is_bound,
    molecular_units,
)
from mrspec.cli import TABLE1_ROWS, TABLE23_ROWS
from mrspec.spectrum import energy

u = atomic_units()
print("atomic units (hartree), A = 2b")
print(f"{'state':>5} {'1/b':>6} {'alpha=0.75':>12} {'alpha=1.5':>12}")
for label, inv_b in TABLE1_ROWS:
    s = QuantumState.from_label(label)
    b = 1.0 / inv_b
    cells = []
    for alpha in (0.75, 1.5):
        params = PotentialParams(A=2.0 * b, alpha=alpha, b=b)
        cells.append(f"{energy(params, u, s):.7f}" if is_bound(params, s) else "unbound")
    print(f"{label:>5} {inv_b:>6.3f} {cells[0]:>12} {cells[1]:>12}")

print()
print("LiH and CO (eV), A = 2b; alpha in {0, 1} is the Hulthen column")
units = {name: molecular_units(name) for name in ("LiH", "CO")}
print(f"{'state':>5} {'1/b':>6}", end="")
for name in units:
    for col in ("0,1", "0.75", "1.5"):
        print(f" {name + ' a=' + col:>14}", end="")
print()
for label, inv_b in TABLE23_ROWS:
    s = QuantumState.from_label(label)
    b = 1.0 / inv_b
    print(f"{label:>5} {inv_b:>6.3f}", end="")
    for name, mu in units.items():
        for alpha in (0.0, 0.75, 1.5):
            params = PotentialParams(A=2.0 * b, alpha=alpha, b=b)
            print(f" {energy(params, mu, s):>14.8f}", end="")
    print()

print()
print("degeneracies worth noticing: every alpha in {0, 1} energy depends")
print("only on N = n + l + 1, so the 3p/3d, 4p/4d/4f, ... cells coincide.")
