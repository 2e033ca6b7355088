"""The bound-state spectrum: circular orbit, circle vibrations, and the
fine-structure levels computed by two independent routes.

Run:  python demos/05_fine_structure_spectrum.py
"""

from circledirac import (
    QuantumNumbers,
    bohr_solve,
    coupled_solve,
    energy_closed_form,
    lines_to_csv,
    sommerfeld_reference,
    spectrum_table,
)

ALPHA = 7.2973525693e-3
MASS_EV = 510998.9461

print("Circular orbit at coupling alpha (speed alpha/n_theta):")
b = bohr_solve(ALPHA, 1)
print(f"  v = {b.v_b:.8f}, kinetic eta = {b.eta_b:.12f}, momentum mu = {b.mu_b:.8e}")
print(f"  potential eA = {b.eA_b:.8e}, total nu = {b.nu_b:.12f}")
print(f"  orbit radius R1 = {b.R1_b:.4f}, rest circle R0 = {b.R0_l:.1f}, boosted R0 = {b.R0_b:.6f}")
print(f"  quantisation: nu*R0_boosted = {b.nu_b * b.R0_b:.15f} (= n_theta)")

print("\nAdding circle vibrations (energy n_r*m/n_theta) and re-solving:")
print("  n_theta n_r   chain route          closed form          reference")
for qn in (QuantumNumbers(1, 0), QuantumNumbers(1, 1), QuantumNumbers(2, 0), QuantumNumbers(2, 1)):
    chain = coupled_solve(ALPHA, qn).nu_m
    closed = energy_closed_form(ALPHA, qn.n_theta, qn.n_r)
    ref = sommerfeld_reference(ALPHA, qn.n_theta, qn.n_r)
    print(f"  {qn.n_theta:^7} {qn.n_r:^3}   {chain:.15f}    {closed:.15f}    {ref:.15f}")

print("\nFine structure: levels with the same principal number differ.")
split = (energy_closed_form(ALPHA, 2, 0) - energy_closed_form(ALPHA, 1, 1)) * MASS_EV
print(f"  E(n_theta=2, n_r=0) - E(n_theta=1, n_r=1) = {split:.4e} eV"
      f"  (about m*alpha^4/32 = {MASS_EV * ALPHA ** 4 / 32:.4e} eV)")

print("\nSpectrum table (CSV, the golden-file format):")
print(lines_to_csv(spectrum_table(ALPHA, MASS_EV, 2, 2)))
