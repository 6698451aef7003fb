"""Physical constants and unit conventions.

Energies are carried in Rydbergs throughout; lengths in bohr.  The only
dimensionful constant entering the transition strengths is the fine
structure constant (CODATA 2018).
"""

# fine structure constant, dimensionless (CODATA 2018)
FINE_STRUCTURE = 7.2973525693e-3

# Bohr magneton expressed as an equivalent length in bohr (hbar/2mc),
# which is the factor that turns <L> into a dipole-type matrix element
# in Rydberg atomic units.
BOHR_MAGNETON = FINE_STRUCTURE / 2.0

# 1 Ry in Hartree, for optional CLI output conversion
RYDBERG_IN_HARTREE = 0.5
