"""Physical constants and the unit conventions used throughout the package.

Energies are microelectronvolts (ueV), times are nanoseconds (ns),
temperatures are kelvin (K) and angular frequencies are rad/ns. Energy and
angular frequency are interconverted at exactly one place, ``omega = E/hbar``,
with the two constants below (CODATA 2018, truncated to the precision that
survives a float64 anyway).
"""

import math

# reduced Planck constant, ueV*ns
HBAR_UEV_NS = 0.6582119569

# Boltzmann constant, ueV/K
KB_UEV_PER_K = 86.17333262

# gap below which the two lowest levels are treated as exactly degenerate
# and the detuning derivative is refused, ueV
DEGENERACY_TOL_UEV = 1e-9

# gap below which a near-degeneracy warning is attached to results, ueV
NEAR_DEGENERATE_WARN_UEV = 1e-6

# default reading of "E_Q much larger than eta*kB*T": a factor of ten
DEFAULT_REGIME_FACTOR = 10.0


def energy_to_omega(e_uev: float) -> float:
    """Angular frequency (rad/ns) of a level splitting given in ueV."""
    return e_uev / HBAR_UEV_NS


def hz_to_rad_per_ns(f_hz: float) -> float:
    """Convert an ordinary frequency in Hz to an angular one in rad/ns."""
    return 2.0 * math.pi * f_hz * 1e-9
