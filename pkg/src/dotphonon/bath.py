"""Bosonic bath: spectral density, thermal power spectrum and its dc limit.

The spectral density family is ``J(w) = eta * w^s / w_c^(s-1) * exp(-w/w_c)``
with a dimensionless coupling ``eta``, a high-energy cutoff ``w_c`` and the
regime exponent ``s`` (1 Ohmic, >1 super-Ohmic, <1 sub-Ohmic). Frequencies
are rad/ns.

The thermal power spectrum of the collective bath coordinate is

    S(w) = J(w)/2 * [coth(beta*hbar*w/2) + 1]   for w > 0 (emission)
    S(w) = J(|w|)/2 * [coth(beta*hbar*|w|/2) - 1]  for w < 0 (absorption)

Both branches are evaluated through ``expm1`` so that detailed balance
``S(-w) = exp(-beta*hbar*w) * S(w)`` survives at relative precision even
where ``coth`` saturates to 1 in float64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import HBAR_UEV_NS, KB_UEV_PER_K
from .errors import (
    InvalidParams,
    NegativeFrequency,
    NonFinite,
    NonPositiveFrequency,
    ZeroFrequency,
)

__all__ = [
    "BathParams",
    "Temperature",
    "coth",
    "spectral_density",
    "power_spectrum",
    "power_spectrum_zero",
    "thermal_occupation",
]


@dataclass(frozen=True)
class BathParams:
    """Bath regime exponent, coupling strength and the two cutoffs (rad/ns)."""

    s: float
    eta: float
    omega_c: float
    omega_cutoff: float

    def __post_init__(self) -> None:
        for name in ("s", "eta", "omega_c", "omega_cutoff"):
            if not math.isfinite(getattr(self, name)):
                raise NonFinite(f"bath parameter {name} is not finite")
        if not 0.0 < self.s <= 4.0:
            raise InvalidParams(f"regime exponent s must be in (0, 4], got {self.s!r}")
        if self.eta < 0.0:
            raise InvalidParams(f"coupling eta must be non-negative, got {self.eta!r}")
        if self.omega_c <= 0.0:
            raise InvalidParams(f"omega_c must be positive, got {self.omega_c!r}")
        if not 0.0 < self.omega_cutoff < self.omega_c:
            raise InvalidParams(
                f"omega_cutoff must lie in (0, omega_c), got {self.omega_cutoff!r}"
            )


@dataclass(frozen=True)
class Temperature:
    """Bath temperature in kelvin, strictly positive."""

    kelvin: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.kelvin) and self.kelvin > 0.0):
            raise InvalidParams(f"temperature must be finite and > 0 K, got {self.kelvin!r}")

    def beta_hbar(self) -> float:
        """hbar / (kB * T) in ns: multiplies rad/ns to give the thermal exponent."""
        return HBAR_UEV_NS / (KB_UEV_PER_K * self.kelvin)


def coth(x: float) -> float:
    """coth(x) for x > 0, computed as ``1 + 2 e^(-2x) / (1 - e^(-2x))``.

    Accurate over the full float64 range: the ``expm1`` denominator does
    not cancel for small x, and for large x the correction underflows so
    the result saturates at exactly 1.0, the correct rounding.
    """
    return 1.0 + 2.0 * math.exp(-2.0 * x) / -math.expm1(-2.0 * x)


def spectral_density(b: BathParams, omega: float) -> float:
    """J(omega) in rad/ns for omega >= 0; zero at omega = 0."""
    if omega < 0.0:
        raise NegativeFrequency(f"spectral density needs omega >= 0, got {omega!r}")
    if omega == 0.0:
        return 0.0
    return b.eta * omega**b.s / b.omega_c ** (b.s - 1.0) * math.exp(-omega / b.omega_c)


def power_spectrum(b: BathParams, t: Temperature, omega: float) -> float:
    """Thermal power spectrum at a finite frequency, rad/ns.

    Positive frequencies give emission, negative absorption; use
    :func:`power_spectrum_zero` for the dc limit.
    """
    if abs(omega) < 1e-15:
        raise ZeroFrequency(
            "power_spectrum is singular at omega = 0; use power_spectrum_zero"
        )
    x2 = t.beta_hbar() * abs(omega)  # beta * hbar * |omega|
    j = spectral_density(b, abs(omega))
    if omega > 0.0:
        return j / -math.expm1(-x2)
    # 1/(e^x - 1) written as e^-x/(1 - e^-x): never overflows, and the
    # shared denominator keeps S(-w)/S(w) = e^-x exact to rounding
    return j * math.exp(-x2) / -math.expm1(-x2)


def power_spectrum_zero(
    b: BathParams, t: Temperature, omega_eval: float | None = None
) -> float:
    """First-order dc limit of the power spectrum, rad/ns.

    Ohmic baths give ``eta * kB * T / hbar`` exactly. Away from s = 1 the
    Taylor limit keeps one power of frequency; ``omega_eval`` fixes where it
    is evaluated (default: the low-frequency cutoff, which makes the
    sub-Ohmic form collapse back onto the Ohmic one).
    """
    if omega_eval is None:
        omega_eval = b.omega_cutoff
    kbt_over_hbar = KB_UEV_PER_K * t.kelvin / HBAR_UEV_NS
    if b.s == 1.0:
        return b.eta * kbt_over_hbar
    if b.s > 1.0:
        return b.eta * omega_eval * kbt_over_hbar / b.omega_c
    return b.eta * b.omega_cutoff * kbt_over_hbar / omega_eval


def thermal_occupation(t: Temperature, omega: float) -> float:
    """Bose-Einstein occupation ``1 / (exp(beta*hbar*omega) - 1)``."""
    if omega <= 0.0:
        raise NonPositiveFrequency(f"occupation needs omega > 0, got {omega!r}")
    x = t.beta_hbar() * omega
    return math.exp(-x) / -math.expm1(-x)
