"""Coalesced-centers (R -> 0) limit machinery.

As R -> 0 the two-center problem flows to the one-center ion of charge
Z = Z1 + Z2: R xi -> 2r, eta -> cos(theta), and R/p approaches the
principal quantum number of the limiting atomic orbital.  This module
provides the hydrogenic references, the symbolic limit descriptors, and
numerical convergence probes along a fixed geometric R sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import eval_genlaguerre, lpmv

from .model import (PhysicalSetup, StateLabel, limit_constant,
                    united_atom_designation)
from .oracle import OracleResult, solve_bispectral


@dataclass(frozen=True)
class HydrogenicOrbital:
    """Closed-form one-electron orbital of a Z-charged nucleus."""

    n: int
    l: int
    m: int
    Z: float

    @property
    def energy(self) -> float:
        """Total energy -Z^2/n^2 in Ry."""
        return -(self.Z / self.n) ** 2

    def radial(self, r):
        """Normalized radial factor R_nl(r), r in bohr."""
        r = np.asarray(r, dtype=float)
        n, l, Z = self.n, self.l, self.Z
        rho = 2.0 * Z * r / n
        norm = math.sqrt((2.0 * Z / n) ** 3
                         * math.factorial(n - l - 1)
                         / (2.0 * n * math.factorial(n + l)))
        with np.errstate(under="ignore"):
            out = norm * np.exp(-0.5 * rho) * rho**l \
                * eval_genlaguerre(n - l - 1, 2 * l + 1, rho)
        return out if out.ndim else float(out)

    def angular(self, theta):
        """Theta factor of the (unnormalized in phi) spherical harmonic."""
        theta = np.asarray(theta, dtype=float)
        l, m = self.l, self.m
        norm = math.sqrt((2 * l + 1) / (4.0 * math.pi)
                         * math.factorial(l - m) / math.factorial(l + m))
        out = norm * lpmv(m, l, np.cos(theta))
        return out if out.ndim else float(out)

    def __call__(self, r, theta, phi):
        return self.radial(r) * self.angular(theta) \
            * np.exp(1j * self.m * np.asarray(phi, dtype=float))


def hydrogenic_reference(n: int, l: int, m: int, Z: float = 2.0) -> HydrogenicOrbital:
    """Closed-form orbital handle with E = -Z^2/n^2 Ry."""
    if not (0 <= m <= l < n):
        raise ValueError(f"bad quantum numbers (n,l,m)=({n},{l},{m})")
    return HydrogenicOrbital(n, l, m, Z)


@dataclass(frozen=True)
class LimitForm:
    """Symbolic descriptor of the R -> 0 limit of a molecular label."""

    label: StateLabel
    designation: str
    orbital: tuple          # (n, l, m) of the limiting atomic orbital
    constant: Fraction | None  # constant term of the polynomial factor


def limit_form(label: StateLabel) -> LimitForm:
    name = united_atom_designation(label)
    if name is None:
        raise KeyError(f"no tabulated limit for {label}")
    return LimitForm(label, name,
                     (label.atomic_n, label.atomic_l, label.lam),
                     limit_constant(label))


@dataclass(frozen=True)
class LimitProbePoint:
    R: float
    E_total: float
    E_prime: float
    R_over_p: float
    A: float


def limit_convergence_probe(label: StateLabel, R_sequence=None,
                            Z: float = 2.0) -> dict:
    """Track R/p -> n and E' -> -Z^2/n^2 along a sequence R -> 0."""
    if R_sequence is None:
        R_sequence = [0.5 * 2.0**-k for k in range(5)]
    form = limit_form(label)
    n_atomic = form.orbital[0]
    points = []
    for R in sorted(R_sequence, reverse=True):
        res: OracleResult = solve_bispectral(label, PhysicalSetup(R))
        E_prime = res.E_total - res.setup.repulsion
        points.append(LimitProbePoint(R, res.E_total, E_prime,
                                      R / res.p, res.A))
    E_lim = -(Z / n_atomic) ** 2
    return {
        "points": points,
        "n_atomic": n_atomic,
        "E_prime_limit": E_lim,
        "R_over_p_errors": [abs(pt.R_over_p - n_atomic) for pt in points],
        "E_prime_errors": [abs(pt.E_prime - E_lim) for pt in points],
    }
