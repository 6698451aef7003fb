"""Independent bispectral solver for the separated channel equations.

The angular problem is solved by expanding the regularized eta factor in
normalized associated Legendre functions, which turns it into a symmetric
tridiagonal eigenproblem (the sign of the p^2 eta^2 term makes it the
oblate-type characteristic value); the radial problem by matching the
log-derivative of a power series regular at xi = 1 against an inward
integration started from the truncated asymptotic phase.  A bound state
is the joint root in (E, A): every mismatch evaluation recomputes
p -> A(p) -> radial defect, and the root in E is bracketed on a window
around the seed, with candidate roots filtered by interior node count.

This solver shares no code path with the trial-function machinery, so it
serves as the ground truth for the variational results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.linalg import eigh_tridiagonal
from scipy.optimize import brentq

from .model import PhysicalSetup, StateLabel, p_from_energy


class AngularConvergenceError(RuntimeError):
    def __init__(self, trend):
        self.trend = trend
        super().__init__(f"angular basis not converged; trend {trend}")


class RadialRootError(RuntimeError):
    """No radial root with the requested node count inside the window."""


class OracleConvergenceError(RuntimeError):
    """Joint (E, A) iteration failed to settle."""


@dataclass(frozen=True)
class OracleResult:
    label: StateLabel
    setup: PhysicalSetup
    E_total: float
    A: float
    p: float
    angular_basis_size: int
    radial_mismatch: float
    bracket_iterations: int


# ----------------------------------------------------------------------
# angular channel


def angular_eigenvalue(p: float, lam: int, m: int, parity: int,
                       K0: int = 24, return_size: bool = False):
    """Separation constant A(p) of the eta channel.

    Basis: normalized P_l^lam with l = lam + sigma + 2k; the m-th
    eigenvalue within the parity class is selected.  The basis doubles
    until the eigenvalue stops moving at the eigensolver noise floor.
    """
    sigma = 0 if parity == +1 else 1
    c2 = -p * p
    K = K0 + lam
    prev = None
    trend = []
    while K <= 4096:
        ls = np.arange(lam + sigma, lam + sigma + 2 * K, 2, dtype=float)

        def acoef(l):
            return np.sqrt(((l + 1.0) ** 2 - lam**2)
                           / ((2.0 * l + 1.0) * (2.0 * l + 3.0)))

        a_l = acoef(ls)
        a_lm1 = acoef(ls - 1.0)
        diag = ls * (ls + 1.0) + c2 * (a_l**2
                                       + np.where(ls > lam, a_lm1**2, 0.0))
        off = c2 * acoef(ls[:-1]) * acoef(ls[:-1] + 1.0)
        mu = eigh_tridiagonal(diag, off, select="i",
                              select_range=(m, m))[0][0]
        A = lam * (lam + 1.0) - mu
        trend.append((K, A))
        tol = max(1e-13 * max(1.0, abs(A)),
                  8e-16 * float(np.max(np.abs(diag))))
        if prev is not None and abs(A - prev) < tol:
            return (A, K) if return_size else A
        prev = A
        K *= 2
    raise AngularConvergenceError(trend)


# ----------------------------------------------------------------------
# radial channel


class StiffIntegrationError(RuntimeError):
    def __init__(self, message, step_diag):
        self.step_diag = step_diag
        super().__init__(f"{message}; integrator diagnostics {step_diag}")


def _series_start(E_prime: float, A: float, setup: PhysicalSetup, lam: int,
                  t0: float = 1e-4, terms: int = 16):
    """Frobenius start of the regular solution at xi = 1 + t0, X(1) = 1."""
    p2 = -E_prime * setup.R**2 / 4.0
    b = (setup.Z1 + setup.Z2) * setup.R
    cs = [1.0, -(A + b - p2) / (2.0 * (lam + 1.0))]
    for k in range(1, terms):
        cm2 = cs[k - 2] if k >= 2 else 0.0
        nxt = -(((k * (k - 1.0) + 2.0 * (lam + 1.0) * k + A + b - p2) * cs[k])
                + (b - 2.0 * p2) * cs[k - 1] - p2 * cm2) \
            / (2.0 * (k + 1.0) * (k + lam + 1.0))
        cs.append(nxt)
    X = sum(c * t0**k for k, c in enumerate(cs))
    dX = sum(k * c * t0 ** (k - 1) for k, c in enumerate(cs) if k >= 1)
    return X, dX


def _match_point(p: float) -> float:
    # near or inside the classically allowed sliver at xi = 1 for every
    # tabulated R; going far beyond it de-conditions the outward branch
    return 1.0 + min(1.0, 4.0 / p)


# beyond this turning radius a channel is effectively at threshold and the
# energy window is clipped instead of integrating an unbounded domain
_XI_TURN_CAP = 2.5e4


def threshold_margin(setup: PhysicalSetup) -> float:
    """Energies closer to E' = 0 than this are outside the solver's domain
    (the factor-2 headroom over the turning-radius cap absorbs the
    separation-constant contribution to the turning point)."""
    return 8.0 * (setup.Z1 + setup.Z2) / (_XI_TURN_CAP * setup.R)


def radial_solution(E_total: float, A: float, setup: PhysicalSetup, lam: int,
                    rtol: float = 1e-13, count_nodes: bool = True,
                    npts: int = 700):
    """Scaled Wronskian mismatch of the two radial branches, and the
    interior node count of the glued solution."""
    E_prime = E_total - setup.repulsion
    if E_prime >= 0.0:
        raise ValueError("radial solution needs a bound channel (E' < 0)")
    p = math.sqrt(-E_prime) * setup.R / 2.0
    p2 = p * p
    b = (setup.Z1 + setup.Z2) * setup.R

    def rhs(xi, y):
        X, dX = y
        ddX = -(2.0 * (lam + 1.0) * xi * dX
                + (A + b * xi - p2 * xi * xi) * X) / (xi * xi - 1.0)
        return (dX, ddX)

    xm = _match_point(p)
    t0 = 1e-4
    X0, dX0 = _series_start(E_prime, A, setup, lam, t0)
    out = solve_ivp(rhs, (1.0 + t0, xm), (X0, dX0), method="DOP853",
                    rtol=rtol, atol=1e-250, dense_output=count_nodes)
    # inward start: a fixed decay margin beyond the outer turning point
    xi_turn = (b + math.sqrt(b * b + 4.0 * p2 * max(A, 0.0))) / (2.0 * p2)
    if xi_turn > _XI_TURN_CAP:
        raise StiffIntegrationError(
            "channel too close to threshold",
            {"xi_turn": xi_turn, "p": p})
    xmax = max(xm, xi_turn) + 18.0 / p
    kap = b / (2.0 * p)
    Bc = (A + (kap - lam - 1.0) * (kap + lam)) / p - p
    dphase = p - (kap - lam - 1.0) / xmax - Bc / (2.0 * xmax * xmax)
    inn = solve_ivp(rhs, (xmax, xm), (1.0, -dphase), method="DOP853",
                    rtol=rtol, atol=1e-250, dense_output=count_nodes)
    if not (out.success and inn.success):
        raise StiffIntegrationError(
            "radial integration failed",
            {"outward": out.message, "inward": inn.message,
             "steps": (out.t.size, inn.t.size)})
    Xo, dXo = out.y[0][-1], out.y[1][-1]
    Xi_, dXi = inn.y[0][-1], inn.y[1][-1]
    W = dXo * Xi_ - dXi * Xo
    scale = abs(dXo * Xi_) + abs(dXi * Xo)
    mism = W / scale if scale > 0.0 else math.inf
    if not count_nodes:
        return mism, -1
    go = out.sol(np.linspace(1.0 + t0, xm, npts))[0]
    gi = inn.sol(np.linspace(xm, xmax, npts))[0]
    if Xi_ != 0.0:
        gi = gi * (Xo / Xi_)
    glued = np.concatenate([go, gi])
    s = np.sign(glued)
    s = s[s != 0.0]
    nodes = int(np.sum(s[:-1] * s[1:] < 0.0))
    return mism, nodes


def radial_mismatch(E_total: float, A: float, setup: PhysicalSetup, lam: int,
                    n: int) -> float:
    """Log-derivative mismatch at the matching point; raises when the
    interior node count differs from n."""
    mism, nodes = radial_solution(E_total, A, setup, lam)
    if nodes != n:
        raise RadialRootError(
            f"node count {nodes} != {n} at E={E_total} (A={A})")
    return mism


# ----------------------------------------------------------------------
# joint solve


def _live_mismatch(E: float, label: StateLabel, setup: PhysicalSetup,
                   count_nodes: bool = False):
    p = p_from_energy(E, setup)
    A = angular_eigenvalue(p, label.lam, label.m, label.parity)
    return radial_solution(E, A, setup, label.lam,
                           count_nodes=count_nodes)


def find_root(label: StateLabel, setup: PhysicalSetup, E_seed: float,
              window: float = 2e-4, grid: int = 9,
              max_expand: int = 40) -> tuple[float, int]:
    """Nearest bispectral root with the right node count around E_seed."""
    w = window
    E_hi = setup.repulsion - threshold_margin(setup)
    expansions = 0
    for _ in range(max_expand):
        lo = E_seed - w
        hi = min(E_seed + w, E_hi)
        Es = np.linspace(lo, hi, grid)
        vals = [_live_mismatch(E, label, setup)[0] for E in Es]
        roots = []
        for i in range(len(Es) - 1):
            if vals[i] * vals[i + 1] < 0.0:
                r = brentq(lambda E: _live_mismatch(E, label, setup)[0],
                           Es[i], Es[i + 1], xtol=5e-15, rtol=8.9e-16)
                roots.append(r)
        good = [r for r in roots
                if _live_mismatch(r, label, setup, count_nodes=True)[1]
                == label.n]
        if good:
            return min(good, key=lambda r: abs(r - E_seed)), expansions
        w *= 2.5
        expansions += 1
    raise RadialRootError(
        f"no bispectral root with n={label.n} near E={E_seed}")


def hydrogenic_seed(label: StateLabel, setup: PhysicalSetup) -> float:
    """Coalesced-centers estimate: E' of the (Z1+Z2) one-center ion."""
    Z = setup.Z1 + setup.Z2
    return -(Z / label.atomic_n) ** 2 + setup.repulsion


def solve_bispectral(label: StateLabel, setup: PhysicalSetup,
                     E_seed: float | None = None,
                     max_sweeps: int = 100) -> OracleResult:
    """Joint (E, A) solve; E_seed defaults to the one-center estimate."""
    E = E_seed if E_seed is not None else hydrogenic_seed(label, setup)
    window = 2e-4 if E_seed is not None else 0.05 * max(1.0, abs(E))
    brackets = 0
    for sweep in range(max_sweeps):
        E_new, exps = find_root(label, setup, E, window=window)
        brackets += exps + 1
        if abs(E_new - E) <= 1e-12:
            E = E_new
            break
        E = E_new
        window = 2e-4
    else:
        raise OracleConvergenceError(
            f"no settle after {max_sweeps} sweeps (last E {E})")
    p = p_from_energy(E, setup)
    A, K = angular_eigenvalue(p, label.lam, label.m, label.parity,
                              return_size=True)
    mism, nodes = radial_solution(E, A, setup, label.lam)
    if nodes != label.n:
        raise RadialRootError(f"converged to wrong node count {nodes}")
    return OracleResult(label, setup, E, A, p, K, mism, brackets)
