"""Solved states: optimized parameters plus optional phase corrections.

A SolvedState bundles the optimized trial parameters of one (label, R)
with the first-order phase corrections once attached, and serves scaled
channel arrays to the quadrature and transition code.  The
corrected channel functions are X0 exp(-phi1) and Y0 exp(-rho1); for a
single-node state the xi channel instead carries the exact local node
structure produced by the node-correction builder.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import EnergyPair, PhysicalSetup, StateLabel, p_from_energy
from .nonlinearization import (ChannelPT, NodeCorrection, first_correction_eta,
                               first_correction_xi, node_correction_xi)
from .presets import seed_for
from .quadrature import (build_rules, channel_moments, norm_from_moments,
                         rayleigh_quotient, assemble_energy)
from .trial import (ChannelArrays, TrialParams, eta_channel,
                    phase_of_trial_xi, xi_channel)
from .variational import (OptimizationResult, default_rule_size,
                          optimize_state)


@dataclass
class SolvedState:
    label: StateLabel
    setup: PhysicalSetup
    params: TrialParams
    energy: EnergyPair
    result: OptimizationResult | None = None
    pt_xi: ChannelPT | None = None
    pt_eta: ChannelPT | None = None
    node: NodeCorrection | None = None

    @property
    def corrected(self) -> bool:
        return self.pt_eta is not None

    def xi_arrays(self, nodes) -> ChannelArrays:
        nodes = np.asarray(nodes, dtype=float)
        if self.node is not None:
            return self._node_corrected_xi(nodes)
        ca = xi_channel(self.params, self.label, self.setup, nodes)
        if self.pt_xi is None:
            return ca
        damp = np.exp(-self.pt_xi.correction_phase(nodes))
        slope = self.pt_xi.correction_slope(nodes)
        return ChannelArrays(ca.vals * damp,
                             (ca.dvals - ca.vals * slope) * damp,
                             ca.logscale, nodes)

    def eta_arrays(self, nodes) -> ChannelArrays:
        nodes = np.asarray(nodes, dtype=float)
        ca = eta_channel(self.params, self.label, nodes)
        if self.pt_eta is None:
            return ca
        damp = np.exp(-self.pt_eta.correction_phase(nodes))
        slope = self.pt_eta.correction_slope(nodes)
        return ChannelArrays(ca.vals * damp,
                             (ca.dvals - ca.vals * slope) * damp,
                             ca.logscale, nodes)

    def _node_corrected_xi(self, nodes) -> ChannelArrays:
        nc = self.node
        phi, dphi, _ = phase_of_trial_xi(self.params, self.label, self.setup,
                                         nodes)
        logscale = float(np.min(phi))
        e = np.exp(-(phi - logscale))
        d = nodes - nc.xi0
        absd = np.maximum(np.abs(d), 1e-300)
        r = nc.r(nodes)
        G = d + nc.f1 + nc.c1 * d * np.log(absd) + d * r
        dG = 1.0 + nc.c1 * (np.log(absd) + 1.0) + r + d * nc.dr(nodes)
        return ChannelArrays(G * e, (dG - G * dphi) * e, logscale, nodes)

    def norm_squared(self, rules=None) -> float:
        rules = rules or self.rules()
        rx, re = rules
        cx = self.xi_arrays(rx.nodes)
        ce = self.eta_arrays(re.nodes)
        mx = channel_moments(cx, cx, rx, self.label.lam)
        me = channel_moments(ce, ce, re, self.label.lam)
        return norm_from_moments(mx, me, self.setup)

    def rayleigh(self, rules=None) -> EnergyPair:
        rules = rules or self.rules()
        rx, re = rules
        cx = self.xi_arrays(rx.nodes)
        ce = self.eta_arrays(re.nodes)
        mx = channel_moments(cx, cx, rx, self.label.lam)
        me = channel_moments(ce, ce, re, self.label.lam)
        return assemble_energy(mx, me, self.setup)

    def rules(self, N: int | None = None):
        N = N or default_rule_size(self.params.p)
        return build_rules(self.params.p, N)


def attach_corrections(state: SolvedState, rule_N: int = 96) -> SolvedState:
    """Compute and attach the first-order phase corrections in place."""
    p_phys = p_from_energy(state.energy.E_total, state.setup)
    if state.label.n == 0:
        state.pt_xi = first_correction_xi(state.params, state.label,
                                          state.setup, p_phys, rule_N)
    else:
        state.node = node_correction_xi(state.params, state.label,
                                        state.setup, p_phys, rule_N)
    state.pt_eta = first_correction_eta(state.params, state.label, p_phys,
                                        rule_N)
    return state


def correction_energy_shift(state: SolvedState) -> float:
    """|E(corrected) - E(base)|: how much the phase correction moves the
    variational energy (a quality measurement, small for a good ansatz)."""
    if not state.corrected:
        raise ValueError("state carries no corrections")
    return abs(state.rayleigh().E_total - state.energy.E_total)


def _p_landscape(state: SolvedState, corrected: bool, delta: float):
    """(argmin, min value) of E(p) by a three-point parabola at fixed
    remaining parameters, which beats direct minimization here."""
    p0 = state.params.p

    def E(p: float) -> float:
        pars = state.params.replace(p=p)
        if corrected:
            trial = SolvedState(state.label, state.setup, pars,
                                state.energy, pt_xi=state.pt_xi,
                                pt_eta=state.pt_eta, node=state.node)
            return trial.rayleigh(state.rules()).E_total
        return rayleigh_quotient(pars, state.label, state.setup,
                                 state.rules()).E_total

    d = delta * p0
    em, e0, ep = E(p0 - d), E(p0), E(p0 + d)
    curv = ep - 2.0 * e0 + em
    if curv <= 0.0:
        raise RuntimeError("no local curvature in p")
    shift = -0.5 * d * (ep - em) / curv
    return p0 + shift, e0 - 0.125 * (ep - em) ** 2 / curv


def p_reopt_shift(state: SolvedState, delta: float = 1e-4,
                  method: str = "energy") -> float:
    """Relative change of the re-optimized p caused by the correction.

    method="energy" follows the production optimizer semantics, where the
    reported p is pinned to the energy (p = p(E_min)), so the shift is the
    energy change propagated through that relation.  method="parabola"
    compares the raw 1D landscape minima instead; that raw location is a
    property of the nearly degenerate parameter valley and wanders at the
    1e-9..1e-8 level between equivalent optima, so it is exposed as a
    diagnostic only."""
    if not state.corrected:
        raise ValueError("state carries no corrections")
    p_b, e_b = _p_landscape(state, corrected=False, delta=delta)
    p_c, e_c = _p_landscape(state, corrected=True, delta=delta)
    if method == "parabola":
        return abs(p_c - p_b) / state.params.p
    if method != "energy":
        raise ValueError(f"unknown method {method!r}")
    return abs(p_from_energy(e_c, state.setup)
               - p_from_energy(e_b, state.setup)) / state.params.p


class StateBank:
    """Cache of solved states keyed by (label, R); resolves the nodeless
    prerequisite of single-node states automatically.  Plain and corrected
    requests return independent views over the shared solve, so asking for
    corrections never changes what a plain request sees."""

    def __init__(self, rule_N: int | None = None):
        self.rule_N = rule_N
        self._solves: dict = {}
        self._corrections: dict = {}

    def get(self, label: StateLabel, R: float, corrected: bool = False,
            seed: TrialParams | None = None) -> SolvedState:
        key = (label, R)
        if key not in self._solves:
            setup = PhysicalSetup(R)
            ortho = None
            if label.n == 1:
                glabel = StateLabel(0, label.m, label.lam, label.parity)
                ortho = self.get(glabel, R).params
            self._solves[key] = optimize_state(
                label, setup,
                seed if seed is not None else seed_for(label, R),
                rule_N=self.rule_N, ortho_ref=ortho)
        res = self._solves[key]
        state = SolvedState(label, res.setup, res.params, res.energy,
                            result=res)
        if corrected:
            if key not in self._corrections:
                attach_corrections(state)
                self._corrections[key] = (state.pt_xi, state.pt_eta,
                                          state.node)
            state.pt_xi, state.pt_eta, state.node = self._corrections[key]
        return state
