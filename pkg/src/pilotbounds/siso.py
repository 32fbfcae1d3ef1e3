"""Scalar-channel spectral-efficiency bounds and power offsets.

All quantities are in bits/s/Hz over a Rayleigh block-fading channel
whose gain is constant for T symbols and redrawn independently per
block.  tau of the T symbols carry known pilots.

Three spectral efficiencies are computed:

* capacity_csi: ergodic capacity with the channel known perfectly.
* separate_bound: estimate the channel from pilots (MMSE), then decode
  treating the estimate as exact; the pilot count is optimized.
* joint_bound_j1 / joint_bound_j2: closed-form lower bounds on the
  mutual information when pilot and data observations are decoded
  together; j2 relaxes j1 through one Jensen step, so j2 <= j1.

High-SNR comparisons are reported as PowerOffset values in 3-dB units:
the horizontal spacing between log2-scale asymptotes.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
from scipy import optimize

from .expint import EULER_GAMMA, LOG2E, eps1_array, expint_scaled, expint_scaled_sum
from .params import DB_PER_UNIT, PowerOffset, SisoParams, SnrValue, linear_snr

_OFFSET_BRACKET_DB = 60.0


class SeparateBound(NamedTuple):
    value: float
    tau_star: int


class PilotSearch(NamedTuple):
    tau_star: int
    value: float
    tau_star_continuous: float


class TrueCapacityGap(NamedTuple):
    exact: PowerOffset
    stirling: PowerOffset
    gap_exact: PowerOffset
    gap_stirling: PowerOffset


def capacity_csi(snr) -> float:
    """Perfect-CSI ergodic capacity log2(e) * eps_1(1/snr) in bits/s/Hz."""
    s = linear_snr(snr)
    return LOG2E * expint_scaled(1, 1.0 / s).scaled_value


def mmse_estimate_variance(tau: int, snr) -> float:
    """Estimation-error variance 1/(1 + snr*tau) of the pilot-based
    MMSE channel estimate; requires at least one pilot."""
    if isinstance(tau, bool) or not isinstance(tau, int):
        raise ValueError(f"tau must be an integer, got {tau!r}")
    if tau < 1:
        raise ValueError(f"channel estimation needs tau >= 1, got {tau}")
    s = linear_snr(snr)
    return 1.0 / (1.0 + s * tau)


def snr_effective(tau: int, snr) -> SnrValue:
    """Post-estimation SNR snr*(1 - mmse)/(1 + snr*mmse); always < snr."""
    s = linear_snr(snr)
    m = mmse_estimate_variance(tau, s)
    return SnrValue(s * (1.0 - m) / (1.0 + s * m))


def separate_bound(T: int, snr) -> SeparateBound:
    """Best separate-processing efficiency max_tau (1 - tau/T) * C(snr_eff).

    The maximization over integer tau in [1, T-1] is exhaustive; ties
    resolve to the smallest tau.
    """
    if isinstance(T, bool) or not isinstance(T, int) or T < 2:
        raise ValueError(f"T must be an integer >= 2, got {T!r}")
    s = linear_snr(snr)
    taus = np.arange(1, T, dtype=float)
    mmse = 1.0 / (1.0 + s * taus)
    eff = s * (1.0 - mmse) / (1.0 + s * mmse)
    values = (1.0 - taus / T) * (LOG2E * eps1_array(1.0 / eff))
    best = int(np.argmax(values))
    return SeparateBound(value=float(values[best]), tau_star=best + 1)


def joint_bound_j1(p: SisoParams) -> float:
    """Joint-processing lower bound

        (1 - tau/T) * C(snr) - (log2 e / T) * sum_{k=1}^{T-tau} eps_k(tau + 1/snr).

    tau = 0 gives the data-only (no pilot) form of the same bound.
    """
    s = p.snr.linear
    c = capacity_csi(p.snr)
    return (1.0 - p.tau / p.T) * c - LOG2E * expint_scaled_sum(p.T - p.tau, p.tau + 1.0 / s) / p.T


def joint_bound_j2(p: SisoParams) -> float:
    """Jensen-relaxed joint bound

        (1 - tau/T) * C(snr) - (1/T) * log2((1 + snr*T)/(1 + snr*tau)).
    """
    s = p.snr.linear
    c = capacity_csi(p.snr)
    return (1.0 - p.tau / p.T) * c - math.log2((1.0 + s * p.T) / (1.0 + s * p.tau)) / p.T


_JOINT_BOUNDS = {"j1": joint_bound_j1, "j2": joint_bound_j2}


def optimize_pilots_joint(T: int, snr, which: str = "j1") -> PilotSearch:
    """Exhaustive pilot-count search for the selected joint bound.

    Searches integer tau in [0, T-1]; ties resolve to the smallest tau.
    The continuous relaxation tau* = log2(e)/C - 1/snr is reported for
    reference only (it lies in [0, 1], up to float cancellation at
    extreme SNR) and never decides the integer answer.
    """
    if which not in _JOINT_BOUNDS:
        raise ValueError(f"which must be one of {sorted(_JOINT_BOUNDS)}, got {which!r}")
    bound = _JOINT_BOUNDS[which]
    s = linear_snr(snr)
    best_tau = 0
    best_val = -math.inf
    for tau in range(T):
        v = bound(SisoParams(T=T, tau=tau, snr=SnrValue(s)))
        if v > best_val:
            best_tau, best_val = tau, v
    continuous = LOG2E / capacity_csi(s) - 1.0 / s
    return PilotSearch(tau_star=best_tau, value=best_val, tau_star_continuous=continuous)


def asymptote_j1(T: int) -> float:
    """High-SNR penalty of the joint bound at tau = 1, in 3-dB units:
    log2(e) * sum_{k=1}^{T-1} eps_k(1) / (T - 1)."""
    _check_blocklength(T)
    return LOG2E * expint_scaled_sum(T - 1, 1.0) / (T - 1)


def asymptote_j2(T: int) -> float:
    """High-SNR penalty of the Jensen-relaxed bound: log2(T)/(T-1)."""
    _check_blocklength(T)
    return math.log2(T) / (T - 1)


def _check_blocklength(T) -> None:
    if isinstance(T, bool) or not isinstance(T, int) or T < 2:
        raise ValueError(f"T must be an integer >= 2, got {T!r}")


def advantage_units(effective_T: float) -> float:
    """Asymptotic joint-over-separate advantage 1 - log2(T)/(T-1) for a
    (possibly fractional) blocklength, in 3-dB units."""
    effective_T = float(effective_T)
    if effective_T <= 1.0:
        raise ValueError(f"effective blocklength must exceed 1, got {effective_T}")
    return 1.0 - math.log2(effective_T) / (effective_T - 1.0)


def power_advantage_asymptotic(T: int) -> PowerOffset:
    """High-SNR power advantage of joint over separate processing."""
    _check_blocklength(T)
    return PowerOffset(advantage_units(T))


def power_advantage_at_snr(T: int, snr) -> PowerOffset:
    """Finite-SNR power advantage: the dB shift delta solving

        separate_bound(T, snr * 10^(delta/10)).value = joint_bound_j2(T, 1, snr).

    Strict monotonicity of the separate bound in SNR makes the root
    unique.  At small T and finite SNR the separate bound can already
    exceed the joint bound, so delta may be negative; the bisection
    bracket is [-60, +60] dB and the root is located to 1e-6 dB.
    """
    s = linear_snr(snr)
    target = joint_bound_j2(SisoParams(T=T, tau=1, snr=SnrValue(s)))

    def gap(delta_db: float) -> float:
        return separate_bound(T, s * 10.0 ** (delta_db / 10.0)).value - target

    lo, hi = -_OFFSET_BRACKET_DB, _OFFSET_BRACKET_DB
    if gap(lo) * gap(hi) > 0.0:
        raise RuntimeError(
            f"offset saturated: no crossing within +/-{_OFFSET_BRACKET_DB} dB "
            f"for T={T}, snr={s!r}"
        )
    root_db = optimize.bisect(gap, lo, hi, xtol=1e-6)
    return PowerOffset(root_db / DB_PER_UNIT)


def single_pilot_advantage(T: int) -> PowerOffset:
    """High-SNR gain of one pilot over none: gamma*log2(e)/T units."""
    _check_blocklength(T)
    return PowerOffset(EULER_GAMMA * LOG2E / T)


def true_capacity_gap(T: int) -> TrueCapacityGap:
    """Penalty of the true noncoherent capacity asymptote and its gap
    to the Jensen-relaxed joint bound, in 3-dB units.

    exact penalty:    log2(e^{T-1} (T-1)! / T^{T-1}) / (T-1)
    stirling penalty: log2(T) / (2 (T-1))

    The factorial enters through log-gamma, so no overflow.  The gaps
    subtract each penalty from the joint-bound penalty log2(T)/(T-1);
    with Stirling the gap equals the penalty exactly.
    """
    _check_blocklength(T)
    log2_ratio = LOG2E * ((T - 1) + math.lgamma(T) - (T - 1) * math.log(T))
    pen_exact = log2_ratio / (T - 1)
    pen_stirling = 0.5 * math.log2(T) / (T - 1)
    pi_j2 = asymptote_j2(T)
    return TrueCapacityGap(
        exact=PowerOffset(pen_exact),
        stirling=PowerOffset(pen_stirling),
        gap_exact=PowerOffset(pi_j2 - pen_exact),
        gap_stirling=PowerOffset(pi_j2 - pen_stirling),
    )


def low_power_expansion_check(p: SisoParams) -> float:
    """Residual of the joint bound against its second-order expansion

        log2(e) * [ m*(snr - snr^2) - (m*snr - sum_{k=1}^{m}(k+tau)*snr^2) ] / T

    with m = T - tau.  The residual is O(snr^3); callers assert the
    constant.  Only meaningful for snr <= 0.01.
    """
    s = p.snr.linear
    if s > 0.01:
        raise ValueError(f"expansion check requires snr <= 0.01, got {s!r}")
    m = p.T - p.tau
    coeff = m * (m + 1) / 2 + m * p.tau
    model = LOG2E * (m * (s - s * s) - (m * s - coeff * s * s)) / p.T
    return abs(joint_bound_j1(p) - model)
