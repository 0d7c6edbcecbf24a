"""Single-mode approximation near the localized resonance.

The scatterer is replaced by ``E_l |psi_l><psi_l|`` with ``psi_l`` the
analytic localized mode.  Only the edge amplitudes ``b_1`` and ``b_N``
and the node-atom weight ``|alpha|^2`` enter.  Projecting the
eigen-equation on lead sites 0, N+1 and on ``psi_l`` gives

    (D' + i G |alpha|^2 / 2) mu + eta b_1 (1 + r) + t eta b_N e^{ik(N+1)} = 0
    eta b_1 mu = e^{ik} + r e^{-ik}
    eta b_N mu = t e^{ikN}

with ``D' = E_k - E_l``.  For ``b_N = 0`` this closes on ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .model import ModelParams, Role, classify_site, sc_mode_energy, wavevector
from .modes import Which, localized_mode_analytic
from .scattering import solve_scattering


class UnsupportedConfigurationError(ValueError):
    """Both SC edges carry mode amplitude; the closed forms do not apply."""


@dataclass(frozen=True)
class SingleModeInputs:
    delta_prime: float
    k: float
    eta: float
    b1: float
    bN: float
    alpha_sq: float
    Gamma: float = 0.0

    def __post_init__(self):
        if self.b1 != 0 and self.bN != 0:
            raise UnsupportedConfigurationError(
                f"single-mode closed forms need b1 = 0 or bN = 0, got b1={self.b1!r}, bN={self.bN!r}"
            )

    @property
    def width(self) -> float:
        """Decay half-width ``Gamma |alpha|^2 / 2`` of the mode."""
        return self.Gamma * self.alpha_sq / 2.0

    @property
    def beta(self) -> complex:
        return 1j * self.eta * self.b1 / (self.width - 1j * self.delta_prime)


def _blocked(inputs: SingleModeInputs) -> complex:
    # b1 = 0: the mode is invisible from the left, the left wall reflects
    return -np.exp(2j * inputs.k)


def reflection_no_decay(inputs: SingleModeInputs) -> complex:
    """Reflection amplitude without decay; ``|r| = 1``."""
    if inputs.b1 == 0:
        return _blocked(inputs)
    g = (inputs.eta * inputs.b1) ** 2
    dp, ek = inputs.delta_prime, np.exp(1j * inputs.k)
    return -(dp * ek + g) / (dp / ek + g)


def reflection_with_decay(inputs: SingleModeInputs) -> complex:
    """Reflection amplitude with the node atom decaying at rate ``Gamma``."""
    if inputs.b1 == 0:
        return _blocked(inputs)
    if inputs.width == 0:
        return reflection_no_decay(inputs)
    x = inputs.eta * inputs.b1 * inputs.beta
    ek = np.exp(1j * inputs.k)
    return (ek - x) / (x - 1 / ek)


def mode_amplitude(inputs: SingleModeInputs, r: complex) -> complex:
    """Amplitude ``mu`` of the localized mode for a given reflection ``r``."""
    if inputs.b1 == 0:
        return 0j
    return (np.exp(1j * inputs.k) + r * np.exp(-1j * inputs.k)) / (inputs.eta * inputs.b1)


def single_mode_inputs(params: ModelParams, mode: int, delta_prime: float) -> SingleModeInputs:
    """Inputs for the closed forms, taken from the analytic localized mode."""
    n1, n2 = params.atom_sites
    if classify_site(n1, mode, params.n_cavities).tag is Role.NODE:
        which = Which.FIRST
    elif classify_site(n2, mode, params.n_cavities).tag is Role.NODE:
        which = Which.SECOND
    else:
        raise UnsupportedConfigurationError(f"neither atom sits at a node of mode {mode}")
    loc = localized_mode_analytic(params, mode, which)
    _, e_l = sc_mode_energy(params, mode)
    amps = loc.amplitudes.real
    return SingleModeInputs(
        delta_prime=delta_prime,
        k=wavevector(params, e_l + delta_prime),
        eta=params.eta,
        b1=float(amps[0]),
        bN=float(amps[params.n_cavities - 1]),
        alpha_sq=loc.atom_weights[which.value],
        Gamma=params.gamma,
    )


def compare_near_resonance(
    params: ModelParams, mode: int, deltas: Sequence[float]
) -> List[Tuple[float, float, float]]:
    """``(delta, R_exact, R_single_mode)`` for each detuning from ``E_mode``."""
    out = []
    for delta in deltas:
        inputs = single_mode_inputs(params, mode, float(delta))
        exact = solve_scattering(params, inputs.k, decaying=True)
        r_sm = reflection_with_decay(inputs)
        out.append((float(delta), exact.R, abs(r_sm) ** 2))
    return out
