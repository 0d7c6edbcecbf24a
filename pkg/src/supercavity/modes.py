"""Eigenmodes of the scatterer and the analytic localized mode.

When an atom resonant with empty-SC mode ``l`` sits at a node of that
mode, ``E_l`` stays an eigenvalue of the scatterer.  The eigenvector is a
standing wave confined between the node atom and one SC wall; the photon
amplitude vanishes on the far side and the other atom is not excited.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .model import ModelParams, Role, build_scatterer, classify_site, sc_mode_energy
from .numerics import eigen

RESONANCE_TOL = 1e-10
LOCALIZATION_TOL = 1e-9


class ContractError(ValueError):
    """Preconditions of an analytic construction are not met."""


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    DELOCALIZED = "delocalized"


class Which(enum.Enum):
    FIRST = 0
    SECOND = 1


@dataclass(frozen=True)
class EigenMode:
    """An eigenpair of the scatterer in the basis of :mod:`supercavity.model`."""

    eigenvalue: complex
    amplitudes: np.ndarray
    atom_sites: Tuple[int, int]

    @property
    def n_cavities(self) -> int:
        return len(self.amplitudes) - 2

    @property
    def cavity_amplitudes(self) -> np.ndarray:
        return self.amplitudes[: self.n_cavities]

    @property
    def atom_amplitudes(self) -> np.ndarray:
        return self.amplitudes[self.n_cavities :]

    @property
    def atom_weights(self) -> Tuple[float, float]:
        w = np.abs(self.atom_amplitudes) ** 2
        return float(w[0]), float(w[1])

    def weight_left_of(self, site: int) -> float:
        """Photon weight on cavities ``1 .. site``."""
        return float(np.sum(np.abs(self.cavity_amplitudes[:site]) ** 2))

    def weight_right_of(self, site: int) -> float:
        """Photon weight on cavities ``site .. N``."""
        return float(np.sum(np.abs(self.cavity_amplitudes[site - 1 :]) ** 2))


def _node_atom(params: ModelParams, mode: int, which: Which) -> int:
    site = params.atom_sites[which.value]
    role = classify_site(site, mode, params.n_cavities)
    if role.tag is not Role.NODE:
        raise ContractError(
            f"atom {which.value + 1} at site {site} is not at a node of mode {mode} "
            f"(sin = {role.amplitude:.3e})"
        )
    return site


def localized_mode_analytic(params: ModelParams, mode: int, which: Which = Which.FIRST) -> EigenMode:
    """Closed-form localized eigenmode of ``H_S`` at energy ``E_mode``.

    With the node atom ``which`` at cavity ``n``, the photon profile is
    ``sin(k j)`` on ``1..n`` (``FIRST``) or ``sin(k (N+1-j))`` on ``n..N``
    (``SECOND``), zero elsewhere.  The node atom amplitude follows from the
    cavity-``n`` row of ``H_S``: ``Omega * alpha = xi * b_{n-/+1}``.
    The norm is ``1 / sqrt(m/2 + xi^2 sin^2 k / Omega^2)`` with ``m`` the
    number of cavities in the support.
    """
    k, e_l = sc_mode_energy(params, mode)
    if not np.isclose(params.omega_a, e_l, rtol=0.0, atol=1e-12):
        raise ContractError(f"omega_a={params.omega_a!r} is not resonant with E_{mode}={e_l!r}")
    if params.omega_rabi == 0:
        raise ContractError("the localized mode needs a nonzero atom-cavity coupling")
    site = _node_atom(params, mode, which)
    n, xi, om = params.n_cavities, params.xi, params.omega_rabi

    j = np.arange(1, n + 1)
    if which is Which.FIRST:
        support = j < site
        profile = np.where(support, np.sin(k * j), 0.0)
        neighbour = site - 1
        m = site
    else:
        support = j > site
        profile = np.where(support, np.sin(k * (n + 1 - j)), 0.0)
        neighbour = site + 1
        m = n + 1 - site
    # the node cavity itself carries sin(m k) = 0 exactly
    alpha = xi * profile[neighbour - 1] / om
    norm = 1.0 / np.sqrt(m / 2.0 + (xi * np.sin(k) / om) ** 2)

    amps = np.zeros(n + 2, dtype=complex)
    amps[:n] = profile
    amps[n + which.value] = alpha
    return EigenMode(complex(e_l), amps * norm, params.atom_sites)


def numerical_mode(params: ModelParams, mode: int, decaying: bool = False) -> EigenMode:
    """Eigenpair of the scatterer whose eigenvalue is closest to ``E_mode``."""
    _, e_l = sc_mode_energy(params, mode)
    dec = eigen(build_scatterer(params, decaying).entries)
    i = dec.nearest(e_l)
    return EigenMode(complex(dec.eigenvalues[i]), dec.eigenvectors[:, i].copy(), params.atom_sites)


def resonance_survives(params: ModelParams, mode: int, tol: float = RESONANCE_TOL) -> bool:
    """Whether ``E_mode`` is still an eigenvalue of the decay-free scatterer."""
    _, e_l = sc_mode_energy(params, mode)
    dec = eigen(build_scatterer(params, decaying=False).entries)
    return bool(np.min(np.abs(dec.eigenvalues - e_l)) <= tol)


def localization_side(mode: EigenMode, node_site: int, tol: float = LOCALIZATION_TOL) -> Side:
    """Which side of the node atom at ``node_site`` holds the mode.

    The atom sitting at ``node_site`` counts toward either side; the other
    atom and the photon weight beyond the node count against it.
    """
    try:
        node_atom: Optional[int] = mode.atom_sites.index(node_site)
    except ValueError:
        node_atom = None
    atom_w = mode.atom_weights[node_atom] if node_atom is not None else 0.0
    total = float(np.sum(np.abs(mode.amplitudes) ** 2))
    if mode.weight_left_of(node_site) + atom_w >= (1.0 - tol) * total:
        return Side.LEFT
    if mode.weight_right_of(node_site) + atom_w >= (1.0 - tol) * total:
        return Side.RIGHT
    return Side.DELOCALIZED
