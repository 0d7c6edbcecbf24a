"""Steady-state photon current inside the super cavity.

The current on the bond between cavities ``j`` and ``j+1`` with hopping
``h`` is ``J_j = 2 h Im(C_j^* C_{j+1})``; a unit plane wave carries
``2 xi sin k``.  In steady state the current drops only at atom sites,
by ``gamma |d_i|^2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scattering import ScatteringSolution


@dataclass(frozen=True)
class FlowProfile:
    """Bond currents inside the SC.

    ``bonds[j - 1]`` is the current from cavity ``j`` to ``j + 1``
    (``j = 1 .. N-1``).  ``j_steady`` is the plateau carried by the bonds
    in front of the first atom, i.e. the current entering the super cavity;
    ``j_out`` leaves it through the right wall.
    """

    bonds: np.ndarray
    j_in: float
    j_steady: float
    j_out: float

    @property
    def leakage_ratio(self) -> float:
        """Fraction of the incident current that stays in the SC and is absorbed."""
        return (self.j_steady - self.j_out) / self.j_in

    def rows(self):
        return [(j + 1, float(v)) for j, v in enumerate(self.bonds)]


def bond_current(left: complex, right: complex, hopping: float) -> float:
    return 2.0 * hopping * float(np.imag(np.conj(left) * right))


def photon_flow(solution: ScatteringSolution) -> FlowProfile:
    """Bond currents of a scattering solution and the entering plateau."""
    c = solution.c
    xi = solution.params.xi
    bonds = 2.0 * xi * np.imag(np.conj(c[:-1]) * c[1:])
    _, into_sc, out_of_sc, _ = lead_currents(solution)
    first_atom = solution.params.atom_sites[0]
    plateau = bonds[: first_atom - 1]
    j_steady = float(plateau.mean()) if plateau.size else into_sc
    return FlowProfile(bonds, solution.incident_flow, j_steady, out_of_sc)


def lead_currents(solution: ScatteringSolution):
    """Currents on the bonds ``(-1, 0)``, ``(0, 1)``, ``(N, N+1)`` and ``(N+1, N+2)``."""
    p = solution.params
    n = p.n_cavities
    amp = solution.amplitude
    return (
        bond_current(amp(-1), amp(0), p.xi),
        bond_current(amp(0), amp(1), p.eta),
        bond_current(amp(n), amp(n + 1), p.eta_r),
        bond_current(amp(n + 1), amp(n + 2), p.xi),
    )


def site_divergence(solution: ScatteringSolution) -> np.ndarray:
    """Inflow minus outflow on each SC cavity ``1 .. N``."""
    _, into_sc, out_of_sc, _ = lead_currents(solution)
    bonds = photon_flow(solution).bonds
    inflow = np.concatenate(([into_sc], bonds))
    outflow = np.concatenate((bonds, [out_of_sc]))
    return inflow - outflow


def leakage_consistency(solution: ScatteringSolution, profile: FlowProfile) -> float:
    """Worst violation of ``R + T + L = 1`` and of flow-vs-population leakage."""
    lr = profile.leakage_ratio
    return max(
        abs(solution.R + solution.T + lr - 1.0),
        abs(lr - solution.absorbed),
    )
