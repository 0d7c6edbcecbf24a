"""Exact single-photon scattering off the super cavity.

A unit-amplitude plane wave ``e^{ikj}`` arrives from the left lead.  The
stationary state is

    C_j = e^{ikj} + r e^{-ikj}   (j <= 0)
    C_j = c_j                    (1 <= j <= N)
    C_j = t e^{ikj}              (j >= N + 1)

plus atom amplitudes ``d_1, d_2``.  Imposing the eigen-equation of ``H``
(or of the effective Hamiltonian with atomic decay) on sites ``0 .. N+1``
and on both atoms gives ``N + 4`` linear equations for the unknowns
``(r, c_1 .. c_N, d_1, d_2, t)``; lead sites further out are satisfied
automatically by the dispersion relation.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .model import DomainError, ModelParams, dispersion, sc_mode_energy, wavevector
from .numerics import SingularMatrixError, solve_linear

THREADS_ENV = "CCA_SCATTER_THREADS"


class SingularScatteringError(SingularMatrixError):
    """The scattering system has no unique solution at this wave vector."""


@dataclass(frozen=True)
class ScatteringSolution:
    params: ModelParams
    decaying: bool
    k: float
    energy: float
    r: complex
    t: complex
    c: np.ndarray
    d1: complex
    d2: complex

    @property
    def R(self) -> float:
        return abs(self.r) ** 2

    @property
    def T(self) -> float:
        return abs(self.t) ** 2

    @property
    def incident_flow(self) -> float:
        """Probability current ``2 xi sin k`` of the unit incident wave."""
        return 2.0 * self.params.xi * np.sin(self.k)

    @property
    def absorbed(self) -> float:
        """Fraction of the incident flux lost to the atomic reservoirs."""
        if not self.decaying:
            return 0.0
        pop = abs(self.d1) ** 2 + abs(self.d2) ** 2
        return self.params.gamma * pop / self.incident_flow

    def amplitude(self, j: int) -> complex:
        """Photon amplitude ``C_j`` on any cavity of the infinite chain."""
        n = self.params.n_cavities
        if j <= 0:
            return np.exp(1j * self.k * j) + self.r * np.exp(-1j * self.k * j)
        if j <= n:
            return self.c[j - 1]
        return self.t * np.exp(1j * self.k * j)


@dataclass(frozen=True)
class SpectrumRecord:
    """One detuning point of a spectral sweep.

    ``L`` is the absorbed fraction and ``flow_check = |R + T + L - 1|``.
    A failed point carries NaNs and a non-empty ``error``.
    """

    delta: float
    k: float
    R: float
    T: float
    L: float
    flow_check: float
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def assemble_system(params: ModelParams, k: float, decaying: bool) -> Tuple[np.ndarray, np.ndarray]:
    """Linear system ``A x = b`` for ``x = (r, c_1..c_N, d_1, d_2, t)``.

    Row order: lead site 0, cavities 1..N, atom 1, atom 2, lead site N+1.
    """
    energy = dispersion(params, k)
    n, xi = params.n_cavities, params.xi
    eta, eta_r = params.eta, params.eta_r
    w = params.omega_c - energy
    ek = np.exp(1j * k)
    i_d1, i_t = n + 1, n + 3

    a = np.zeros((n + 4, n + 4), dtype=complex)
    b = np.zeros(n + 4, dtype=complex)

    # site 0: C_0 = 1 + r, C_{-1} = e^{-ik} + r e^{ik}
    a[0, 0] = w - xi * ek
    a[0, 1] = -eta
    b[0] = -(w - xi / ek)

    rows = np.arange(1, n + 1)
    a[rows, rows] = w
    a[rows[1:], rows[:-1]] = -xi
    a[rows[:-1], rows[1:]] = -xi
    a[1, 0] = -eta
    b[1] = eta
    a[n, i_t] = -eta_r * np.exp(1j * k * (n + 1))

    atom_energy = params.omega_a - (0.5j * params.gamma if decaying else 0.0)
    for i, site in enumerate(params.atom_sites):
        row = i_d1 + i
        a[site, row] = params.omega_rabi
        a[row, row] = atom_energy - energy
        a[row, site] = params.omega_rabi

    # site N+1: C_{N+1} = t e^{ik(N+1)}, C_{N+2} = t e^{ik(N+2)}
    a[i_t, i_t] = (w - xi * ek) * np.exp(1j * k * (n + 1))
    a[i_t, n] = -eta_r
    return a, b


def solve_scattering(params: ModelParams, k: float, decaying: bool = True) -> ScatteringSolution:
    """Solve the scattering problem for a photon of wave vector ``k``.

    Raises
    ------
    DomainError
        If ``k`` is outside ``(0, pi)``.
    SingularScatteringError
        At the isolated energies where a bound state of the scatterer is
        decoupled from both leads.  Offset ``k`` by a tiny amount.
    """
    a, b = assemble_system(params, k, decaying)
    try:
        x = solve_linear(a, b)
    except SingularMatrixError as exc:
        raise SingularScatteringError(
            f"scattering system is singular at k={k!r} (pivot {exc.pivot:.3e}); "
            "a scatterer bound state is decoupled from the leads, "
            "offset k by an infinitesimal amount",
            exc.pivot,
        ) from exc
    n = params.n_cavities
    return ScatteringSolution(
        params=params,
        decaying=decaying,
        k=k,
        energy=dispersion(params, k),
        r=complex(x[0]),
        t=complex(x[n + 3]),
        c=x[1 : n + 1].copy(),
        d1=complex(x[n + 1]),
        d2=complex(x[n + 2]),
    )


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, int(workers))
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def spectrum_point(params: ModelParams, energy_ref: float, delta: float, decaying: bool) -> SpectrumRecord:
    try:
        k = wavevector(params, energy_ref + delta)
        sol = solve_scattering(params, k, decaying)
    except (DomainError, SingularMatrixError) as exc:
        nan = float("nan")
        return SpectrumRecord(delta, nan, nan, nan, nan, nan, error=str(exc))
    R, T, L = sol.R, sol.T, sol.absorbed
    return SpectrumRecord(delta, k, R, T, L, abs(R + T + L - 1.0))


def sweep_spectrum(
    params: ModelParams,
    l_resonant: int,
    deltas: Sequence[float],
    decaying: bool = True,
    workers: Optional[int] = None,
) -> List[SpectrumRecord]:
    """Reflection, transmission and absorption over detunings from mode ``l_resonant``.

    ``delta`` is measured from the empty-SC mode energy ``E_n``.  Points that
    fall outside the band or hit a singular system come back as error records;
    the sweep continues.  ``workers`` (default: ``$CCA_SCATTER_THREADS`` or 1)
    sets the thread count; output order always follows ``deltas``.
    """
    _, e_n = sc_mode_energy(params, l_resonant)
    deltas = [float(d) for d in deltas]
    nworkers = _worker_count(workers)
    if nworkers == 1:
        return [spectrum_point(params, e_n, d, decaying) for d in deltas]
    with ThreadPoolExecutor(max_workers=nworkers) as pool:
        return list(pool.map(lambda d: spectrum_point(params, e_n, d, decaying), deltas))
