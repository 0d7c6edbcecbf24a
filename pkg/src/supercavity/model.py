"""Physical parameters and the scatterer Hamiltonian of the super cavity.

The super cavity (SC) is a chain of ``N`` single-mode cavities with hopping
``xi``, attached to two semi-infinite cavity-array leads through weaker
hopping ``eta``.  Two two-level atoms sit in cavities ``n_1 < n_2``.

Energies are measured in units of ``xi``; the defaults ``xi = 1`` and
``omega_c = 0`` put the band at ``(-2, 2)``.

Single-excitation basis used everywhere in this package::

    index 0 .. N-1   one photon in cavity 1 .. N
    index N          atom 1 excited
    index N + 1      atom 2 excited
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

#: Tolerance for node / antinode classification of commensurate sites.
TOL_NODE = 1e-12


class DomainError(ValueError):
    """An argument lies outside the domain of a function."""


@dataclass(frozen=True)
class ModelParams:
    """All constants and atom placements defining one experiment.

    Parameters
    ----------
    n_cavities : int
        Number of cavities ``N`` in the super cavity.
    omega_a : float
        Atomic excited-state energy.  Use :meth:`resonant` to set it equal
        to a standing-wave mode energy of the empty super cavity.
    eta : float
        Hopping between the super cavity and the left lead.
    omega_rabi : float
        Atom-cavity coupling.
    atom_sites : tuple of int
        1-based cavity indices ``(n_1, n_2)`` hosting atom 1 and atom 2.
    gamma : float
        Spontaneous decay rate of each atom.
    omega_c, xi : float
        Bare cavity frequency and intra-chain hopping.
    eta_right : float, optional
        Right-wall hopping; defaults to ``eta``.  ``0`` closes the
        transmission channel.
    allow_off_band : bool
        Acknowledge an atom frequency outside the propagating band.
    """

    n_cavities: int
    omega_a: float
    eta: float
    omega_rabi: float
    atom_sites: Tuple[int, int]
    gamma: float = 0.0
    omega_c: float = 0.0
    xi: float = 1.0
    eta_right: Optional[float] = None
    allow_off_band: bool = field(default=False, compare=False)

    def __post_init__(self):
        n1, n2 = (int(s) for s in self.atom_sites)
        object.__setattr__(self, "atom_sites", (n1, n2))
        if self.n_cavities < 2:
            raise ValueError(f"n_cavities must be >= 2, got {self.n_cavities}")
        if not 1 <= n1 < n2 <= self.n_cavities:
            raise ValueError(
                f"atom sites must satisfy 1 <= n1 < n2 <= N={self.n_cavities}, "
                f"got {self.atom_sites}"
            )
        if not self.xi > 0:
            raise ValueError(f"xi must be positive, got {self.xi}")
        if self.eta < 0:
            raise ValueError(f"eta must be nonnegative, got {self.eta}")
        if self.eta_right is not None and self.eta_right < 0:
            raise ValueError(f"eta_right must be nonnegative, got {self.eta_right}")
        if self.gamma < 0:
            raise ValueError(f"gamma must be nonnegative, got {self.gamma}")
        values = (self.omega_a, self.omega_c, self.xi, self.eta, self.omega_rabi, self.gamma)
        if not all(np.isfinite(values)):
            raise ValueError("model parameters must be finite")
        if abs(self.omega_c - self.omega_a) >= 2 * self.xi and not self.allow_off_band:
            raise ValueError(
                "omega_a lies outside the propagating band "
                "(pass allow_off_band=True to acknowledge)"
            )

    @classmethod
    def resonant(cls, n_cavities: int, mode: int, **kwargs) -> "ModelParams":
        """Parameters with ``omega_a`` tuned to the empty-SC mode ``mode``."""
        omega_c = kwargs.get("omega_c", 0.0)
        xi = kwargs.get("xi", 1.0)
        k = mode_wavevector(n_cavities, mode)
        return cls(n_cavities=n_cavities, omega_a=omega_c - 2 * xi * np.cos(k), **kwargs)

    @property
    def eta_r(self) -> float:
        """Effective right-wall hopping."""
        return self.eta if self.eta_right is None else self.eta_right

    @property
    def dim(self) -> int:
        return self.n_cavities + 2


class Role(enum.Enum):
    NODE = "node"
    ANTINODE = "antinode"
    GENERIC = "generic"


@dataclass(frozen=True)
class SiteRole:
    """Role of a cavity with respect to an empty-SC standing-wave mode."""

    tag: Role
    mode_index: int
    amplitude: float


@dataclass(frozen=True)
class ScattererMatrix:
    """Scatterer Hamiltonian restricted to the single-excitation subspace."""

    entries: np.ndarray
    decaying: bool
    n_cavities: int

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def dispersion(params: ModelParams, k: float) -> float:
    """Lead photon energy ``omega_c - 2 xi cos k`` for ``0 < k < pi``.

    The lead hopping is ``xi`` (not ``eta``); ``eta`` only links the
    super cavity to the leads.
    """
    if not 0.0 < k < np.pi:
        raise DomainError(f"wave vector must lie in (0, pi), got {k!r}")
    return params.omega_c - 2.0 * params.xi * np.cos(k)


def wavevector(params: ModelParams, energy: float) -> float:
    """Inverse of :func:`dispersion`; band edges are rejected."""
    x = (params.omega_c - energy) / (2.0 * params.xi)
    if not -1.0 < x < 1.0:
        raise DomainError(
            f"energy {energy!r} is outside the open band "
            f"({params.omega_c - 2 * params.xi}, {params.omega_c + 2 * params.xi})"
        )
    return float(np.arccos(x))


def mode_wavevector(n_cavities: int, mode: int) -> float:
    if not 1 <= mode <= n_cavities:
        raise DomainError(f"mode index must lie in 1..{n_cavities}, got {mode}")
    return mode * np.pi / (n_cavities + 1)


def sc_mode_energy(params: ModelParams, mode: int) -> Tuple[float, float]:
    """Wave vector and energy of standing-wave mode ``mode`` of the empty SC."""
    k = mode_wavevector(params.n_cavities, mode)
    return k, dispersion(params, k)


def classify_site(n: int, mode: int, n_cavities: int) -> SiteRole:
    """Classify cavity ``n`` as node, antinode or generic for mode ``mode``."""
    if not 1 <= n <= n_cavities:
        raise DomainError(f"site must lie in 1..{n_cavities}, got {n}")
    amp = float(np.sin(mode_wavevector(n_cavities, mode) * n))
    if abs(amp) < TOL_NODE:
        tag = Role.NODE
    elif abs(abs(amp) - 1.0) < TOL_NODE:
        tag = Role.ANTINODE
    else:
        tag = Role.GENERIC
    return SiteRole(tag, mode, amp)


def build_scatterer(params: ModelParams, decaying: bool = False) -> ScattererMatrix:
    """Dense matrix of ``H_S`` or of ``H_eff = H_S - i gamma/2 sum |e><e|``.

    The result is complex symmetric; it is Hermitian unless ``decaying``
    and ``gamma > 0``.
    """
    n = params.n_cavities
    h = np.zeros((n + 2, n + 2), dtype=complex)
    idx = np.arange(n)
    h[idx, idx] = params.omega_c
    h[idx[:-1], idx[1:]] = -params.xi
    h[idx[1:], idx[:-1]] = -params.xi
    atom_energy = params.omega_a - (0.5j * params.gamma if decaying else 0.0)
    for i, site in enumerate(params.atom_sites):
        a = n + i
        h[a, a] = atom_energy
        h[site - 1, a] = params.omega_rabi
        h[a, site - 1] = params.omega_rabi
    return ScattererMatrix(h, decaying, n)
