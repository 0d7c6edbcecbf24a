"""Parameter sets of the reference figures.

All presets use ``N = 31``, ``xi = 1``, ``omega_c = 0``, ``eta = 0.01``,
``Omega = 0.1`` and atoms resonant with empty-SC mode 4 (``k = pi/8``).
For that mode cavities 8 and 16 are nodes and 12 is an antinode.
"""

from __future__ import annotations

from typing import Dict

from .model import ModelParams

N_CAVITIES = 31
RESONANT_MODE = 4
ETA = 0.01
OMEGA_RABI = 0.1
GAMMA = 1e-5

CONFIGURATIONS = {
    "node-antinode": (8, 12),
    "antinode-node": (12, 16),
}

#: per-figure decay rate and default detuning window (min, max, points)
PRESETS: Dict[str, dict] = {
    "fig2": {"gamma": 0.0, "window": (-0.05, 0.05, 2001)},
    "fig3": {"gamma": GAMMA, "window": (-0.05, 0.05, 2001)},
    "fig4": {"gamma": GAMMA, "window": (-0.05, 0.05, 2001)},
    "fig6": {"gamma": GAMMA, "window": (-2e-5, 2e-5, 801)},
}


def preset_params(name: str, configuration: str = "node-antinode", **overrides) -> ModelParams:
    """Model parameters of preset ``name`` for one atom configuration."""
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    if configuration not in CONFIGURATIONS:
        raise KeyError(f"unknown configuration {configuration!r}; choose from {sorted(CONFIGURATIONS)}")
    kwargs = dict(
        eta=ETA,
        omega_rabi=OMEGA_RABI,
        atom_sites=CONFIGURATIONS[configuration],
        gamma=PRESETS[name]["gamma"],
    )
    kwargs.update(overrides)
    return ModelParams.resonant(N_CAVITIES, RESONANT_MODE, **kwargs)
