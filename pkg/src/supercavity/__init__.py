"""Single-photon scattering through a coupled-cavity super cavity with two atoms."""

from .model import (
    DomainError,
    ModelParams,
    Role,
    ScattererMatrix,
    SiteRole,
    build_scatterer,
    classify_site,
    dispersion,
    sc_mode_energy,
    wavevector,
)
from .numerics import ConvergenceError, EigenDecomposition, SingularMatrixError, eigen, solve_linear
from .scattering import ScatteringSolution, SpectrumRecord, solve_scattering, sweep_spectrum
from .modes import (
    EigenMode,
    Side,
    Which,
    localization_side,
    localized_mode_analytic,
    numerical_mode,
    resonance_survives,
)
from .flow import FlowProfile, leakage_consistency, photon_flow
from .singlemode import (
    SingleModeInputs,
    compare_near_resonance,
    reflection_no_decay,
    reflection_with_decay,
    single_mode_inputs,
)
from .presets import preset_params

__version__ = "0.1.0"
