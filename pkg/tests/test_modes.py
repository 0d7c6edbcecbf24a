import numpy as np
import pytest

from supercavity.model import ModelParams, build_scatterer
from supercavity.modes import (
    ContractError,
    Side,
    Which,
    localization_side,
    localized_mode_analytic,
    numerical_mode,
    resonance_survives,
)
from supercavity.numerics import eigen
from supercavity.presets import preset_params

E4 = -2 * np.cos(np.pi / 8)
NODE = {"node-antinode": (Which.FIRST, 8), "antinode-node": (Which.SECOND, 16)}


def analytic(configuration):
    which, _ = NODE[configuration]
    return localized_mode_analytic(preset_params("fig2", configuration), 4, which)


class TestAnalyticMode:
    def test_exact_eigenvector(self, configuration):
        mode = analytic(configuration)
        h = build_scatterer(preset_params("fig2", configuration)).entries
        psi = mode.amplitudes
        assert np.linalg.norm(h @ psi - E4 * psi) <= 1e-12
        assert mode.eigenvalue == pytest.approx(E4)

    def test_unit_norm(self, configuration):
        mode = analytic(configuration)
        assert abs(np.linalg.norm(mode.amplitudes) - 1) <= 1e-14
        assert abs(mode.weight_left_of(31) + sum(mode.atom_weights) - 1) <= 1e-12

    def test_support_node_antinode(self):
        mode = analytic("node-antinode")
        b = mode.cavity_amplitudes
        assert np.all(np.abs(b[:7]) > 1e-3)
        assert np.all(np.abs(b[8:]) ** 2 <= 1e-24)
        assert mode.atom_weights[1] <= 1e-24
        assert mode.atom_weights[0] > 0.5

    def test_support_antinode_node(self):
        mode = analytic("antinode-node")
        b = mode.cavity_amplitudes
        inside = np.abs(b[16:]) > 1e-3
        # site 24 is an interior node of sin(k (32 - j))
        assert list(np.flatnonzero(~inside) + 17) == [24]
        assert abs(b[23]) <= 1e-15
        assert np.all(np.abs(b[:15]) ** 2 <= 1e-24)
        assert b[0] == 0
        assert mode.atom_weights[0] <= 1e-24

    def test_closed_form_weights(self):
        # |alpha|^2 / |b|^2 = (sin^2 k / Omega^2) / (n_1 / 2)
        mode = analytic("node-antinode")
        s2 = np.sin(np.pi / 8) ** 2
        assert mode.atom_weights[0] == pytest.approx((s2 / 0.01) / (4 + s2 / 0.01), rel=1e-13)

    def test_agrees_with_eigensolver(self, configuration):
        mode = analytic(configuration)
        num = numerical_mode(preset_params("fig2", configuration), 4)
        assert abs(num.eigenvalue - E4) <= 1e-10
        a, v = mode.amplitudes, num.amplitudes
        phase = np.vdot(v, a) / abs(np.vdot(v, a))
        np.testing.assert_allclose(v * phase, a, atol=1e-10)
        # node-atom amplitude has the same sign as its neighbouring cavity amplitude
        which, site = NODE[configuration]
        neighbour = site - 2 if which is Which.FIRST else site
        atom = (v * phase)[31 + which.value]
        assert np.sign(atom.real) == np.sign((v * phase)[neighbour].real)

    def test_not_at_node(self):
        with pytest.raises(ContractError, match="not at a node"):
            localized_mode_analytic(preset_params("fig2", "node-antinode"), 4, Which.SECOND)

    def test_off_resonant(self):
        p = ModelParams(n_cavities=31, omega_a=-1.5, eta=0.01, omega_rabi=0.1, atom_sites=(8, 12))
        with pytest.raises(ContractError, match="resonant"):
            localized_mode_analytic(p, 4)


class TestResonanceSurvives:
    def test_paper_configurations(self, configuration):
        assert resonance_survives(preset_params("fig2", configuration), 4)

    def test_antinode_pair_half_wavelength_apart(self):
        # 12 and 20 are both antinodes and 8 sites apart: a mode trapped
        # between the two atoms sits exactly at E_4
        p = ModelParams.resonant(31, 4, eta=0.01, omega_rabi=0.1, atom_sites=(12, 20))
        assert resonance_survives(p, 4)
        h = build_scatterer(p).entries
        assert np.linalg.svd(h - E4 * np.eye(33), compute_uv=False)[-1] <= 1e-12

    def test_generic_placement(self):
        p = ModelParams.resonant(31, 4, eta=0.01, omega_rabi=0.1, atom_sites=(5, 10))
        assert not resonance_survives(p, 4)
        h = build_scatterer(p).entries
        assert np.linalg.svd(h - E4 * np.eye(33), compute_uv=False)[-1] > 1e-6


class TestLocalization:
    def test_node_antinode_left(self):
        assert localization_side(analytic("node-antinode"), 8) is Side.LEFT

    def test_antinode_node_right(self):
        assert localization_side(analytic("antinode-node"), 16) is Side.RIGHT

    def test_numerical_modes(self, configuration):
        _, site = NODE[configuration]
        expected = Side.LEFT if configuration == "node-antinode" else Side.RIGHT
        mode = numerical_mode(preset_params("fig2", configuration), 4)
        assert localization_side(mode, site) is expected

    def test_bare_standing_wave(self):
        p = ModelParams.resonant(31, 4, eta=0.01, omega_rabi=0.0, atom_sites=(8, 12))
        dec = eigen(build_scatterer(p).entries[:31, :31])
        i = dec.nearest(E4)
        from supercavity.modes import EigenMode

        amps = np.concatenate((dec.eigenvectors[:, i], [0, 0]))
        assert localization_side(EigenMode(dec.eigenvalues[i], amps, (8, 12)), 8) is Side.DELOCALIZED


class TestDecayPerturbation:
    @pytest.mark.parametrize("gamma", [1e-6, 1e-5, 1e-4])
    def test_linewidth(self, gamma):
        p = preset_params("fig3", "node-antinode", gamma=gamma)
        alpha_sq = analytic("node-antinode").atom_weights[0]
        mode = numerical_mode(p, 4, decaying=True)
        expected = -gamma * alpha_sq / 2
        assert abs(mode.eigenvalue.imag - expected) <= 0.1 * abs(expected)
