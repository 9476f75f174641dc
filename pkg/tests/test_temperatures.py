"""Condensation temperature scales, crossovers and the multistep map."""

import math

import pytest

import anisobec as ab
from anisobec import MultistepLabel
from anisobec.errors import DomainError, InapplicableFormulaError
from anisobec.series import ZETA2, ZETA3


class TestBulkTemps:
    def test_isotropic_values(self, iso_trap):
        bulk = ab.bulk_temps(iso_trap, 1000.0)
        assert bulk.t3d == pytest.approx((1000.0 * 1e-3 / ZETA3) ** (1.0 / 3.0), rel=1e-13)
        assert bulk.t3d == pytest.approx(0.9404989702570405, rel=1e-12)
        assert bulk.t2d == pytest.approx((1000.0 * 1e-2 / ZETA2) ** 0.5, rel=1e-13)
        assert bulk.t1d == pytest.approx(1000.0 * 0.1 / math.log(2000.0), rel=1e-13)

    def test_two_zeta2_norm(self, oblate_trap):
        a = ab.bulk_temps(oblate_trap, 1000.0, t2d_norm="zeta2")
        b = ab.bulk_temps(oblate_trap, 1000.0, t2d_norm="two_zeta2")
        assert b.t2d == pytest.approx(a.t2d / math.sqrt(2.0), rel=1e-13)
        with pytest.raises(DomainError):
            ab.bulk_temps(oblate_trap, 1000.0, t2d_norm="half")

    def test_bad_atom_number(self, iso_trap):
        with pytest.raises(DomainError):
            ab.bulk_temps(iso_trap, 0.0)


class TestCrossovers:
    def test_prolate_t3(self, prolate_trap):
        assert ab.crossover_t3(prolate_trap, 1.0e4) == pytest.approx(
            0.6078730822383099, rel=1e-12
        )
        assert ab.crossover_t3(prolate_trap, 1.0e4, c1=2.0) == pytest.approx(
            0.7447163600003306, rel=1e-12
        )

    def test_prolate_t1(self, prolate_trap):
        assert ab.crossover_t1(prolate_trap, 1.0e4) == pytest.approx(
            0.34072032937376184, rel=1e-12
        )
        # with the offset switched off the crossover is the bulk scale
        bulk = ab.bulk_temps(prolate_trap, 1.0e4)
        assert ab.crossover_t1(prolate_trap, 1.0e4, c3=0.0) == pytest.approx(
            bulk.t1d, rel=1e-12
        )

    def test_oblate_t2_closed_form(self, oblate_trap):
        assert ab.crossover_t2(oblate_trap, 1000.0) == pytest.approx(
            0.05710604781411109, rel=1e-12
        )

    def test_oblate_t2_full_solve(self, oblate_trap):
        full = ab.crossover_t2(oblate_trap, 1000.0, mode="full_solve")
        assert full == pytest.approx(0.05864279245976209, rel=1e-9)
        # the self-consistent solve sits a few percent above the closed form
        closed = ab.crossover_t2(oblate_trap, 1000.0)
        assert 1.0 < full / closed < 1.1

    def test_full_solve_accepts_general_c2(self, oblate_trap):
        val = ab.crossover_t2(oblate_trap, 1000.0, c2=2.0, mode="full_solve")
        assert val == pytest.approx(0.059468297574832185, rel=1e-9)
        with pytest.raises(InapplicableFormulaError):
            ab.crossover_t2(oblate_trap, 1000.0, c2=2.0, mode="closed_form")

    def test_maximal_has_all_three(self, maximal_trap):
        assert ab.crossover_t3(maximal_trap, 5000.0) == pytest.approx(
            0.2837421521530057, rel=1e-12
        )
        assert ab.crossover_t2(maximal_trap, 5000.0) == pytest.approx(
            0.18715238852472768, rel=1e-12
        )
        assert ab.crossover_t1(maximal_trap, 5000.0) == pytest.approx(
            0.2465565881227583, rel=1e-12
        )

    def test_wrong_regime_rejected(self, prolate_trap, oblate_trap):
        with pytest.raises(InapplicableFormulaError):
            ab.crossover_t2(prolate_trap, 1.0e4)
        with pytest.raises(InapplicableFormulaError):
            ab.crossover_t3(oblate_trap, 1000.0)
        with pytest.raises(InapplicableFormulaError):
            ab.crossover_t1(oblate_trap, 1000.0)


class TestTemperatureSet:
    def test_none_pattern_follows_regime(
        self, iso_trap, prolate_trap, oblate_trap, maximal_trap
    ):
        stars = {
            "iso": ab.temperature_set(iso_trap, 1000.0),
            "pro": ab.temperature_set(prolate_trap, 1.0e4),
            "obl": ab.temperature_set(oblate_trap, 1000.0),
            "max": ab.temperature_set(maximal_trap, 5000.0),
        }
        assert stars["iso"].t3d_star is not None
        assert stars["iso"].t2d_star is None and stars["iso"].t1d_star is None
        assert stars["pro"].t3d_star is not None and stars["pro"].t1d_star is not None
        assert stars["pro"].t2d_star is None
        assert stars["obl"].t2d_star is not None
        assert stars["obl"].t3d_star is None and stars["obl"].t1d_star is None
        assert all(
            getattr(stars["max"], f) is not None
            for f in ("t3d_star", "t2d_star", "t1d_star")
        )

    def test_isotropic_star_equals_bulk(self, iso_trap):
        ts = ab.temperature_set(iso_trap, 1000.0)
        assert ts.t3d_star == pytest.approx(ts.t3d, rel=1e-12)


class TestFiniteSizeShift:
    def test_reference_values(self):
        assert ab.delta_t_correction(1.0e4, 1) == pytest.approx(
            0.022511817311952086, rel=1e-13
        )
        assert ab.delta_t_correction(1.0e4, 1000) == pytest.approx(
            0.22511817311952087, rel=1e-13
        )

    def test_scalings(self):
        base = ab.delta_t_correction(1.0e4, 8)
        assert ab.delta_t_correction(1.0e4, 8, c1=2.0) == pytest.approx(2.0 * base)
        assert ab.delta_t_correction(1.0e4, 64) == pytest.approx(2.0 * base, rel=1e-13)
        assert ab.delta_t_correction(8.0e4, 8) == pytest.approx(base / 2.0, rel=1e-13)

    def test_validation(self):
        with pytest.raises(DomainError):
            ab.delta_t_correction(1.0e4, 0)


class TestInteractionShift:
    def test_reference_value(self):
        assert ab.interaction_shift(0.001, 5000.0) == pytest.approx(
            0.004135185542000137, rel=1e-13
        )

    def test_ideal_limit_and_validation(self):
        assert ab.interaction_shift(0.0, 5000.0) == 0.0
        with pytest.raises(DomainError):
            ab.interaction_shift(-0.001, 5000.0)


class TestMultistep:
    def test_labels_across_configs(
        self, iso_trap, prolate_trap, oblate_trap, maximal_trap
    ):
        assert ab.multistep_flags(iso_trap, 1000.0).label is MultistepLabel.DIRECT
        assert ab.multistep_flags(prolate_trap, 1.0e4).label is MultistepLabel.TWO_STEP
        assert (
            ab.multistep_flags(oblate_trap, 1000.0).label
            is MultistepLabel.TWO_DIMENSIONAL
        )
        assert (
            ab.multistep_flags(maximal_trap, 5000.0).label
            is MultistepLabel.TWO_DIMENSIONAL
        )

    def test_prolate_window(self, prolate_trap):
        report = ab.multistep_flags(prolate_trap, 1.0e4)
        lo, hi = report.window
        assert lo == pytest.approx(320.86161115264616, rel=1e-10)
        assert hi == pytest.approx(1009.7452990122815, rel=1e-10)
        assert report.in_window
        assert not ab.multistep_flags(prolate_trap, 100.0).in_window

    def test_oblate_visibility_condition(self, oblate_trap):
        report = ab.multistep_flags(oblate_trap, 1000.0)
        assert report.two_d_visible
        # k3 = 150 against sqrt(N / zeta2) ~ 25
        assert report.margin_two_d > 1.0

    def test_maximal_marginal_first_condition(self, maximal_trap):
        # kappa = 50 sits below the three-step bound for this atom
        # number, so the cascade is labelled by its 2-D stage
        report = ab.multistep_flags(maximal_trap, 5000.0)
        assert not report.cond_a
        assert report.label is MultistepLabel.TWO_DIMENSIONAL


class TestPhasePoint:
    def test_isotropic_corner(self):
        report = ab.phase_point(1.0, 1.0, 1000.0)
        assert report.label is MultistepLabel.DIRECT

    def test_matches_oblate_reference(self, oblate_trap):
        direct = ab.multistep_flags(oblate_trap, 1000.0)
        via_ratios = ab.phase_point(150.0, 1.0, 1000.0)
        assert via_ratios.label is direct.label

    def test_rounding_warns(self):
        with pytest.warns(UserWarning):
            ab.phase_point(149.6, 1.0, 1000.0)

    def test_validation(self):
        with pytest.raises(DomainError):
            ab.phase_point(0.5, 1.0, 1000.0)
