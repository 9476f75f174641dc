"""Chemical-potential solves, similarity variables, sweep tables."""

import io
import json
import math

import numpy as np
import pytest

import anisobec as ab
from anisobec import SWEEP_COLUMNS, TemperatureGrid
from anisobec.errors import DomainError
from anisobec.occupation import ThermoPoint

# Frozen from a bisection driven purely by the state enumeration at
# cutoffs (400, 400, 400); the production solve agreed to 4.4e-8, which
# is the enumeration's own truncation floor at those cutoffs.
PHI_STAR_ISO_T3 = 3.3503450948738056

# Ground-state fraction at T = 0.4 for the isotropic reference gas,
# frozen from the production solve when it was first validated.
FRAC0_ISO_T04 = 0.8788150565495615


class TestSolvePhi:
    def test_against_enumeration_oracle(self, iso_trap):
        point = ab.solve_phi(iso_trap, 1000.0, 3.0)
        assert abs(point.phi - PHI_STAR_ISO_T3) < 2e-7
        assert point.phi == pytest.approx(3.35, abs=0.1)

    def test_residual_bound(self, iso_trap):
        point = ab.solve_phi(iso_trap, 1000.0, 1.0)
        total = ab.occupations_exact(iso_trap, point).total
        assert abs(total - 1000.0) / 1000.0 <= 1e-10

    def test_phi_above_saturation_floor(self, oblate_trap):
        # the ground state alone can hold at most N particles, so
        # phi can never drop below log(1 + 1/N)
        for T in (0.01, 0.05, 0.2):
            point = ab.solve_phi(oblate_trap, 1000.0, T)
            assert point.phi >= math.log1p(1.0 / 1000.0)

    def test_condensed_fraction_cold(self, iso_trap):
        point = ab.solve_phi(iso_trap, 1000.0, 0.4)
        split = ab.occupations_exact(iso_trap, point)
        assert split.n0 / 1000.0 == pytest.approx(FRAC0_ISO_T04, abs=1e-9)

    def test_deterministic(self, prolate_trap):
        a = ab.solve_phi(prolate_trap, 1.0e4, 0.5)
        b = ab.solve_phi(prolate_trap, 1.0e4, 0.5)
        assert a.phi == b.phi

    def test_stores_target(self, iso_trap):
        point = ab.solve_phi(iso_trap, 1000.0, 1.0)
        assert point.n_target == 1000.0

    @pytest.mark.parametrize("n, T", [(0.5, 1.0), (1000.0, 0.0), (1000.0, -2.0),
                                      (float("nan"), 1.0)])
    def test_validation(self, iso_trap, n, T):
        with pytest.raises(DomainError):
            ab.solve_phi(iso_trap, n, T)


class TestSimilarityVariables:
    def test_scaling_params(self, maximal_trap):
        pt = ThermoPoint.at(maximal_trap, 0.1, 0.003)
        x1, x2, x3 = ab.scaling_params(pt)
        assert x1 == pytest.approx(0.001, rel=1e-12)
        assert x2 == pytest.approx(0.015, rel=1e-12)
        assert x3 == pytest.approx(0.75, rel=1e-12)

    def test_correlation_proxy(self, iso_trap):
        quarter = ThermoPoint.at(iso_trap, 1.0, 1.0 / (4.0 * math.pi))
        assert ab.correlation_proxy(quarter) == pytest.approx(1.0, rel=1e-12)
        unit = ThermoPoint.at(iso_trap, 1.0, 1.0)
        assert ab.correlation_proxy(unit) == pytest.approx(0.28209479177387814, rel=1e-14)

    def test_correlation_proxy_grows_as_phi_shrinks(self, iso_trap):
        near = ab.correlation_proxy(ThermoPoint.at(iso_trap, 1.0, 1e-8))
        far = ab.correlation_proxy(ThermoPoint.at(iso_trap, 1.0, 1.0))
        assert near > 1e3 * far


class TestTemperatureGrid:
    def test_linear_values(self):
        grid = TemperatureGrid(1.0, 2.0, 5)
        assert np.allclose(grid.values(), np.linspace(1.0, 2.0, 5))

    def test_logarithmic_values(self):
        grid = TemperatureGrid(0.01, 1.0, 9, "logarithmic")
        vals = grid.values()
        ratios = vals[1:] / vals[:-1]
        assert np.allclose(ratios, ratios[0])

    def test_single_point(self):
        grid = TemperatureGrid(0.7, 0.7, 1)
        assert list(grid.values()) == [0.7]

    @pytest.mark.parametrize(
        "kwargs",
        [dict(t_min=0.0, t_max=1.0, points=5),
         dict(t_min=2.0, t_max=1.0, points=5),
         dict(t_min=1.0, t_max=2.0, points=0),
         dict(t_min=1.0, t_max=2.0, points=5, spacing="cubic")],
    )
    def test_validation(self, kwargs):
        with pytest.raises(DomainError):
            TemperatureGrid(**kwargs)


@pytest.fixture(scope="module")
def small_table(iso_trap):
    grid = TemperatureGrid(0.5, 1.5, 5)
    return ab.sweep(iso_trap, 1000.0, grid)


class TestSweep:
    def test_columns_and_length(self, small_table):
        assert len(small_table.records) == 5
        for name in SWEEP_COLUMNS:
            assert len(small_table.column(name)) == 5

    def test_internal_consistency(self, small_table):
        for rec in small_table.records:
            assert rec.z == pytest.approx(math.exp(-rec.phi), rel=1e-14)
            assert rec.xi_ratio == pytest.approx(
                1.0 / (2.0 * math.sqrt(math.pi * rec.phi)), rel=1e-12
            )
            assert rec.frac0 + rec.frac1 + rec.frac2 + rec.frac3 == pytest.approx(
                1.0, abs=1e-10
            )
            assert isinstance(rec.eird, int)

    def test_csv_round_trip(self, small_table):
        buf = io.StringIO()
        small_table.to_csv(buf)
        lines = buf.getvalue().splitlines()
        assert lines[0] == ",".join(SWEEP_COLUMNS)
        assert len(lines) == 6
        first = lines[1].split(",")
        # %.17g survives a float round trip exactly
        assert float(first[0]) == small_table.records[0].T
        assert float(first[1]) == small_table.records[0].phi

    def test_json_structure(self, small_table):
        obj = small_table.to_json_obj()
        assert obj["columns"] == list(SWEEP_COLUMNS)
        assert len(obj["records"]) == 5
        assert obj["metadata"]["n_atoms"] == 1000.0
        assert obj["metadata"]["regime"] == "isotropic"
        json.dumps(obj)  # must already be JSON safe

    def test_single_point_sweep(self, iso_trap):
        table = ab.sweep(iso_trap, 1000.0, TemperatureGrid(1.0, 1.0, 1))
        assert len(table.records) == 1
        point = ab.solve_phi(iso_trap, 1000.0, 1.0)
        assert table.records[0].phi == point.phi
