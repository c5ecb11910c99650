"""Smoke tests for the Python bindings.

Deep numerical coverage lives in the C++ suites; here we only prove that
every exported entry point is callable and returns sane shapes/values.
"""

import json
import math

import pytest

import soamzi

SMALL = json.dumps({"architectures": ["modulation"], "mi_grid": [0.5]})


def test_default_config_round_trips_through_json():
    cfg = json.loads(soamzi.default_config())
    assert cfg["schema_version"] == 1
    assert cfg["grid"]["f_rep_hz"] == 10e9
    assert cfg["grid"]["f_if_hz"] == 1e9
    assert cfg["grid"]["n_samples"] == 32768
    assert cfg["mi_grid"][0] == pytest.approx(0.2)
    assert set(cfg["architectures"]) == {
        "switching_standard",
        "switching_differential",
        "modulation",
    }


def test_run_scenario_small_grid():
    reports = soamzi.run_scenario(SMALL)
    assert len(reports) == 1
    (row,) = reports
    assert row["arch"] == "modulation"
    assert row["mi"] == pytest.approx(0.5)
    assert row["feasible"]
    assert row["gc_db"] > 0.0
    assert row["thd_db"] < 0.0
    assert row["p_out_dbm"] == pytest.approx(row["p_in_dbm"] + row["gc_db"])


def test_run_scenario_rejects_bad_config():
    with pytest.raises(Exception, match="bogus"):
        soamzi.run_scenario(json.dumps({"bogus": 1}))


def test_cell_spectrum_places_the_upconverted_tone():
    cell = soamzi.cell_spectrum("modulation", 0.5, SMALL)
    freq = cell["freq_hz"]
    power = cell["power_dbm"]
    assert len(freq) == len(power) == 32768 // 2 + 1
    assert freq[1] == pytest.approx(1e9)

    def at(f_hz):
        return power[int(round(f_hz / 1e9))]

    assert at(9e9) > at(8.5e9) + 30.0  # tone, not floor
    assert at(10e9) > at(9e9)  # comb line dominates the sideband
    assert cell["p_in_dbm"] < 0.0


def test_oracle_gate_is_tight():
    assert soamzi.oracle_gate() < 0.1


def test_steady_state_h_frozen_point():
    h = soamzi.steady_state_h(math.log(500.0), 100e-12, 5e-12, 5.0, 100e-6)
    assert h == pytest.approx(5.64874072079868643, abs=1e-12)
    assert soamzi.steady_state_h(math.log(500.0), 100e-12, 5e-12, 5.0, 0.0) == (
        pytest.approx(math.log(500.0), abs=1e-12)
    )


def test_smooth_ma7_preserves_constants():
    out = soamzi.smooth_ma7([3.0] * 11)
    assert list(out) == [3.0] * 11


def test_static_characterization_reports_a_region():
    curve = soamzi.static_characterization()
    n = len(curve["p_a_dbm"])
    assert n >= 15
    assert len(curve["p_j_mw"]) == n
    assert len(curve["derivative"]) == n
    assert curve["region_lo_dbm"] < curve["region_center_dbm"] < curve["region_hi_dbm"]
    assert min(curve["p_j_mw"]) >= 0.0


def test_pi_shift_pump_power_is_physical():
    peak_w = soamzi.pi_shift_pump_power()
    assert 0.0 < peak_w < 1.0
