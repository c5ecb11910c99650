"""SOA-MZI all-optical sampling-mixer simulator.

Thin Python layer over the C++ core: scenario runs, per-cell spectra,
calibration procedures and the linearized verification gate.
"""

from ._core import (
    cell_spectrum,
    default_config,
    oracle_gate,
    pi_shift_pump_power,
    run_scenario,
    smooth_ma7,
    static_characterization,
    steady_state_h,
)

__all__ = [
    "cell_spectrum",
    "default_config",
    "oracle_gate",
    "pi_shift_pump_power",
    "run_scenario",
    "smooth_ma7",
    "static_characterization",
    "steady_state_h",
]
