"""Shared fixtures and the acceptance-criteria summary hook.

The four reference trap configurations reappear across the whole suite,
as do their temperature sweeps, so both are session scoped.  Tests in
test_acceptance.py named test_cNN_* feed a per-criterion PASS/FAIL table
printed at the end of the run.
"""

import re

import pytest

import anisobec as ab

# ---------------------------------------------------------------------------
# reference configurations

CONFIGS = {
    "iso": dict(omega=(0.1, 0.1, 0.1), n_atoms=1000.0),
    "prolate": dict(omega=(0.3, 0.3, 0.0003), n_atoms=1.0e4),
    "oblate": dict(omega=(0.3, 0.002, 0.002), n_atoms=1.0e3),
    "maximal": dict(omega=(0.3, 0.02, 0.0004), n_atoms=5.0e3),
}

SWEEP_RANGES = {
    "iso": (0.05, 2.0, "linear"),
    "prolate": (0.05, 1.0, "linear"),
    "oblate": (0.005, 0.5, "linear"),
    "maximal": (0.004, 0.45, "logarithmic"),
}


@pytest.fixture(scope="session")
def iso_trap():
    return ab.build_trap(*CONFIGS["iso"]["omega"])


@pytest.fixture(scope="session")
def prolate_trap():
    return ab.build_trap(*CONFIGS["prolate"]["omega"])


@pytest.fixture(scope="session")
def oblate_trap():
    return ab.build_trap(*CONFIGS["oblate"]["omega"])


@pytest.fixture(scope="session")
def maximal_trap():
    return ab.build_trap(*CONFIGS["maximal"]["omega"])


def _run_sweep(name):
    cfg = CONFIGS[name]
    t_min, t_max, spacing = SWEEP_RANGES[name]
    trap = ab.build_trap(*cfg["omega"])
    grid = ab.TemperatureGrid(t_min, t_max, 200, spacing)
    return ab.sweep(trap, cfg["n_atoms"], grid)


@pytest.fixture(scope="session")
def sweep_iso():
    return _run_sweep("iso")


@pytest.fixture(scope="session")
def sweep_prolate():
    return _run_sweep("prolate")


@pytest.fixture(scope="session")
def sweep_oblate():
    return _run_sweep("oblate")


@pytest.fixture(scope="session")
def sweep_maximal():
    return _run_sweep("maximal")


# ---------------------------------------------------------------------------
# acceptance reporting

_CRITERIA = {
    1: "isotropic condensation temperature 0.94 +/- 0.01 (N=1000, omega=0.1)",
    2: "prolate crossovers 0.61/0.34 +/- 0.01, two-step window contains N=1e4",
    3: "oblate 2-D crossover 0.057 +/- 0.002, visible at k3=150 > sqrt(N/zeta2)",
    4: "finite-size shift 0.024 / 0.24 within 10% at k3 = 1 / 1000, N=1e4",
    5: "interaction shift within factor 2 of 0.003 at a/L=0.001, N=5000",
    6: "temperature-scale ordering flips between k3=1 and k3=1e6 at fixed N",
    7: "resummed occupations match state enumeration to 1e-6 on all configs",
    8: "sweeps conserve N to 1e-9 with monotone phi and ground fraction",
    9: "ladder identities: analytic 1e-12, finite-difference 1e-6, order 2",
    10: "closed-form identity suite at 1e-10 and recurrence checks at 1e-6",
    11: "maximal cascade: staged collapse with 2-D plateau before ground entry",
    12: "ground-state onset at the 3-D point; 1-D stage peaks inside its window",
}

_results = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d{2})_", report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    if report.when == "call":
        _results.setdefault(num, []).append(report.passed)
    elif report.failed:
        # setup or teardown error counts against the criterion
        _results.setdefault(num, []).append(False)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        if num in _results:
            verdict = "PASS" if all(_results[num]) else "FAIL"
        else:
            verdict = "NOT RUN"
        terminalreporter.write_line(f"C{num:02d} {verdict:7s} {_CRITERIA[num]}")
