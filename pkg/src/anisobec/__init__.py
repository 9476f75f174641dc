"""Equilibrium statistics of the ideal Bose gas in anisotropic 3-D traps.

The package splits the excited spectrum of a commensurate harmonic
trap into effective 3-D, 2-D and 1-D reservoirs plus the ground state,
evaluates each bucket by resummed series (with a brute-force lattice
oracle for cross-checks), solves the particle-number constraint for
the chemical potential, and derives the bulk and finite-size
condensation temperatures together with a multistep-condensation
classifier.
"""

from ._version import __version__
from .analysis import (
    CollapseData,
    LadderResiduals,
    collapse_export,
    ladder_residuals,
    n_lambda,
    stage_crossings,
)
from .errors import (
    CommensurabilityError,
    ConvergenceError,
    DomainError,
    InapplicableFormulaError,
    UnsupportedOrderError,
)
from .kernels import available_backends, backend_name, get_backend
from .occupation import (
    OccupationSplit,
    ThermoPoint,
    default_cutoffs,
    occupations_asymptotic,
    occupations_enumerated,
    occupations_exact,
)
from .series import (
    DEFAULT_CONTROL,
    ZETA2,
    ZETA3,
    SeriesControl,
    bose_g,
    bose_g_near_one,
    geometric_moment_sum,
    small_eta_expansion,
)
from .solver import (
    SWEEP_COLUMNS,
    SweepRecord,
    SweepTable,
    TemperatureGrid,
    correlation_proxy,
    scaling_params,
    solve_phi,
    sweep,
)
from .temperatures import (
    MultistepLabel,
    MultistepReport,
    TemperatureSet,
    bulk_temps,
    crossover_t1,
    crossover_t2,
    crossover_t3,
    delta_t_correction,
    interaction_shift,
    multistep_flags,
    phase_point,
    temperature_set,
)
from .trap import (
    LevelDecomposition,
    Regime,
    TrapGeometry,
    build_trap,
    classify_excitation,
    decompose,
    effective_regime,
    eird,
    energy_level,
)
from .verify import run_verification

__all__ = [
    "__version__",
    "CollapseData",
    "LadderResiduals",
    "collapse_export",
    "ladder_residuals",
    "n_lambda",
    "stage_crossings",
    "CommensurabilityError",
    "ConvergenceError",
    "DomainError",
    "InapplicableFormulaError",
    "UnsupportedOrderError",
    "available_backends",
    "backend_name",
    "get_backend",
    "OccupationSplit",
    "ThermoPoint",
    "default_cutoffs",
    "occupations_asymptotic",
    "occupations_enumerated",
    "occupations_exact",
    "DEFAULT_CONTROL",
    "ZETA2",
    "ZETA3",
    "SeriesControl",
    "bose_g",
    "bose_g_near_one",
    "geometric_moment_sum",
    "small_eta_expansion",
    "SWEEP_COLUMNS",
    "SweepRecord",
    "SweepTable",
    "TemperatureGrid",
    "correlation_proxy",
    "scaling_params",
    "solve_phi",
    "sweep",
    "MultistepLabel",
    "MultistepReport",
    "TemperatureSet",
    "bulk_temps",
    "crossover_t1",
    "crossover_t2",
    "crossover_t3",
    "delta_t_correction",
    "interaction_shift",
    "multistep_flags",
    "phase_point",
    "temperature_set",
    "LevelDecomposition",
    "Regime",
    "TrapGeometry",
    "build_trap",
    "classify_excitation",
    "decompose",
    "effective_regime",
    "eird",
    "energy_level",
    "run_verification",
]
