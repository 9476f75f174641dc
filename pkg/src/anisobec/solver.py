"""Chemical-potential solves and temperature sweeps at fixed atom number.

The total occupation is strictly decreasing in phi at fixed T and
strictly increasing in T at fixed phi, so the particle-number equation
total(phi) = N has exactly one root and bracketed root finding is
safe.  The lower bracket phi_min = log(1 + 1/N) is where the ground
state alone already holds N atoms, hence total(phi_min) > N always.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from ._version import __version__ as _pkg_version
from .errors import ConvergenceError, DomainError
from .occupation import OccupationSplit, ThermoPoint, occupations_exact
from .series import DEFAULT_CONTROL, SeriesControl
from .trap import TrapGeometry, eird

_BRENTQ_RTOL = 4.0 * np.finfo(float).eps


def solve_phi(
    trap: TrapGeometry,
    n_atoms: float,
    T: float,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    iso_split: str = "maximal",
) -> ThermoPoint:
    """Solve total(phi) = n_atoms for the reduced chemical potential.

    Bracketed Brent iteration (bisection with secant/inverse-quadratic
    acceleration, bracket always maintained) between phi_min and a
    geometrically grown upper bound.  The returned point satisfies
    |total(phi*) - n_atoms| / n_atoms <= 1e-10.
    """
    if not (n_atoms >= 1.0) or not math.isfinite(n_atoms):
        raise DomainError(f"atom number must be at least 1, got {n_atoms}")
    if not (T > 0.0) or not math.isfinite(T):
        raise DomainError(f"temperature must be positive and finite, got {T}")

    def excess(phi: float) -> float:
        point = ThermoPoint.at(trap, T, phi)
        return occupations_exact(trap, point, ctrl, iso_split).total - n_atoms

    phi_min = math.log1p(1.0 / n_atoms)
    lo = phi_min
    hi = max(4.0 * phi_min, 0.5)
    while excess(hi) >= 0.0:
        lo = hi
        hi *= 2.0
        if hi > 1e8:
            raise ConvergenceError(f"no upper bracket for phi below {hi}")
    phi_star = brentq(excess, lo, hi, xtol=1e-18, rtol=_BRENTQ_RTOL)

    residual = abs(excess(phi_star)) / n_atoms
    if residual > 1e-10:
        raise ConvergenceError(
            f"particle-number residual {residual} exceeds 1e-10", bound=residual
        )
    return ThermoPoint.at(trap, T, phi_star, n_target=float(n_atoms))


def scaling_params(point: ThermoPoint) -> tuple[float, float, float]:
    """Similarity variables x_i = phi / eta_i."""
    return tuple(point.phi / e for e in point.eta)


def correlation_proxy(point: ThermoPoint) -> float:
    """Correlation-length estimate over the thermal wavelength.

    xi / lambda_dB = 1 / (2 sqrt(pi * phi)); diverges as the chemical
    potential approaches the ground level.
    """
    return 1.0 / (2.0 * math.sqrt(math.pi * point.phi))


@dataclass(frozen=True)
class TemperatureGrid:
    """Sweep grid: ``spacing`` is "linear" or "logarithmic"."""

    t_min: float
    t_max: float
    points: int
    spacing: str = "linear"

    def __post_init__(self):
        if not (0.0 < self.t_min <= self.t_max):
            raise DomainError(f"need 0 < t_min <= t_max, got ({self.t_min}, {self.t_max})")
        if self.points < 1:
            raise DomainError(f"need at least one grid point, got {self.points}")
        if self.spacing not in ("linear", "logarithmic"):
            raise DomainError(f"spacing must be 'linear' or 'logarithmic', got {self.spacing!r}")

    def values(self) -> np.ndarray:
        if self.spacing == "logarithmic":
            return np.geomspace(self.t_min, self.t_max, self.points)
        return np.linspace(self.t_min, self.t_max, self.points)


# Column order is part of the file format contract; do not reorder.
SWEEP_COLUMNS = (
    "T", "phi", "z", "frac0", "frac1", "frac2", "frac3",
    "eird", "x1", "x2", "x3", "xi_ratio",
)


@dataclass(frozen=True)
class SweepRecord:
    T: float
    phi: float
    z: float
    frac0: float
    frac1: float
    frac2: float
    frac3: float
    eird: int
    x1: float
    x2: float
    x3: float
    xi_ratio: float

    def as_row(self) -> tuple:
        return tuple(getattr(self, name) for name in SWEEP_COLUMNS)


@dataclass(frozen=True)
class SweepTable:
    records: tuple
    metadata: dict = field(default_factory=dict)

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(r, name) for r in self.records])

    def to_csv(self, stream) -> None:
        stream.write(",".join(SWEEP_COLUMNS) + "\n")
        for r in self.records:
            stream.write(",".join(_format_value(v) for v in r.as_row()) + "\n")

    def to_json_obj(self) -> dict:
        return {
            "metadata": self.metadata,
            "columns": list(SWEEP_COLUMNS),
            "records": [
                {name: v for name, v in zip(SWEEP_COLUMNS, r.as_row())}
                for r in self.records
            ],
        }


def _format_value(v) -> str:
    if isinstance(v, int):
        return str(v)
    return format(v, ".17g")


def sweep(
    trap: TrapGeometry,
    n_atoms: float,
    grid: TemperatureGrid,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    iso_split: str = "maximal",
) -> SweepTable:
    """Solve the gas along a temperature grid.

    Each grid point is solved independently (no warm starting), so the
    table is deterministic and any partition of the grid would
    reassemble to the identical result.
    """
    records = []
    for T in grid.values():
        T = float(T)
        point = solve_phi(trap, n_atoms, T, ctrl, iso_split)
        split = occupations_exact(trap, point, ctrl, iso_split)
        x1, x2, x3 = scaling_params(point)
        records.append(
            SweepRecord(
                T=T,
                phi=point.phi,
                z=point.z,
                frac0=split.n0 / n_atoms,
                frac1=split.n1 / n_atoms,
                frac2=split.n2 / n_atoms,
                frac3=split.n3 / n_atoms,
                eird=eird(trap, T),
                x1=x1,
                x2=x2,
                x3=x3,
                xi_ratio=correlation_proxy(point),
            )
        )
    metadata = {
        "omega": list(trap.omega),
        "k": list(trap.k),
        "regime": trap.regime.value,
        "n_atoms": float(n_atoms),
        "t_min": grid.t_min,
        "t_max": grid.t_max,
        "points": grid.points,
        "spacing": grid.spacing,
        "rel_tol": ctrl.rel_tol,
        "abs_tol": ctrl.abs_tol,
        "max_terms": ctrl.max_terms,
        "iso_split": iso_split,
        "version": _pkg_version,
    }
    return SweepTable(records=tuple(records), metadata=metadata)
