"""Similarity structure of the occupation hierarchy.

In the soft-axis limit the bucket occupations collapse onto a single
family generated from the three-dimensional one,

    N_3(lambda) = g_3(e^{lambda phi}) / (eta1 eta2 eta3),
    N_2 = (1/x1) dN_3/dlambda,
    N_1 = (1/(x1 x2)) d^2 N_3/dlambda^2,
    N_0 = (1/(x1 x2 x3)) d^3 N_3/dlambda^3,

with x_i = phi/eta_i, evaluated at lambda = -1.  The ladder holds
because d/dlambda g_p(e^{lambda phi}) = phi g_{p-1}(e^{lambda phi}).
This module evaluates the family, verifies the ladder both
analytically and by finite differences, and exports reduced-variable
curves for collapse plots.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .occupation import ThermoPoint
from .series import DEFAULT_CONTROL, SeriesControl, bose_g
from .solver import SweepTable, scaling_params
from .temperatures import TemperatureSet
from .trap import TrapGeometry


def n_lambda(
    trap: TrapGeometry,
    point: ThermoPoint,
    lam: float,
    d: int,
    ctrl: SeriesControl = DEFAULT_CONTROL,
) -> float:
    """Member N_d(lambda) of the similarity family (requires lambda*phi < 0)."""
    if lam * point.phi >= 0.0:
        raise DomainError(f"lambda*phi must be negative, got {lam * point.phi}")
    x = math.exp(lam * point.phi)
    e1, e2, e3 = point.eta
    if d == 3:
        return bose_g(3, x, ctrl) / (e1 * e2 * e3)
    if d == 2:
        return bose_g(2, x, ctrl) / (e2 * e3)
    if d == 1:
        return bose_g(1, x) / e3
    if d == 0:
        return bose_g(0, x)
    raise DomainError(f"bucket index must be 0..3, got {d!r}")


@dataclass(frozen=True)
class LadderResiduals:
    """Relative residuals of the three ladder identities at lambda = -1."""

    r2: float
    r1: float
    r0: float


def ladder_residuals(
    trap: TrapGeometry,
    point: ThermoPoint,
    fd_step: float = 1e-4,
    ctrl: SeriesControl = DEFAULT_CONTROL,
) -> tuple[LadderResiduals, LadderResiduals]:
    """Verify the derivative ladder two ways at lambda = -1.

    Returns (analytic, finite_difference) residual triples.  The
    analytic route substitutes d/dlambda g_p = phi g_{p-1} directly.
    The finite-difference route checks each rung with a central first
    difference of the rung above (d^3 N_3 = x1 x2 dN_1/dlambda and so
    on); nesting first differences keeps roundoff at the eps/h level,
    where a direct third-difference stencil would lose ten digits to
    cancellation at the stated step sizes.  Truncation is second order
    in ``fd_step``.
    """
    if not (fd_step > 0.0):
        raise DomainError(f"finite-difference step must be positive, got {fd_step}")
    phi = point.phi
    x1, x2, x3 = scaling_params(point)
    lam = -1.0
    h = fd_step

    def family(d, at):
        return n_lambda(trap, point, at, d, ctrl)

    n3, n2, n1, n0 = (family(d, lam) for d in (3, 2, 1, 0))

    z = math.exp(lam * phi)
    e1, e2, e3 = point.eta
    d1 = phi * bose_g(2, z, ctrl) / (e1 * e2 * e3)
    d2 = phi * phi * bose_g(1, z) / (e1 * e2 * e3)
    d3 = phi**3 * bose_g(0, z) / (e1 * e2 * e3)
    analytic = LadderResiduals(
        r2=abs(n2 - d1 / x1) / abs(n2),
        r1=abs(n1 - d2 / (x1 * x2)) / abs(n1),
        r0=abs(n0 - d3 / (x1 * x2 * x3)) / abs(n0),
    )

    fd_d1 = (family(3, lam + h) - family(3, lam - h)) / (2.0 * h)
    fd_d2 = (family(2, lam + h) - family(2, lam - h)) / (2.0 * h)
    fd_d3 = (family(1, lam + h) - family(1, lam - h)) / (2.0 * h)
    finite = LadderResiduals(
        r2=abs(n2 - fd_d1 / x1) / abs(n2),
        r1=abs(n1 - fd_d2 / x2) / abs(n1),
        r0=abs(n0 - fd_d3 / x3) / abs(n0),
    )
    return analytic, finite


@dataclass(frozen=True)
class CollapseData:
    """Reduced-variable curves (T/T_d*, N_d/N normalized to unit peak)."""

    curves: dict
    grid: np.ndarray | None
    spread: float | None


def collapse_export(table: SweepTable, temps: TemperatureSet, grid_points: int = 200) -> CollapseData:
    """Export per-bucket curves in reduced units for collapse plots.

    For every bucket with an applicable crossover temperature, the
    curve is (T/T_d*, frac_d / max(frac_d)).  The spread is the largest
    pointwise difference between the normalized curves over the common
    reduced-temperature range (None when fewer than two curves exist).
    """
    stars = {1: temps.t1d_star, 2: temps.t2d_star, 3: temps.t3d_star}
    t = table.column("T")
    curves = {}
    for d, star in stars.items():
        if star is None:
            continue
        frac = table.column(f"frac{d}")
        peak = frac.max()
        if peak <= 0.0:
            continue
        curves[d] = (t / star, frac / peak)
    if len(curves) < 2:
        return CollapseData(curves=curves, grid=None, spread=None)
    lo = max(c[0].min() for c in curves.values())
    hi = min(c[0].max() for c in curves.values())
    grid = np.linspace(lo, hi, grid_points)
    interped = [np.interp(grid, c[0], c[1]) for c in curves.values()]
    stacked = np.vstack(interped)
    spread = float((stacked.max(axis=0) - stacked.min(axis=0)).max())
    return CollapseData(curves=curves, grid=grid, spread=spread)


def stage_crossings(table: SweepTable) -> dict:
    """Temperatures where successive bucket fractions overtake each other.

    Scanning from high to low temperature, records the first crossings
    frac2 >= frac3, frac1 >= frac2 and frac0 >= frac1 (keys "t32",
    "t21", "t10"; value None when a crossing never happens inside the
    table).  Crossing positions are linearly interpolated between grid
    points.  For a multistep trap these are the operational stage
    temperatures of the cascade.
    """
    t = table.column("T")
    order = np.argsort(t)[::-1]
    t = t[order]
    fracs = {d: table.column(f"frac{d}")[order] for d in range(4)}

    def first_crossing(upper, lower):
        diff = fracs[upper] - fracs[lower]
        for i in range(1, len(t)):
            if diff[i - 1] > 0.0 >= diff[i]:
                frac = diff[i - 1] / (diff[i - 1] - diff[i])
                return float(t[i - 1] + (t[i] - t[i - 1]) * frac)
        return None

    return {
        "t32": first_crossing(3, 2),
        "t21": first_crossing(2, 1),
        "t10": first_crossing(1, 0),
    }
