"""Condensation temperatures, finite-size crossovers, phase structure.

Bulk (large-N) condensation temperatures for the three effective
dimensionalities of a trapped ideal Bose gas:

    T_3D = (N w1 w2 w3 / zeta(3))^(1/3)
    T_2D = (N w2 w3 / zeta(2))^(1/2)
    T_1D = N w3 / log(2N)

Finite-size crossover temperatures shift these by powers of the
commensurability integers over N; which crossover applies depends on
the trap regime.  The multistep classifier turns the printed
inequalities into flags with margin ratios (a margin is the left side
over the right side, so "well satisfied" means margin >> 1).
"""

import math
import warnings
from dataclasses import dataclass
from enum import Enum

from scipy.optimize import brentq

from .errors import DomainError, InapplicableFormulaError
from .series import ZETA2, ZETA3
from .trap import Regime, TrapGeometry, build_trap


def _check_natoms(n: float) -> float:
    if not (n >= 1.0) or not math.isfinite(n):
        raise DomainError(f"atom number must be at least 1, got {n}")
    return float(n)


@dataclass(frozen=True)
class TemperatureSet:
    """Bulk and crossover temperatures; inapplicable entries are None."""

    t3d: float
    t2d: float
    t1d: float
    t3d_star: float | None = None
    t2d_star: float | None = None
    t1d_star: float | None = None


def bulk_temps(trap: TrapGeometry, n_atoms: float, t2d_norm: str = "zeta2") -> TemperatureSet:
    """Large-N condensation temperature scales for all three dimensionalities.

    ``t2d_norm`` selects the normalization of the two-dimensional
    scale: "zeta2" (default) or "two_zeta2" for the variant with
    2 zeta(2) in the denominator.
    """
    n = _check_natoms(n_atoms)
    w1, w2, w3 = trap.omega
    if t2d_norm == "zeta2":
        z2norm = ZETA2
    elif t2d_norm == "two_zeta2":
        z2norm = 2.0 * ZETA2
    else:
        raise DomainError(f"t2d_norm must be 'zeta2' or 'two_zeta2', got {t2d_norm!r}")
    return TemperatureSet(
        t3d=(n * w1 * w2 * w3 / ZETA3) ** (1.0 / 3.0),
        t2d=(n * w2 * w3 / z2norm) ** 0.5,
        t1d=n * w3 / math.log(2.0 * n),
    )


def crossover_t3(trap: TrapGeometry, n_atoms: float, c1: float = 1.0) -> float:
    """Finite-size three-dimensional condensation temperature.

    Prolate and isotropic traps:
        T_3D * (1 + (c1-1)/3 * zeta(2)/zeta(3)^(2/3) * (k3/N)^(1/3))
    Maximal traps replace (c1-1) by (c1-1/2) and k3 by k2*k3.
    Not defined for oblate traps.
    """
    n = _check_natoms(n_atoms)
    t3d = bulk_temps(trap, n).t3d
    pref = ZETA2 / ZETA3 ** (2.0 / 3.0)
    if trap.regime in (Regime.PROLATE, Regime.ISOTROPIC):
        return t3d * (1.0 + (c1 - 1.0) / 3.0 * pref * (trap.k[2] / n) ** (1.0 / 3.0))
    if trap.regime is Regime.MAXIMAL:
        return t3d * (
            1.0 + (c1 - 0.5) / 3.0 * pref * (trap.k[1] * trap.k[2] / n) ** (1.0 / 3.0)
        )
    raise InapplicableFormulaError(
        f"three-dimensional crossover is not defined for the {trap.regime.value} regime"
    )


def crossover_t2(
    trap: TrapGeometry,
    n_atoms: float,
    c2: float = 1.0,
    mode: str = "closed_form",
    t2d_norm: str = "zeta2",
) -> float:
    """Finite-size two-dimensional condensation temperature.

    Applies to oblate and maximal traps.  ``mode="closed_form"`` uses
    the printed large-N reductions (valid for c2 = 1 only):

        oblate:  T_2D * (1 + sqrt(kappa/(N zeta2)) * log(N/(kappa zeta2)))
        maximal: same with an extra 5/8 on the correction

    ``mode="full_solve"`` solves the underlying particle-number
    relation numerically for the positive root and supports general
    c2 > 0.
    """
    n = _check_natoms(n_atoms)
    if trap.regime not in (Regime.OBLATE, Regime.MAXIMAL):
        raise InapplicableFormulaError(
            f"two-dimensional crossover is not defined for the {trap.regime.value} regime"
        )
    if mode == "closed_form":
        if c2 != 1.0:
            raise InapplicableFormulaError(
                "closed-form two-dimensional crossover is derived for c2 = 1; "
                "use mode='full_solve' for other values"
            )
        t2d = bulk_temps(trap, n, t2d_norm).t2d
        kappa = trap.kappa
        log_arg = n / (kappa * ZETA2)
        if log_arg <= 1.0:
            raise DomainError(
                f"two-dimensional crossover needs N/(kappa*zeta2) > 1, got {log_arg}"
            )
        correction = math.sqrt(kappa / (n * ZETA2)) * math.log(log_arg)
        if trap.regime is Regime.MAXIMAL:
            correction *= 5.0 / 8.0
        return t2d * (1.0 + correction)
    if mode == "full_solve":
        return _crossover_t2_full(trap, n, c2)
    raise DomainError(f"mode must be 'closed_form' or 'full_solve', got {mode!r}")


def _crossover_t2_full(trap: TrapGeometry, n: float, c2: float) -> float:
    if not (c2 > 0.0):
        raise DomainError(f"c2 must be positive for the full solve, got {c2}")
    w2, w3 = trap.omega[1], trap.omega[2]

    if trap.regime is Regime.OBLATE:

        def rhs(T: float) -> float:
            return T * T * ZETA2 / (w2 * w2) - (T / w2) * (
                (1.0 + c2)
                + (1.0 + c2) * math.log(T / (w2 * (1.0 + c2)))
                + 2.0 * math.log(T / (w2 * c2))
            )

    else:

        def rhs(T: float) -> float:
            return T * T * ZETA2 / (w2 * w3) - (T / w3) * (
                (0.5 + c2)
                + (0.5 + c2) * math.log(T / (w2 * (0.5 + c2)))
                + math.log(T / (w2 * c2))
            )

    t2d = bulk_temps(trap, n).t2d
    lo, hi = t2d, t2d
    while rhs(lo) - n > 0.0:
        lo *= 0.5
        if lo < 1e-12 * t2d:
            raise DomainError("no lower bracket for the two-dimensional crossover solve")
    while rhs(hi) - n < 0.0:
        hi *= 2.0
        if hi > 1e12 * t2d:
            raise DomainError("no upper bracket for the two-dimensional crossover solve")
    return brentq(lambda T: rhs(T) - n, lo, hi, xtol=1e-15, rtol=1e-14)


def crossover_t1(trap: TrapGeometry, n_atoms: float, c3: float = 1.0) -> float:
    """Finite-size one-dimensional condensation temperature.

        T_1D* = N w3 / log(2N / (1 + 2 c3))

    Applies to prolate and maximal traps; c3 = 0 recovers the bulk
    T_1D.  Raises :class:`DomainError` when the log argument drops to
    or below one.
    """
    n = _check_natoms(n_atoms)
    if trap.regime not in (Regime.PROLATE, Regime.MAXIMAL):
        raise InapplicableFormulaError(
            f"one-dimensional crossover is not defined for the {trap.regime.value} regime"
        )
    arg = 2.0 * n / (1.0 + 2.0 * c3)
    if arg <= 1.0:
        raise DomainError(f"log argument must exceed 1, got {arg}")
    return n * trap.omega[2] / math.log(arg)


class MultistepLabel(Enum):
    DIRECT = "DirectBEC"
    TWO_STEP = "TwoStep"
    TWO_DIMENSIONAL = "TwoDimensionalBEC"
    THREE_STEP = "ThreeStepReduction"


@dataclass(frozen=True)
class MultistepReport:
    """Operationalized multistep-condensation inequalities.

    Strict ">>" conditions are evaluated as plain ">" and every flag
    carries its margin ratio lhs/rhs so the caller can judge how
    decisively it holds.
    """

    label: MultistepLabel
    cond_a: bool
    margin_a: float
    cond_b: bool
    margin_b: float
    cond_c: bool
    margin_c: float
    window: tuple[float, float]
    in_window: bool
    three_step_kappa: bool
    margin_three_step_kappa: float
    three_step_k3: bool
    margin_three_step_k3: float
    two_d_visible: bool
    margin_two_d: float


def multistep_flags(
    trap: TrapGeometry, n_atoms: float, zeta_as_one: bool = False
) -> MultistepReport:
    """Evaluate the multistep-condensation conditions for a trap.

    Conditions (margins are lhs/rhs):

      A: kappa      >> N zeta(2) / log(2N)^2
      B: k3^2/kappa >> N zeta(3)^2 / zeta(2)^3
      C: k3 kappa   >> N^2 / log(2N)^3

    Two-step window: N/log(2N)^{3/2} < k3 < N/log(2N).
    Three-step pair: condition A together with
    k3 > (zeta(3)/zeta(2)) N / log(2N).
    Two-dimensional visibility: k3 > sqrt(N/zeta(2)).

    ``zeta_as_one`` replaces both zeta values by 1 (phase-diagram
    normalization).  The label is chosen by regime: isotropic traps
    condense directly; prolate traps are TwoStep inside the window;
    oblate traps show TwoDimensionalBEC when visible; maximal traps
    are ThreeStepReduction when the pair holds, then fall back to the
    two-dimensional, window and direct cases in that order.
    """
    n = _check_natoms(n_atoms)
    z2, z3 = (1.0, 1.0) if zeta_as_one else (ZETA2, ZETA3)
    k3 = trap.k[2]
    kappa = trap.kappa
    log2n = math.log(2.0 * n)

    margin_a = kappa / (n * z2 / log2n**2)
    margin_b = (k3 * k3 / kappa) / (n * z3 * z3 / z2**3)
    margin_c = (k3 * kappa) / (n * n / log2n**3)
    window = (n / log2n**1.5, n / log2n)
    in_window = window[0] < k3 < window[1]
    # the kappa half of the three-step pair is condition A again
    margin_3k = margin_a
    margin_3k3 = k3 / ((z3 / z2) * n / log2n)
    three_kappa = margin_3k > 1.0
    three_k3 = margin_3k3 > 1.0
    margin_2d = k3 / math.sqrt(n / z2)
    visible_2d = margin_2d > 1.0

    if trap.regime is Regime.ISOTROPIC:
        label = MultistepLabel.DIRECT
    elif trap.regime is Regime.PROLATE:
        label = MultistepLabel.TWO_STEP if in_window else MultistepLabel.DIRECT
    elif trap.regime is Regime.OBLATE:
        label = MultistepLabel.TWO_DIMENSIONAL if visible_2d else MultistepLabel.DIRECT
    else:
        if three_kappa and three_k3:
            label = MultistepLabel.THREE_STEP
        elif visible_2d:
            label = MultistepLabel.TWO_DIMENSIONAL
        elif in_window:
            label = MultistepLabel.TWO_STEP
        else:
            label = MultistepLabel.DIRECT

    return MultistepReport(
        label=label,
        cond_a=margin_a > 1.0,
        margin_a=margin_a,
        cond_b=margin_b > 1.0,
        margin_b=margin_b,
        cond_c=margin_c > 1.0,
        margin_c=margin_c,
        window=window,
        in_window=in_window,
        three_step_kappa=three_kappa,
        margin_three_step_kappa=margin_3k,
        three_step_k3=three_k3,
        margin_three_step_k3=margin_3k3,
        two_d_visible=visible_2d,
        margin_two_d=margin_2d,
    )


def delta_t_correction(n_atoms: float, k3: int, c1: float = 1.0) -> float:
    """Relative finite-size shift of the 3-D condensation temperature.

        dT / T_3D = (c1/3) * zeta(2)/zeta(3)^(2/3) * (k3/N)^(1/3)
    """
    n = _check_natoms(n_atoms)
    if k3 < 1:
        raise DomainError(f"k3 must be at least 1, got {k3}")
    return (c1 / 3.0) * ZETA2 / ZETA3 ** (2.0 / 3.0) * (k3 / n) ** (1.0 / 3.0)


def interaction_shift(a_over_length: float, n_atoms: float) -> float:
    """Relative interaction-induced shift scale, |dT|/T ~ (a/L) N^(1/6)."""
    n = _check_natoms(n_atoms)
    if a_over_length < 0.0:
        raise DomainError(f"scattering length ratio must be nonnegative, got {a_over_length}")
    return a_over_length * n ** (1.0 / 6.0)


def phase_point(
    ratio12: float, ratio23: float, n_atoms: float, zeta_as_one: bool = False
) -> MultistepReport:
    """Classify a point of the anisotropy plane (w1/w2, w2/w3).

    Ratios are rounded to the nearest commensurate integers
    k2 = round(ratio12), k3 = round(ratio12 * ratio23); a rounding that
    moves either ratio by more than 1e-6 relative emits a warning (the
    classifier itself only sees integers).
    """
    if ratio12 < 1.0 or ratio23 < 1.0:
        raise DomainError(f"anisotropy ratios must be >= 1, got ({ratio12}, {ratio23})")
    _check_natoms(n_atoms)
    k2 = max(1, round(ratio12))
    k3 = max(k2, round(ratio12 * ratio23))
    if abs(k2 - ratio12) > 1e-6 * ratio12 or abs(k3 - ratio12 * ratio23) > 1e-6 * (
        ratio12 * ratio23
    ):
        warnings.warn(
            f"anisotropy ratios ({ratio12}, {ratio23}) rounded to integers ({k2}, {k3})",
            stacklevel=2,
        )
    trap = build_trap(1.0, 1.0 / k2, 1.0 / k3)
    return multistep_flags(trap, n_atoms, zeta_as_one)


def temperature_set(
    trap: TrapGeometry,
    n_atoms: float,
    c1: float = 1.0,
    c2: float = 1.0,
    c3: float = 1.0,
    t2_mode: str = "closed_form",
    t2d_norm: str = "zeta2",
) -> TemperatureSet:
    """Bundle the bulk scales with every crossover the regime admits.

    Crossovers outside the trap's regime are left as None; errors from
    an applicable crossover (an unsupported c2 in closed form, say)
    propagate.
    """
    bulk = bulk_temps(trap, n_atoms, t2d_norm)
    regime = trap.regime
    t3s = (
        crossover_t3(trap, n_atoms, c1)
        if regime in (Regime.PROLATE, Regime.ISOTROPIC, Regime.MAXIMAL)
        else None
    )
    t2s = (
        crossover_t2(trap, n_atoms, c2, t2_mode, t2d_norm)
        if regime in (Regime.OBLATE, Regime.MAXIMAL)
        else None
    )
    t1s = (
        crossover_t1(trap, n_atoms, c3)
        if regime in (Regime.PROLATE, Regime.MAXIMAL)
        else None
    )
    return TemperatureSet(
        t3d=bulk.t3d, t2d=bulk.t2d, t1d=bulk.t1d,
        t3d_star=t3s, t2d_star=t2s, t1d_star=t1s,
    )
