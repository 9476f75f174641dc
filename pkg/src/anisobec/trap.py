"""Harmonic trap geometry: commensurate frequencies, levels, regimes.

A three-dimensional harmonic trap with frequencies sorted descending,
omega_1 >= omega_2 >= omega_3, is commensurate when every ratio
omega_1/omega_i is (numerically) an integer k_i.  Then
omega_i * k_i = omega_common for all axes and a single-particle level
n = (n1, n2, n3) splits as n_i = k_i * nu_i + lambda_i with
0 <= lambda_i < k_i, so that

    E_n = omega_common * M + sum_i omega_i lambda_i + E_0,
    M = nu_1 + nu_2 + nu_3,   E_0 = (omega_1 + omega_2 + omega_3) / 2.

The anisotropy pattern of the integers (k_1, k_2, k_3) fixes the trap
regime, which in turn selects which resummed occupation formulas apply.
Natural units (k_B = hbar = 1) throughout.
"""

import enum
import math
from dataclasses import dataclass

from .errors import CommensurabilityError, DomainError


class Regime(enum.Enum):
    ISOTROPIC = "isotropic"
    PROLATE = "prolate"
    OBLATE = "oblate"
    MAXIMAL = "maximal"


@dataclass(frozen=True)
class TrapGeometry:
    """Frequencies (descending), commensurability integers and deriveds."""

    omega: tuple[float, float, float]
    k: tuple[int, int, int]
    omega_common: float
    omega_geo: float
    kappa: float
    e0: float
    regime: Regime


@dataclass(frozen=True)
class LevelDecomposition:
    """Split of a level into global index M and per-axis remainders."""

    nu: tuple[int, int, int]
    lam: tuple[int, int, int]
    M: int


def build_trap(
    omega1: float, omega2: float, omega3: float, commensurability_tol: float = 1e-9
) -> TrapGeometry:
    """Construct a :class:`TrapGeometry` from three trap frequencies.

    Frequencies may be passed in any order; they are sorted descending.
    Each ratio omega_max/omega_i must be within ``commensurability_tol``
    of an integer, otherwise :class:`CommensurabilityError` is raised.
    """
    for w in (omega1, omega2, omega3):
        if not (w > 0.0) or not math.isfinite(w):
            raise DomainError(f"trap frequencies must be positive and finite, got {w}")
    omega = tuple(sorted((omega1, omega2, omega3), reverse=True))
    k = []
    for w in omega:
        ratio = omega[0] / w
        nearest = round(ratio)
        if abs(ratio - nearest) > commensurability_tol or nearest < 1:
            raise CommensurabilityError(
                f"frequency ratio {ratio} is not within {commensurability_tol} of an integer"
            )
        k.append(int(nearest))
    k = tuple(k)
    if k[0] == k[2]:
        regime = Regime.ISOTROPIC
    elif k[0] == k[1]:
        regime = Regime.PROLATE
    elif k[1] == k[2]:
        regime = Regime.OBLATE
    else:
        regime = Regime.MAXIMAL
    return TrapGeometry(
        omega=omega,
        k=k,
        omega_common=omega[0] * k[0],
        omega_geo=(omega[0] * omega[1] * omega[2]) ** (1.0 / 3.0),
        kappa=k[2] / k[1],
        e0=0.5 * (omega[0] + omega[1] + omega[2]),
        regime=regime,
    )


def _check_level(n) -> tuple[int, int, int]:
    if len(n) != 3:
        raise DomainError(f"level index must have three components, got {n!r}")
    out = []
    for ni in n:
        if ni != int(ni) or ni < 0:
            raise DomainError(f"level indices must be nonnegative integers, got {n!r}")
        out.append(int(ni))
    return tuple(out)


def energy_level(trap: TrapGeometry, n) -> float:
    """Single-particle energy sum_i omega_i (n_i + 1/2)."""
    n = _check_level(n)
    return sum(w * (ni + 0.5) for w, ni in zip(trap.omega, n))


def decompose(trap: TrapGeometry, n) -> LevelDecomposition:
    """Split a level into (nu, lambda, M) with n_i = k_i nu_i + lambda_i."""
    n = _check_level(n)
    nu = tuple(ni // ki for ni, ki in zip(n, trap.k))
    lam = tuple(ni % ki for ni, ki in zip(n, trap.k))
    return LevelDecomposition(nu=nu, lam=lam, M=sum(nu))


def eird(trap: TrapGeometry, T: float) -> int:
    """Effective infrared dimension: number of axes with omega_i/T < 1.

    Axes with omega_i >= T are frozen out; the count of soft axes steps
    through 3, 2, 1, 0 as the temperature drops below each frequency.
    """
    if not (T > 0.0) or not math.isfinite(T):
        raise DomainError(f"temperature must be positive and finite, got {T}")
    return sum(1 for w in trap.omega if w / T < 1.0)


def classify_excitation(trap: TrapGeometry, n, iso_split: str = "maximal") -> int:
    """Bucket a level by the number of axes its excitation explores.

    Returns d in {0, 1, 2, 3}: the ground state is 0, and excited
    states are assigned by regime-specific rules on which components of
    n are nonzero (every level lands in exactly one bucket, and the
    buckets mirror the summation domains of the resummed occupation
    series).  For isotropic traps the maximal-family rule is the
    default; ``iso_split="symmetric"`` selects the prolate-style
    counting that treats the first two axes symmetrically.
    """
    n1, n2, n3 = _check_level(n)
    b1, b2, b3 = n1 > 0, n2 > 0, n3 > 0
    if not (b1 or b2 or b3):
        return 0
    regime = effective_regime(trap.regime, iso_split)
    if regime is Regime.PROLATE:
        if b1 and b2:
            return 3
        if b1 or b2:
            return 2
        return 1
    if regime is Regime.OBLATE:
        if b1:
            return 3
        if b2 and b3:
            return 2
        return 1
    # maximal family
    if b1:
        return 3
    if b2:
        return 2
    return 1


def effective_regime(regime: Regime, iso_split: str = "maximal") -> Regime:
    """Resolve the isotropic regime onto the family used for splitting."""
    if iso_split not in ("maximal", "symmetric"):
        raise DomainError(f"iso_split must be 'maximal' or 'symmetric', got {iso_split!r}")
    if regime is not Regime.ISOTROPIC:
        return regime
    return Regime.PROLATE if iso_split == "symmetric" else Regime.MAXIMAL
