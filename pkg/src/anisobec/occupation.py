"""Per-dimension occupation numbers of an ideal Bose gas in a trap.

The total population splits into buckets N0..N3 by how many trap axes
an excitation explores (see :func:`anisobec.trap.classify_excitation`).
Three routes compute the same split:

* :func:`occupations_exact`: resummed series over the winding index l.
  Expanding each Bose factor as z e^{-E} / (1 - z e^{-E}) =
  sum_l z^l e^{-l E} factorizes the lattice sums into geometric series
  per axis, leaving a single rapidly converging sum.  This is the
  production route.
* :func:`occupations_enumerated`: brute-force sum over the level
  lattice with per-state Bose factors.  Slow and deliberately naive; it
  is the independent oracle the exact route is tested against and
  shares no formulas with it.
* :func:`occupations_asymptotic`: truncated closed forms in terms of
  g_p functions, with the printed finite-size correction terms.  Useful
  for quick estimates and for checking the asymptotic regime.

The ground-state term is always N0 = z/(1-z).  Energies enter measured
from the ground state, in units of T: eta_i = omega_i / T.
"""

import math
from dataclasses import dataclass

from . import kernels
from .errors import ConvergenceError, DomainError
from .series import DEFAULT_CONTROL, SeriesControl, bose_g
from .trap import Regime, TrapGeometry, effective_regime

# Default enumeration cutoffs: e^-40 tails per axis, capped per axis.
_CUTOFF_EXPONENT = 40.0
_CUTOFF_CAP = 10**4


@dataclass(frozen=True)
class ThermoPoint:
    """A (temperature, reduced chemical potential) state of the gas.

    phi = (E_0 - mu)/T > 0 is the reduced chemical potential measured
    from the zero-point energy, z = e^-phi the corresponding fugacity
    and eta_i = omega_i/T the per-axis frozenness parameters.
    ``n_target`` is set when the point came out of a particle-number
    solve.
    """

    T: float
    phi: float
    z: float
    eta: tuple[float, float, float]
    n_target: float | None = None

    @classmethod
    def at(cls, trap: TrapGeometry, T: float, phi: float, n_target: float | None = None):
        if not (T > 0.0) or not math.isfinite(T):
            raise DomainError(f"temperature must be positive and finite, got {T}")
        if not (phi > 0.0) or not math.isfinite(phi):
            raise DomainError(
                f"reduced chemical potential must be positive and finite, got {phi}"
            )
        eta = tuple(w / T for w in trap.omega)
        return cls(T=T, phi=phi, z=math.exp(-phi), eta=eta, n_target=n_target)


@dataclass(frozen=True)
class OccupationSplit:
    """Occupation numbers bucketed by explored dimension."""

    n0: float
    n1: float
    n2: float
    n3: float
    phi: float
    T: float
    shell_warning: bool = False

    @property
    def total(self) -> float:
        return self.n0 + self.n1 + self.n2 + self.n3

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.n0, self.n1, self.n2, self.n3)


def _ground_state(phi: float) -> float:
    # z/(1-z) with the denominator via expm1 so tiny phi stays accurate
    return math.exp(-phi) / (-math.expm1(-phi))


def _series_plan(trap: TrapGeometry, eta, iso_split: str):
    """(prefactor, numerator exponent, denominator etas) per bucket 1..3.

    Each bucket's l-sum is  C * sum_l z^l e^{-l a} / prod_j (1 - e^{-l b_j});
    the a and b lists encode which axes are excited (numerator) and
    which are free (denominator) in that bucket's lattice domain.
    """
    e1, e2, e3 = eta
    regime = effective_regime(trap.regime, iso_split)
    if regime is Regime.PROLATE:
        return [
            (1.0, e3, (e3,)),
            (2.0, e1, (e1, e3)),
            (1.0, 2.0 * e1, (e1, e1, e3)),
        ]
    if regime is Regime.OBLATE:
        return [
            (2.0, e2, (e2,)),
            (1.0, 2.0 * e2, (e2, e2)),
            (1.0, e1, (e1, e2, e2)),
        ]
    return [
        (1.0, e3, (e3,)),
        (1.0, e2, (e2, e3)),
        (1.0, e1, (e1, e2, e3)),
    ]


def occupations_exact(
    trap: TrapGeometry,
    point: ThermoPoint,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    iso_split: str = "maximal",
) -> OccupationSplit:
    """Per-dimension occupations from the resummed l-series.

    Exact in the sense that no small-eta expansion is involved; the
    only error is series truncation under ``ctrl``.  Raises
    :class:`ConvergenceError` when a bucket series does not reach
    tolerance within ``ctrl.max_terms``.
    """
    values = []
    for coeff, a, bs in _series_plan(trap, point.eta, iso_split):
        padded = tuple(bs) + (0.0,) * (3 - len(bs))
        value, last, nterms, ok = kernels.bose_series(
            point.phi, a, padded[0], padded[1], padded[2], len(bs),
            ctrl.rel_tol, ctrl.abs_tol, ctrl.max_terms,
        )
        if not ok:
            raise ConvergenceError(
                f"occupation series stalled after {nterms} terms at phi={point.phi}",
                bound=last,
            )
        values.append(coeff * value)
    return OccupationSplit(
        n0=_ground_state(point.phi),
        n1=values[0], n2=values[1], n3=values[2],
        phi=point.phi, T=point.T,
    )


def default_cutoffs(point: ThermoPoint) -> tuple[int, int, int]:
    """Per-axis enumeration cutoffs ceil(40/eta_i), capped at 10^4."""
    return tuple(min(_CUTOFF_CAP, math.ceil(_CUTOFF_EXPONENT / e)) for e in point.eta)


# Octant index -> bucket, keyed by effective regime.  Octants are
# indexed 4*(n1>0) + 2*(n2>0) + (n3>0), matching the kernel layout.
_OCTANT_BUCKETS = {
    Regime.PROLATE: (0, 1, 2, 2, 2, 2, 3, 3),
    Regime.OBLATE: (0, 1, 1, 2, 3, 3, 3, 3),
    Regime.MAXIMAL: (0, 1, 2, 2, 3, 3, 3, 3),
}


def occupations_enumerated(
    trap: TrapGeometry,
    point: ThermoPoint,
    cutoff: tuple[int, int, int] | None = None,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    iso_split: str = "maximal",
) -> OccupationSplit:
    """Brute-force oracle: sum Bose factors state by state.

    Loops over the level box [0,c1] x [0,c2] x [0,c3], evaluates
    z e^{-E}/(1 - z e^{-E}) for every state with E measured from the
    ground level, and buckets by the same classification rules as
    :func:`anisobec.trap.classify_excitation`.  No resummation is used
    anywhere, which is the point: this is the independent check.

    ``shell_warning`` is set on the result when the three boundary
    faces of the box contribute more than
    max(ctrl.abs_tol, ctrl.rel_tol * total), indicating the cutoffs
    truncate a non-negligible tail.
    """
    if cutoff is None:
        cutoff = default_cutoffs(point)
    c1, c2, c3 = (int(c) for c in cutoff)
    if min(c1, c2, c3) < 1:
        raise DomainError(f"cutoffs must be at least 1 per axis, got {cutoff}")
    e1, e2, e3 = point.eta
    z = point.z
    octants = kernels.lattice_octants(e1, e2, e3, z, c1, c2, c3)
    # single state (0,0,0): recompute with expm1 precision
    octants[0] = _ground_state(point.phi)

    buckets = [0.0, 0.0, 0.0, 0.0]
    mapping = _OCTANT_BUCKETS[effective_regime(trap.regime, iso_split)]
    for idx, value in enumerate(octants):
        buckets[mapping[idx]] += value
    total = sum(buckets)

    # Boundary faces, each as a pinned-axis 2-D lattice sum.  Edge and
    # corner states are counted more than once; fine for a warning.
    face = 0.0
    face += sum(kernels.lattice_octants(e2, e3, 1.0, z * math.exp(-c1 * e1), c2, c3, 0))
    face += sum(kernels.lattice_octants(e1, e3, 1.0, z * math.exp(-c2 * e2), c1, c3, 0))
    face += sum(kernels.lattice_octants(e1, e2, 1.0, z * math.exp(-c3 * e3), c1, c2, 0))
    warn = face > max(ctrl.abs_tol, ctrl.rel_tol * total)

    return OccupationSplit(
        n0=buckets[0], n1=buckets[1], n2=buckets[2], n3=buckets[3],
        phi=point.phi, T=point.T, shell_warning=warn,
    )


def occupations_asymptotic(
    trap: TrapGeometry,
    point: ThermoPoint,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    iso_split: str = "maximal",
) -> OccupationSplit:
    """Truncated asymptotic forms with finite-size correction terms.

    These are the closed g_p expressions obtained from the l-series by
    the small-eta expansion of each geometric factor, keeping the first
    correction.  Valid when the soft axes are soft (eta small) and the
    g_p arguments stay below one; outside that window accuracy degrades
    or a :class:`DomainError` surfaces from g_p itself.
    """
    e1, e2, e3 = point.eta
    z = point.z
    k2, k3 = trap.k[1], trap.k[2]
    regime = effective_regime(trap.regime, iso_split)
    if regime is Regime.PROLATE:
        arg1 = z * math.exp(-0.5 * e3)
        arg2 = z * math.exp(-0.5 * (e1 - e3))
        arg3 = z * math.exp(-(e1 - 0.5 * e3))
        n1 = bose_g(1, arg1) / e3
        n2 = 2.0 * bose_g(2, arg2, ctrl) / (e1 * e3) - k3 * bose_g(0, arg2) / 12.0
        n3 = bose_g(3, arg3, ctrl) / (e1 * e1 * e3) - bose_g(1, arg3) / (12.0 * e3)
    elif regime is Regime.OBLATE:
        arg1 = z * math.exp(-0.5 * e2)
        arg2 = z * math.exp(-e2)
        arg3 = z * math.exp(-(0.5 * e1 - e2))
        n1 = 2.0 * bose_g(1, arg1) / e2
        n2 = bose_g(2, arg2, ctrl) / (e2 * e2)
        n3 = bose_g(3, arg3, ctrl) / (e1 * e2 * e2) - bose_g(1, arg3) * (
            e1 * e1 + 2.0 * e2 * e2
        ) / (24.0 * e1 * e2 * e2)
    else:
        kappa = k3 / k2
        arg1 = z * math.exp(-0.5 * e3)
        arg2 = z * math.exp(-0.5 * e2)
        arg3 = z * math.exp(-0.5 * (e1 - e2 - e3))
        n1 = bose_g(1, arg1) / e3
        n2 = bose_g(2, arg2, ctrl) / (e2 * e3) - kappa * bose_g(0, arg2) / 24.0
        n3 = bose_g(3, arg3, ctrl) / (e1 * e2 * e3) - bose_g(1, arg3) * (
            e1 * e1 + e2 * e2 + e3 * e3
        ) / (24.0 * e1 * e2 * e3)
    return OccupationSplit(
        n0=_ground_state(point.phi),
        n1=n1, n2=n2, n3=n3,
        phi=point.phi, T=point.T,
    )
