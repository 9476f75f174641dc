"""Bose-Einstein functions and the geometric-sum identities behind them.

The central object is the Bose-Einstein function

    g_p(z) = sum_{n>=1} z^n / n^p,        0 <= z < 1,

with closed forms for p = 0, 1, block-summed power series for p >= 2,
and the near-unity asymptotics that control chemical potentials close
to condensation.  The geometric moment sums and the small-argument
expansion mirror the identities used to resum occupation numbers over
harmonic oscillator levels.  Everything works on plain floats in
natural units (k_B = hbar = 1).
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, UnsupportedOrderError

ZETA2 = math.pi**2 / 6.0
ZETA3 = 1.2020569031595943

# Terms are generated in fixed-size blocks so the truncation point is
# independent of how the partial sums are chunked.
_BLOCK = 4096


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy shared by the series evaluations.

    Summation stops at the first term smaller than
    ``max(abs_tol, rel_tol * partial_sum)`` (that term is still added).
    Exceeding ``max_terms`` raises :class:`ConvergenceError` carrying
    the last term as the achieved bound.
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-15
    max_terms: int = 10**6


DEFAULT_CONTROL = SeriesControl()


def bose_g(p: int, z: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Bose-Einstein function g_p(z) for 0 <= z < 1.

    Parameters
    ----------
    p : int
        Order of the function, p >= 0.  p = 0 and p = 1 use the closed
        forms z/(1-z) and -log(1-z); higher orders sum the defining
        power series under the truncation rule in ``ctrl``.
    z : float
        Fugacity-like argument, must satisfy 0 <= z < 1.
    """
    if not isinstance(p, int) or p < 0:
        raise UnsupportedOrderError(f"order must be a nonnegative integer, got {p!r}")
    if not 0.0 <= z < 1.0:
        raise DomainError(f"argument must lie in [0, 1), got {z}")
    if p == 0:
        return z / (1.0 - z)
    if p == 1:
        return -math.log1p(-z)
    if z == 0.0:
        return 0.0
    log_z = math.log(z)
    total = 0.0
    start = 1
    while start <= ctrl.max_terms:
        stop = min(start + _BLOCK, ctrl.max_terms + 1)
        n = np.arange(start, stop, dtype=np.float64)
        terms = np.exp(n * log_z) / n**p
        partial = total + np.cumsum(terms)
        below = terms < np.maximum(ctrl.abs_tol, ctrl.rel_tol * partial)
        hits = np.nonzero(below)[0]
        if hits.size:
            return float(partial[hits[0]])
        total = float(partial[-1])
        start = stop
    raise ConvergenceError(
        f"g_{p}({z}) did not converge within {ctrl.max_terms} terms",
        bound=float(terms[-1]),
    )


def bose_g_near_one(p: int, alpha: float) -> float:
    """Asymptotics of g_p(e^{-alpha}) for small positive alpha.

    Implemented for p = 3,

        g_3(e^-a) ~ zeta(3) - zeta(2) a + (3/2 - log a) a^2 / 2,

    and p = 2,

        g_2(e^-a) ~ zeta(2) + (log a - 1) a.

    Accuracy degrades as alpha grows; the caller owns the validity
    range.
    """
    if alpha <= 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if p == 3:
        return ZETA3 - ZETA2 * alpha + 0.5 * (1.5 - math.log(alpha)) * alpha**2
    if p == 2:
        return ZETA2 + (math.log(alpha) - 1.0) * alpha
    raise UnsupportedOrderError(f"near-unity expansion implemented for p in (2, 3), got {p!r}")


def geometric_moment_sum(r: int, eta: float) -> float:
    """Closed form of the geometric moment sum over oscillator levels.

    r = 0 gives sum_{M>=0} e^{-M eta} = 1/(1 - e^-eta); r = 1 and r = 2
    give the first and second moments over M >= 1,

        sum M e^{-M eta}   = e^-eta / (1 - e^-eta)^2,
        sum M^2 e^{-M eta} = e^-eta (1 + e^-eta) / (1 - e^-eta)^3.
    """
    if eta <= 0.0:
        raise DomainError(f"eta must be positive, got {eta}")
    w = math.exp(-eta)
    one_minus_w = -math.expm1(-eta)
    if r == 0:
        return 1.0 / one_minus_w
    if r == 1:
        return w / one_minus_w**2
    if r == 2:
        return w * (1.0 + w) / one_minus_w**3
    raise UnsupportedOrderError(f"moment order must be 0, 1 or 2, got {r!r}")


def small_eta_expansion(eta: float, order: int = 2) -> float:
    """Truncated small-eta form of e^-eta / (1 - e^-eta).

    order = 1 keeps the leading term e^{-eta/2}/eta, order = 2 adds the
    correction -eta e^{-eta/2}/24.
    """
    if eta <= 0.0:
        raise DomainError(f"eta must be positive, got {eta}")
    if order not in (1, 2):
        raise UnsupportedOrderError(f"expansion order must be 1 or 2, got {order!r}")
    lead = math.exp(-0.5 * eta) / eta
    if order == 1:
        return lead
    return lead - eta * math.exp(-0.5 * eta) / 24.0
