# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: lattice occupation sums and fugacity series."""

from libc.math cimport exp, expm1


def lattice_octants(double eta1, double eta2, double eta3, double z,
                    Py_ssize_t c1, Py_ssize_t c2, Py_ssize_t c3):
    """Sum Bose occupations over the level box [0,c1] x [0,c2] x [0,c3].

    Each state contributes z*e^{-E}/(1 - z*e^{-E}) with
    E = n1*eta1 + n2*eta2 + n3*eta3 (energy measured from the ground
    state in units of T).  Contributions accumulate into eight octants
    keyed by which components are nonzero,
    index = 4*(n1>0) + 2*(n2>0) + (n3>0).  Returns a list of the eight
    sums in a fixed summation order (n3 innermost), so results are
    deterministic for given inputs.
    """
    cdef double s[8]
    cdef Py_ssize_t i, n1, n2, n3
    for i in range(8):
        s[i] = 0.0
    cdef double w3 = exp(-eta3)
    cdef double base, e, acc
    cdef int i12
    for n1 in range(c1 + 1):
        for n2 in range(c2 + 1):
            i12 = (4 if n1 > 0 else 0) + (2 if n2 > 0 else 0)
            base = z * exp(-(n1 * eta1 + n2 * eta2))
            s[i12] += base / (1.0 - base)
            acc = 0.0
            e = base
            for n3 in range(1, c3 + 1):
                e *= w3
                acc += e / (1.0 - e)
            s[i12 + 1] += acc
    return [s[i] for i in range(8)]


def bose_series(double phi, double a, double b1, double b2, double b3,
                int nden, double rel_tol, double abs_tol, long max_terms):
    """Resummed occupation series sum_{l>=1} e^{-l(phi+a)} / prod_j (1 - e^{-l b_j}).

    nden in {1, 2, 3} selects how many denominator factors (b1, b2, b3)
    participate.  Stops at the first term below
    max(abs_tol, rel_tol * partial); returns
    (value, last_term, n_terms, converged).
    """
    cdef double total = 0.0
    cdef double c = phi + a
    cdef double term = 0.0
    cdef double thr
    cdef long l
    for l in range(1, max_terms + 1):
        term = exp(-l * c)
        if nden >= 1:
            term /= -expm1(-l * b1)
        if nden >= 2:
            term /= -expm1(-l * b2)
        if nden >= 3:
            term /= -expm1(-l * b3)
        total += term
        thr = rel_tol * total
        if thr < abs_tol:
            thr = abs_tol
        if term < thr:
            return total, term, l, True
    return total, term, max_terms, False
