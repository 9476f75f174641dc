"""NumPy fallbacks for the compiled kernels (identical call signatures).

Used when the Cython extension is not built.  The lattice sum keeps the
same n3-innermost accumulation layout; column chunking bounds memory at
a few tens of MB regardless of cutoffs.
"""

import math

import numpy as np

# Target chunk area (elements) for one (n2, n3) slab.
_CHUNK_AREA = 1 << 22


def lattice_octants(eta1, eta2, eta3, z, c1, c2, c3):
    s = [0.0] * 8
    width = max(1, _CHUNK_AREA // (c2 + 1))
    exp2 = np.exp(-eta2 * np.arange(c2 + 1))
    for n1 in range(c1 + 1):
        i1 = 4 if n1 > 0 else 0
        col2 = z * math.exp(-eta1 * n1) * exp2
        for j0 in range(0, c3 + 1, width):
            j1 = min(j0 + width, c3 + 1)
            w = col2[:, None] * np.exp(-eta3 * np.arange(j0, j1))[None, :]
            occ = w / (1.0 - w)
            if j0 == 0:
                s[i1 + 0] += float(occ[0, 0])
                s[i1 + 1] += float(occ[0, 1:].sum())
                s[i1 + 2] += float(occ[1:, 0].sum())
                s[i1 + 3] += float(occ[1:, 1:].sum())
            else:
                s[i1 + 1] += float(occ[0, :].sum())
                s[i1 + 3] += float(occ[1:, :].sum())
    return s


def bose_series(phi, a, b1, b2, b3, nden, rel_tol, abs_tol, max_terms, _block=4096):
    bs = (b1, b2, b3)[:nden]
    c = phi + a
    total = 0.0
    start = 1
    term = 0.0
    while start <= max_terms:
        stop = min(start + _block, max_terms + 1)
        l = np.arange(start, stop, dtype=np.float64)
        terms = np.exp(-l * c)
        for b in bs:
            terms /= -np.expm1(-l * b)
        partial = total + np.cumsum(terms)
        below = terms < np.maximum(abs_tol, rel_tol * partial)
        hits = np.nonzero(below)[0]
        if hits.size:
            i = int(hits[0])
            return float(partial[i]), float(terms[i]), start + i, True
        total = float(partial[-1])
        term = float(terms[-1])
        start = stop
    return total, term, max_terms, False
