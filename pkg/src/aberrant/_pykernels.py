"""Pure-Python fallback for the hot rank-scan kernel.

Same contract as the compiled extension in ``_speedups.pyx``: scan candidate
exponent columns in a fixed order and accept each one that is linearly
independent of the columns accepted before it, over the rationals.

Independence is decided by Gaussian elimination modulo several 30-bit primes.
A candidate is accepted as soon as one prime whose basis has full rank shows a
nonzero residual (a nonzero minor mod p is nonzero over Q).  A candidate is
rejected when every full-rank prime reduces it to zero: the caller sizes the
prime set so the product of all primes exceeds the Hadamard bound on any
minor, which forces every minor to be exactly zero.  If no prime retains full
rank the scan aborts (``ok=False``) and the caller retries with fresh primes.
"""

from __future__ import annotations

import numpy as np

IMPL = "pure"


def scan_columns(pows, primes, cands, target):
    """Greedy independent-column scan.

    pows: int64 array [q, d, K, n]; pows[p, i, k, r] = (level of point r in
          coordinate i) ** k mod primes[p].
    primes: int64 array [q].
    cands: int64 array [m, d] of exponents, in scan order.
    target: stop after this many accepted columns.

    Returns (accepted_indices, ok).
    """
    pows = np.asarray(pows, dtype=np.int64)
    primes = [int(p) for p in primes]
    cands = np.asarray(cands, dtype=np.int64)
    q, d, _K, n = pows.shape
    m = cands.shape[0]

    bases = [np.empty((0, n), dtype=np.int64) for _ in range(q)]
    pivots = [[] for _ in range(q)]
    full = [True] * q
    accepted: list[int] = []

    for idx in range(m):
        alpha = cands[idx]
        cols = []
        for pi in range(q):
            p = primes[pi]
            col = pows[pi, 0, alpha[0], :].copy()
            for i in range(1, d):
                col = (col * pows[pi, i, alpha[i], :]) % p
            cols.append(col)

        residuals = []
        accept = False
        for pi in range(q):
            p = primes[pi]
            r = cols[pi]
            for row, piv in zip(bases[pi], pivots[pi]):
                f = r[piv]
                if f:
                    r = (r - f * row) % p
            residuals.append(r)
            if full[pi] and r.any():
                accept = True
        if not any(full):
            return accepted, False
        if not accept:
            continue

        accepted.append(idx)
        for pi in range(q):
            p = primes[pi]
            r = residuals[pi]
            nz = np.flatnonzero(r)
            if nz.size == 0:
                full[pi] = False
                continue
            piv = int(nz[0])
            inv = pow(int(r[piv]), p - 2, p)
            row = (r * inv) % p
            bases[pi] = np.vstack([bases[pi], row[np.newaxis, :]])
            pivots[pi].append(piv)
        if len(accepted) == target:
            break

    return accepted, True
