# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernel: certified multi-modular independent-column scan.

Mirrors ``_pykernels.scan_columns``; see that module for the contract and
the correctness argument.
"""

import numpy as np

cimport numpy as cnp

IMPL = "compiled"


cdef inline cnp.int64_t _modpow(cnp.int64_t base, cnp.int64_t exp, cnp.int64_t p) nogil:
    cdef cnp.int64_t result = 1
    cdef cnp.int64_t b = base % p
    while exp > 0:
        if exp & 1:
            result = (result * b) % p
        b = (b * b) % p
        exp >>= 1
    return result


def scan_columns(pows, primes, cands, target):
    cdef cnp.int64_t[:, :, :, ::1] P = np.ascontiguousarray(pows, dtype=np.int64)
    cdef cnp.int64_t[::1] pr = np.ascontiguousarray(primes, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] C = np.ascontiguousarray(cands, dtype=np.int64)
    cdef Py_ssize_t q = P.shape[0]
    cdef Py_ssize_t d = P.shape[1]
    cdef Py_ssize_t n = P.shape[3]
    cdef Py_ssize_t m = C.shape[0]
    cdef Py_ssize_t cap = n if target > n else target

    basis_arr = np.zeros((q, cap, n), dtype=np.int64)
    piv_arr = np.zeros((q, cap), dtype=np.int64)
    rank_arr = np.zeros(q, dtype=np.int64)
    res_arr = np.zeros((q, n), dtype=np.int64)
    nz_arr = np.zeros(q, dtype=np.int64)
    cdef cnp.int64_t[:, :, ::1] basis = basis_arr
    cdef cnp.int64_t[:, ::1] pivs = piv_arr
    cdef cnp.int64_t[::1] ranks = rank_arr
    cdef cnp.int64_t[:, ::1] res = res_arr
    cdef cnp.int64_t[::1] nz = nz_arr

    accepted = []
    cdef Py_ssize_t naccepted = 0
    cdef Py_ssize_t idx, pi, i, j, k, piv
    cdef cnp.int64_t p, f, inv, v
    cdef bint any_full, accept

    for idx in range(m):
        any_full = False
        accept = False
        for pi in range(q):
            p = pr[pi]
            for j in range(n):
                v = P[pi, 0, C[idx, 0], j]
                for i in range(1, d):
                    v = (v * P[pi, i, C[idx, i], j]) % p
                res[pi, j] = v
            for k in range(ranks[pi]):
                piv = pivs[pi, k]
                f = res[pi, piv]
                if f != 0:
                    for j in range(n):
                        v = (res[pi, j] - f * basis[pi, k, j]) % p
                        if v < 0:
                            v += p
                        res[pi, j] = v
            nz[pi] = -1
            for j in range(n):
                if res[pi, j] != 0:
                    nz[pi] = j
                    break
            if ranks[pi] == naccepted:
                any_full = True
                if nz[pi] >= 0:
                    accept = True
        if not any_full:
            return accepted, False
        if not accept:
            continue

        accepted.append(idx)
        naccepted += 1
        for pi in range(q):
            if nz[pi] < 0:
                continue
            p = pr[pi]
            piv = nz[pi]
            inv = _modpow(res[pi, piv], p - 2, p)
            k = ranks[pi]
            for j in range(n):
                basis[pi, k, j] = (res[pi, j] * inv) % p
            pivs[pi, k] = piv
            ranks[pi] += 1
        if naccepted == target:
            break

    return accepted, True
