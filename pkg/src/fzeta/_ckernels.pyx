# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contract as ``_pykernels``."""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, calloc, free

NAME = "cython"


cdef inline int _bitlen_max(list xs):
    cdef int best = 0, b
    for x in xs:
        b = abs(x).bit_length()
        if b > best:
            best = b
    return best


def poly_mul(list a, list b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, n
    cdef int64_t *ca
    cdef int64_t *cb
    cdef int64_t *co
    cdef int64_t ai
    cdef list out
    if la == 0 or lb == 0:
        return []
    n = la + lb - 1
    # int64 fast path when every partial sum provably fits in 63 bits
    if _bitlen_max(a) + _bitlen_max(b) + (<object>min(la, lb)).bit_length() <= 62:
        ca = <int64_t *> malloc(la * sizeof(int64_t))
        cb = <int64_t *> malloc(lb * sizeof(int64_t))
        co = <int64_t *> calloc(n, sizeof(int64_t))
        try:
            for i in range(la):
                ca[i] = a[i]
            for j in range(lb):
                cb[j] = b[j]
            for i in range(la):
                ai = ca[i]
                if ai == 0:
                    continue
                for j in range(lb):
                    co[i + j] += ai * cb[j]
            out = [co[i] for i in range(n)]
        finally:
            free(ca)
            free(cb)
            free(co)
        return out
    out = [0] * n
    cdef list nzj = [j for j in range(lb) if b[j]]
    cdef list nzc = [b[j] for j in nzj]
    cdef Py_ssize_t k, nnz = len(nzj)
    cdef object x
    for i in range(la):
        x = a[i]
        if not x:
            continue
        for k in range(nnz):
            j = nzj[k]
            out[i + j] = out[i + j] + x * nzc[k]
    return out


def poly_divrem_unit(list a, list d):
    cdef Py_ssize_t ld = len(d), la = len(a), i, k, nnz, j
    cdef object lc = d[ld - 1], c
    cdef list r = list(a)
    if la < ld:
        return [], r
    cdef list quot = [0] * (la - ld + 1)
    cdef list nzj = [j for j in range(ld - 1) if d[j]]
    cdef list nzc = [d[j] for j in nzj]
    nnz = len(nzj)
    for i in range(la - ld, -1, -1):
        c = r[i + ld - 1] * lc
        if not c:
            continue
        quot[i] = c
        r[i + ld - 1] = 0
        for k in range(nnz):
            j = nzj[k]
            r[i + j] = r[i + j] - c * nzc[k]
    return quot, r[:ld - 1]


def poly_horner(list a, x):
    cdef object acc = 0
    cdef Py_ssize_t i
    for i in range(len(a) - 1, -1, -1):
        acc = acc * x + a[i]
    return acc


def poly_taylor_shift(list a, c):
    cdef list w = list(a)
    cdef Py_ssize_t n = len(w), i, j
    if c == 1:
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                w[j] = w[j] + w[j + 1]
    elif c == -1:
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                w[j] = w[j] - w[j + 1]
    else:
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                w[j] = w[j] + c * w[j + 1]
    return w


cdef int _invertible(int *mat, int *work, int m, int p, int *inv) nogil:
    cdef int col, r, k, piv, f, tmp
    for k in range(m * m):
        work[k] = mat[k]
    for col in range(m):
        piv = -1
        for r in range(col, m):
            if work[r * m + col] != 0:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != col:
            for k in range(m):
                tmp = work[col * m + k]
                work[col * m + k] = work[piv * m + k]
                work[piv * m + k] = tmp
        for r in range(col + 1, m):
            f = work[r * m + col]
            if f != 0:
                f = (f * inv[work[col * m + col]]) % p
                for k in range(col, m):
                    work[r * m + k] = (work[r * m + k] - f * work[col * m + k]) % p
                    if work[r * m + k] < 0:
                        work[r * m + k] += p
    return 1


cdef void _inverse_table(int p, int *inv):
    cdef int a, b
    inv[0] = 0
    for a in range(1, p):
        for b in range(1, p):
            if (a * b) % p == 1:
                inv[a] = b
                break


cdef inline bint _odometer(int *digits, int n, int p) nogil:
    # advance; returns False after wrapping past the last configuration
    cdef int i = n - 1
    while i >= 0:
        digits[i] += 1
        if digits[i] < p:
            return True
        digits[i] = 0
        i -= 1
    return False


def count_invertible(int m, int p):
    if m == 0:
        return 1
    cdef int nn = m * m
    cdef int *mat = <int *> calloc(nn, sizeof(int))
    cdef int *work = <int *> calloc(nn, sizeof(int))
    cdef int *inv = <int *> calloc(p, sizeof(int))
    cdef long long total = 0
    try:
        _inverse_table(p, inv)
        with nogil:
            while True:
                total += _invertible(mat, work, m, p, inv)
                if not _odometer(mat, nn, p):
                    break
    finally:
        free(mat)
        free(work)
        free(inv)
    return total


def count_mateq(A, int dim, int p):
    cdef int nn = dim * dim
    cdef int *a = <int *> calloc(nn, sizeof(int))
    cdef int *x = <int *> calloc(nn, sizeof(int))
    cdef int *ax = <int *> calloc(nn, sizeof(int))
    cdef long long total = 0
    cdef int i, j, k, s
    cdef bint ok
    try:
        for i in range(nn):
            a[i] = A[i] % p
        with nogil:
            while True:
                for i in range(dim):
                    for j in range(dim):
                        s = 0
                        for k in range(dim):
                            s += a[i * dim + k] * x[k * dim + j]
                        ax[i * dim + j] = s % p
                ok = True
                for i in range(dim):
                    for j in range(dim):
                        s = 0
                        for k in range(dim):
                            s += x[k * dim + i] * ax[k * dim + j]
                        if s % p != a[i * dim + j]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    total += 1
                if not _odometer(x, nn, p):
                    break
    finally:
        free(a)
        free(x)
        free(ax)
    return total


cdef long long _extend_rref(int *vecs, int *leads, int nvec, int n, int j,
                            int depth, int *chosen, int *pivots) nogil:
    cdef long long total = 0
    cdef int v, lead, last, t, ok
    if depth == j:
        return 1
    last = pivots[depth - 1] if depth > 0 else -1
    for v in range(nvec):
        lead = leads[v]
        if lead <= last or vecs[v * n + lead] != 1:
            continue
        ok = 1
        for t in range(depth):
            if vecs[v * n + pivots[t]] != 0 or vecs[chosen[t] * n + lead] != 0:
                ok = 0
                break
        if not ok:
            continue
        chosen[depth] = v
        pivots[depth] = lead
        total += _extend_rref(vecs, leads, nvec, n, j, depth + 1, chosen, pivots)
    return total


def count_rref(int n, int j, int p):
    if j == 0:
        return 1
    cdef int nvec = 1, v, i, lead
    for i in range(n):
        nvec *= p
    cdef int *vecs = <int *> calloc(nvec * n, sizeof(int))
    cdef int *leads = <int *> calloc(nvec, sizeof(int))
    cdef int *digits = <int *> calloc(n, sizeof(int))
    cdef int *chosen = <int *> calloc(j, sizeof(int))
    cdef int *pivots = <int *> calloc(j, sizeof(int))
    cdef long long total
    try:
        for v in range(nvec):
            lead = -1
            for i in range(n):
                vecs[v * n + i] = digits[i]
                if lead < 0 and digits[i] != 0:
                    lead = i
            leads[v] = lead
            _odometer(digits, n, p)
        total = _extend_rref(vecs, leads, nvec, n, j, 0, chosen, pivots)
    finally:
        free(vecs)
        free(leads)
        free(digits)
        free(chosen)
        free(pivots)
    return total


def count_projective(int n, int p):
    cdef int nn = n + 1, i
    cdef int *v = <int *> calloc(nn, sizeof(int))
    cdef long long total = 0
    try:
        with nogil:
            while True:
                for i in range(nn):
                    if v[i] != 0:
                        if v[i] == 1:
                            total += 1
                        break
                if not _odometer(v, nn, p):
                    break
    finally:
        free(v)
    return total
