"""Pure-Python hot kernels.

Mirrors ``_ckernels.pyx`` function for function.  Polynomials are plain lists of
Python ints (index i holds the coefficient of q^i); outputs are not normalized.
"""

from itertools import product

NAME = "python"


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    nz = [(j, c) for j, c in enumerate(b) if c]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in nz:
            out[i + j] += ai * bj
    return out


def poly_divrem_unit(a, d):
    """Long division by ``d`` whose leading coefficient is +1 or -1."""
    ld = len(d)
    lc = d[-1]
    r = list(a)
    if len(r) < ld:
        return [], r
    quot = [0] * (len(r) - ld + 1)
    nz = [(j, c) for j, c in enumerate(d[:-1]) if c]
    for i in range(len(r) - ld, -1, -1):
        c = r[i + ld - 1] * lc
        if not c:
            continue
        quot[i] = c
        r[i + ld - 1] = 0
        for j, dj in nz:
            r[i + j] -= c * dj
    return quot, r[: ld - 1]


def poly_horner(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_taylor_shift(a, c):
    """Coefficients of p(q + c)."""
    a = list(a)
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += c * a[j + 1]
    return a


def _invertible(rows, m, p):
    # Gaussian elimination mod p with early exit on a zero pivot column.
    work = [list(r) for r in rows]
    for col in range(m):
        piv = -1
        for r in range(col, m):
            if work[r][col]:
                piv = r
                break
        if piv < 0:
            return False
        work[col], work[piv] = work[piv], work[col]
        inv = pow(work[col][col], -1, p)
        prow = work[col]
        for r in range(col + 1, m):
            f = work[r][col]
            if f:
                f = f * inv % p
                row = work[r]
                for k in range(col, m):
                    row[k] = (row[k] - f * prow[k]) % p
    return True


def count_invertible(m, p):
    if m == 0:
        return 1
    vectors = list(product(range(p), repeat=m))
    total = 0
    for rows in product(vectors, repeat=m):
        if _invertible(rows, m, p):
            total += 1
    return total


def count_mateq(A, dim, p):
    """Number of X over F_p with X^T A X = A; ``A`` is row-major and flat."""
    A = [[A[i * dim + j] % p for j in range(dim)] for i in range(dim)]
    total = 0
    for flat in product(range(p), repeat=dim * dim):
        X = [flat[i * dim:(i + 1) * dim] for i in range(dim)]
        AX = [[sum(A[i][k] * X[k][j] for k in range(dim)) % p for j in range(dim)]
              for i in range(dim)]
        ok = True
        for i in range(dim):
            for j in range(dim):
                if sum(X[k][i] * AX[k][j] for k in range(dim)) % p != A[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            total += 1
    return total


def count_rref(n, j, p):
    """Count j x n matrices over F_p in reduced row-echelon form of rank j.

    Rows are enumerated from all p^n vectors; prefixes that can no longer be
    completed to an RREF matrix are pruned.
    """
    if j == 0:
        return 1
    vectors = list(product(range(p), repeat=n))
    leads = []
    for v in vectors:
        lead = next((i for i, c in enumerate(v) if c), -1)
        leads.append(lead)

    def extend(rows, pivots):
        if len(rows) == j:
            return 1
        last = pivots[-1] if pivots else -1
        total = 0
        for v, lead in zip(vectors, leads):
            if lead <= last or v[lead] != 1:
                continue
            if any(v[c] for c in pivots):
                continue
            if any(r[lead] for r in rows):
                continue
            total += extend(rows + [v], pivots + [lead])
        return total

    return extend([], [])


def count_projective(n, p):
    """Points of P^n(F_p): nonzero vectors normalized to first nonzero entry 1."""
    total = 0
    for v in product(range(p), repeat=n + 1):
        for c in v:
            if c:
                if c == 1:
                    total += 1
                break
    return total
