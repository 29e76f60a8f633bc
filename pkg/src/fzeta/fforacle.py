"""Brute-force point counts over small prime fields.

Each counter enumerates every candidate exhaustively, so results are ground
truth for the closed-form counting polynomials.  The heavy loops live in the
selected kernel backend.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels

ENUMERATION_BUDGET = 10 ** 8
MAX_PRIME = 13


class BudgetExceeded(ValueError):
    pass


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p > MAX_PRIME:
            raise ValueError(f"prime fields are supported up to {MAX_PRIME}")

    def reduce(self, a):
        return a % self.p

    def inverse(self, a):
        a %= self.p
        if not a:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)


def _budget(candidates, what):
    if candidates > ENUMERATION_BUDGET:
        raise BudgetExceeded(f"{what}: {candidates} candidates exceeds the budget of "
                             f"{ENUMERATION_BUDGET}")


def _field(p):
    return p if isinstance(p, PrimeField) else PrimeField(p)


def count_gl(m, p):
    F = _field(p)
    if m < 0:
        raise ValueError("m must be >= 0")
    _budget(F.p ** (m * m), f"GL_{m}(F_{F.p})")
    return kernels.count_invertible(m, F.p)


def _rank_mod_p(rows, p):
    rows = [[x % p for x in r] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] * inv % p
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def parse_matrix(text):
    """'a,b;c,d' -> [[a, b], [c, d]]."""
    try:
        rows = [[int(x) for x in row.split(",")] for row in text.strip().split(";")]
    except ValueError as exc:
        raise ValueError(f"bad matrix {text!r}: {exc}") from None
    if any(len(r) != len(rows) for r in rows):
        raise ValueError(f"matrix {text!r} is not square")
    return rows


def count_matrix_equation(A, p):
    """Number of X with X^T A X = A over F_p; A must be nonsingular."""
    F = _field(p)
    dim = len(A)
    if any(len(r) != dim for r in A):
        raise ValueError("A must be square")
    if _rank_mod_p(A, F.p) < dim:
        raise ValueError("A is singular mod p")
    _budget(F.p ** (dim * dim), f"X^T A X = A over F_{F.p}")
    return kernels.count_mateq([x for r in A for x in r], dim, F.p)


def count_projective(n, p):
    """Points of P^n(F_p): nonzero vectors in F_p^(n+1) up to scalars."""
    F = _field(p)
    if n < 0:
        raise ValueError("n must be >= 0")
    _budget(F.p ** (n + 1), f"P^{n}(F_{F.p})")
    return kernels.count_projective(n, F.p)


def count_grassmannian(n, j, p):
    """j-dimensional subspaces of F_p^n, one per reduced row-echelon form."""
    F = _field(p)
    if not 0 <= j <= n:
        raise ValueError("need 0 <= j <= n")
    _budget(F.p ** n * max(j, 1), f"Gr({n},{j})(F_{F.p})")
    return kernels.count_rref(n, j, F.p)


def symplectic_form(m):
    """Standard alternating form of order 2m: [[0, I], [-I, 0]]."""
    size = 2 * m
    A = [[0] * size for _ in range(size)]
    for i in range(m):
        A[i][m + i] = 1
        A[m + i][i] = -1
    return A


def identity_form(size):
    return [[int(i == j) for j in range(size)] for i in range(size)]
