"""The four determinant formulae for the TSPP generating function.

Each ``matrix_*`` builder returns a list of rows of ``LaurentPoly`` whose
determinant is ``A_{n+1,k}(x1..xN; r, u, v, w)``.  The builders follow the
binomial convention ``C(a, b) = 0`` unless ``0 <= b <= a``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb
from typing import List, Optional

from .partitions import NegativeLeg
from .ring import ONE, ZERO, LaurentPoly, matmul, poly_det
from .schur import complete_h, elementary_e, hook_schur

Matrix = List[List[LaurentPoly]]

R = LaurentPoly.var("r")
V = LaurentPoly.var("v")


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _ru(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, r=1, u=e)


def _v(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, v=e)


def _w_over_u(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, u=-e, w=e)


def _hook(arm: int, leg: int, N: int) -> LaurentPoly:
    if leg < 0 or arm < 0:
        raise NegativeLeg(f"hook ({arm}|{leg}) is undefined")
    return hook_schur(arm, leg, N)


class DetRoute(enum.Enum):
    G1 = "G1"
    DJT = "DJT"
    JT = "JT"
    G2 = "G2"


def _check_size(n: int, k: int, route: DetRoute):
    if n < 1:
        raise ValueError("matrix size n must be at least 1")
    lowest = -1 if route is DetRoute.DJT else 0
    if k < lowest:
        if route in (DetRoute.G1, DetRoute.G2):
            raise NegativeLeg(f"route {route.value} needs a hook with negative leg at k={k}")
        raise ValueError(f"route {route.value} is defined for k >= {lowest}")


def matrix_g1(n: int, k: int, N: int) -> Matrix:
    _check_size(n, k, DetRoute.G1)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            entry = LaurentPoly.monomial((-1) ** (j - i) * binom(i - 1, j - 1), v=j)
            entry = entry + LaurentPoly.monomial(1, r=1, u=i, w=j - i) * _hook(i - 1, j + k - 1, N)
            row.append(entry)
        rows.append(row)
    return rows


def matrix_djt(n: int, k: int, N: int, m_range: Optional[range] = None) -> Matrix:
    """Dual Jacobi-Trudi matrix; ``m_range`` overrides the inner summation range."""
    _check_size(n, k, DetRoute.DJT)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            entry = _ru(i) * elementary_e(n + k + i - j, N)
            ms = m_range if m_range is not None else range(max(i, 1), n + 2 - j)
            inner = ZERO
            for m in ms:
                c = binom(m - 1, m - i)
                if c:
                    inner = inner + elementary_e(n + 1 - j - m, N) * _w_over_u(m - i) * c
            row.append(entry + inner * _v(i) * (-1) ** (i - 1))
        rows.append(row)
    return rows


def matrix_jt(n: int, k: int, N: int, m_range: Optional[range] = None) -> Matrix:
    """Jacobi-Trudi matrix of order ``n + k``."""
    _check_size(n, k, DetRoute.JT)
    size = n + k
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            if i > n:
                row.append(complete_h(i - j, N))
                continue
            inner = ZERO
            ms = m_range if m_range is not None else range(i, n + 1)
            for m in ms:
                c = binom(n - i, m - i)
                if c:
                    inner = inner + complete_h(k + 1 + 2 * n - m - j, N) * _w_over_u(m - i) * c
            entry = _v(n - i + 1) * complete_h(i - j, N) + _ru(n - i + 1) * inner * (-1) ** (k + n - i)
            row.append(entry)
        rows.append(row)
    return rows


def matrix_g2(n: int, k: int, N: int) -> Matrix:
    _check_size(n, k, DetRoute.G2)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            inner = ZERO
            for m in range(1, i + 1):
                inner = inner + _w_over_u(i - m) * _hook(m - 1, j + k - 1, N) * binom(i - 1, i - m)
            entry = _ru(j) * inner
            if i == j:
                entry = entry + _v(i)
            row.append(entry)
        rows.append(row)
    return rows


_BUILDERS = {
    DetRoute.G1: matrix_g1,
    DetRoute.DJT: matrix_djt,
    DetRoute.JT: matrix_jt,
    DetRoute.G2: matrix_g2,
}


def route_matrix(route: DetRoute, n: int, k: int, N: int) -> Matrix:
    return _BUILDERS[DetRoute(route)](n, k, N)


def a_nk_via_det(route: DetRoute, n: int, k: int, N: int) -> LaurentPoly:
    """``A_{n+1,k}`` as the determinant of the chosen matrix; ``n = 0`` gives 1."""
    route = DetRoute(route)
    if n == 0:
        _check_size(1, k, route)
        return ONE
    return poly_det(route_matrix(route, n, k, N))


# factorisation between the two Giambelli forms ------------------------------


@dataclass
class FactorizationReport:
    ok: bool
    mismatches: List[tuple] = field(default_factory=list)
    det_c1: LaurentPoly = ONE
    det_c2_c3: LaurentPoly = ONE


def factorization_matrices(n: int, k: int, N: int):
    """The matrices ``A, B, C1, C2, C3`` (0-based indices)."""
    if k < 0:
        raise ValueError("factorisation check needs k >= 0")
    idx = range(n)
    A = [
        [
            LaurentPoly.monomial((-1) ** (j - i) * binom(i, j), v=j + 1)
            + LaurentPoly.monomial(1, r=1, u=i + 1, w=j - i) * hook_schur(i, j + k, N)
            for j in idx
        ]
        for i in idx
    ]
    B = []
    for i in idx:
        row = []
        for j in idx:
            inner = ZERO
            for l in range(i + 1):
                inner = inner + hook_schur(l, j + k, N) * _w_over_u(i - l) * binom(i, i - l)
            entry = _ru(j + 1) * inner
            if i == j:
                entry = entry + _v(i + 1)
            row.append(entry)
        B.append(row)
    C1 = [[LaurentPoly.const((-1) ** (i + j) * binom(i, j)) for j in idx] for i in idx]
    C2 = [[_w_over_u(-i) if i == j else ZERO for j in idx] for i in idx]
    C3 = [[_w_over_u(i) if i == j else ZERO for j in idx] for i in idx]
    return A, B, C1, C2, C3


def verify_giambelli_factorization(n: int, k: int, N: int) -> FactorizationReport:
    A, B, C1, C2, C3 = factorization_matrices(n, k, N)
    prod = matmul(matmul(matmul(C1, C2), B), C3)
    mismatches = [(i, j) for i in range(n) for j in range(n) if A[i][j] != prod[i][j]]
    det_c1 = poly_det(C1)
    det_c2_c3 = poly_det(C2) * poly_det(C3)
    ok = not mismatches and det_c1 == 1 and det_c2_c3 == 1
    return FactorizationReport(ok, mismatches, det_c1, det_c2_c3)


def alternating_binomial_sum(i: int, l: int) -> int:
    """``sum_{m=l}^{i} (-1)^m C(i, m) C(m, l)``."""
    if not 0 <= l <= i:
        raise ValueError("need 0 <= l <= i")
    return sum((-1) ** m * comb(i, m) * comb(m, l) for m in range(l, i + 1))
