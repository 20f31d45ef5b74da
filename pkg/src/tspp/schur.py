"""Schur, complete homogeneous and elementary polynomials in ``x1..xN``.

Every Schur polynomial has several independent routes: tableau enumeration,
Jacobi-Trudi (h determinant), Nägelsbach-Kostka (e determinant) and
Giambelli (determinant of hooks).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterator, List, Sequence, Tuple

from .partitions import Partition, conjugate, frobenius, hook
from .ring import ONE, ZERO, LaurentPoly, poly_det


class ShapeNotContained(ValueError):
    """Skew shape λ/μ requested with μ not inside λ."""


def _x_monomial(counts: Sequence[int]) -> Tuple[int, ...]:
    mono = (0, 0, 0, 0) + tuple(counts)
    n = len(mono)
    while n and mono[n - 1] == 0:
        n -= 1
    return mono[:n]


def _from_counter(counter: Counter) -> LaurentPoly:
    return LaurentPoly({m: c for m, c in counter.items()})


@lru_cache(maxsize=None)
def complete_h(m: int, N: int) -> LaurentPoly:
    """h_m(x1..xN); h_0 = 1 and h_m = 0 for m < 0."""
    if m < 0:
        return ZERO
    if m == 0:
        return ONE
    acc: Counter = Counter()
    for word in combinations_with_replacement(range(N), m):
        counts = [0] * N
        for letter in word:
            counts[letter] += 1
        acc[_x_monomial(counts)] += 1
    return _from_counter(acc)


@lru_cache(maxsize=None)
def elementary_e(m: int, N: int) -> LaurentPoly:
    """e_m(x1..xN); e_0 = 1 and e_m = 0 unless 0 <= m <= N."""
    if m < 0 or m > N:
        return ZERO
    if m == 0:
        return ONE
    acc: Counter = Counter()
    for subset in combinations(range(N), m):
        counts = [0] * N
        for letter in subset:
            counts[letter] = 1
        acc[_x_monomial(counts)] += 1
    return _from_counter(acc)


def skew_cells(lam: Sequence[int], mu: Sequence[int] = ()) -> List[Tuple[int, int]]:
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        raise ShapeNotContained(f"{tuple(mu)} is not contained in {tuple(lam)}")
    return [(i, j) for i, j in lam.cells() if j > mu.part(i)]


def iter_ssyt(lam: Sequence[int], N: int, mu: Sequence[int] = ()) -> Iterator[Dict[Tuple[int, int], int]]:
    """Semistandard fillings of λ/μ with entries in 1..N.

    Cells are filled column by column, top to bottom; a cell's value is
    bounded below by its left and upper neighbours and above by the number of
    skew cells still to come beneath it in the same column.
    """
    cells = sorted(skew_cells(lam, mu), key=lambda c: (c[1], c[0]))
    cellset = set(cells)
    below = {}
    for i, j in cells:
        t = 0
        while (i + t + 1, j) in cellset:
            t += 1
        below[(i, j)] = t
    filling: Dict[Tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield dict(filling)
            return
        i, j = cells[idx]
        lo = 1
        if (i, j - 1) in filling:
            lo = filling[(i, j - 1)]
        if (i - 1, j) in filling:
            lo = max(lo, filling[(i - 1, j)] + 1)
        hi = N - below[(i, j)]
        for val in range(lo, hi + 1):
            filling[(i, j)] = val
            yield from rec(idx + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def _ssyt_polynomial(lam, N, mu=()) -> LaurentPoly:
    acc: Counter = Counter()
    for filling in iter_ssyt(lam, N, mu):
        counts = [0] * N
        for val in filling.values():
            counts[val - 1] += 1
        acc[_x_monomial(counts)] += 1
    return _from_counter(acc)


@lru_cache(maxsize=None)
def _schur_ssyt_cached(lam: Tuple[int, ...], N: int) -> LaurentPoly:
    if len(lam) > N:
        return ZERO
    return _ssyt_polynomial(lam, N)


def schur_via_ssyt(lam: Sequence[int], N: int) -> LaurentPoly:
    return _schur_ssyt_cached(tuple(Partition(lam)), N)


def skew_schur_via_ssyt(lam: Sequence[int], mu: Sequence[int], N: int) -> LaurentPoly:
    return _ssyt_polynomial(lam, N, mu)


@lru_cache(maxsize=None)
def _jt_cached(lam: Tuple[int, ...], N: int) -> LaurentPoly:
    ell = len(lam)
    return poly_det([[complete_h(lam[i] - i + j, N) for j in range(ell)] for i in range(ell)])


def schur_via_jacobi_trudi(lam: Sequence[int], N: int) -> LaurentPoly:
    return _jt_cached(tuple(Partition(lam)), N)


def schur_via_nk(lam: Sequence[int], N: int) -> LaurentPoly:
    conj = conjugate(lam)
    ell = len(conj)
    return poly_det([[elementary_e(conj[i] - i + j, N) for j in range(ell)] for i in range(ell)])


def hook_schur(arm: int, leg: int, N: int) -> LaurentPoly:
    """s_(arm|leg)(x1..xN), evaluated by Jacobi-Trudi."""
    return schur_via_jacobi_trudi(hook(arm, leg), N)


def schur_via_giambelli(lam: Sequence[int], N: int) -> LaurentPoly:
    arms, legs = frobenius(lam)
    d = len(arms)
    return poly_det([[hook_schur(arms[i], legs[j], N) for j in range(d)] for i in range(d)])


schur = schur_via_ssyt
