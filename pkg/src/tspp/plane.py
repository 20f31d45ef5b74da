"""Plane partitions, their symmetry classes, and the TSPP generating function.

The generating function summed over ``TSPP_{n-1}`` weights each TSPP ``T``
by ``r^d u^{Σ(a_i+1)} v^{C(n,2)-Σ(b_i+1)} w^{Σ(b_i-a_i)}`` times the Schur
polynomial of its shifted diagonal, where ``(a|b)`` is the Frobenius notation
of the diagonal partition and ``n`` is the *outer* index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterator, List, Sequence, Tuple

from .partitions import FrobeniusCoords, NegativeLeg, Partition, conjugate, frobenius, from_frobenius
from .ring import LaurentPoly, poly_sum
from .schur import schur_via_ssyt


class NonSquareBox(ValueError):
    pass


class NonCubicBox(ValueError):
    pass


class NegativeExponent(ValueError):
    pass


@dataclass(frozen=True)
class PlanePartition:
    box: Tuple[int, int, int]
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        a, b, c = self.box
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if len(rows) != a or any(len(row) != b for row in rows):
            raise ValueError(f"entries must form an {a}x{b} array")
        for i in range(a):
            for j in range(b):
                x = rows[i][j]
                if not 0 <= x <= c:
                    raise ValueError(f"entry {x} outside [0, {c}]")
                if i + 1 < a and rows[i + 1][j] > x or j + 1 < b and rows[i][j + 1] > x:
                    raise ValueError("rows and columns must weakly decrease")

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], c: int | None = None) -> "PlanePartition":
        rows = tuple(tuple(r) for r in rows)
        a = len(rows)
        b = len(rows[0]) if a else 0
        if c is None:
            c = max((max(r) for r in rows if r), default=0)
        return cls((a, b, c), rows)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def cubes(self) -> frozenset:
        return frozenset(
            (i, j, h)
            for i, row in enumerate(self.entries, start=1)
            for j, x in enumerate(row, start=1)
            for h in range(1, x + 1)
        )

    def __str__(self):
        return "\n".join(" ".join(map(str, row)) for row in self.entries)


def enumerate_plane_partitions(a: int, b: int, c: int) -> List[PlanePartition]:
    """Every plane partition in the (a, b, c)-box, row by row in lex order."""

    def rows_under(bound: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        def rec(prefix, j):
            if j == b:
                yield tuple(prefix)
                return
            top = bound[j] if j == 0 else min(bound[j], prefix[-1])
            for x in range(top + 1):
                prefix.append(x)
                yield from rec(prefix, j + 1)
                prefix.pop()

        yield from rec([], 0)

    out: List[Tuple[Tuple[int, ...], ...]] = []

    def fill(rows, bound):
        if len(rows) == a:
            out.append(tuple(rows))
            return
        for row in rows_under(bound):
            rows.append(row)
            fill(rows, row)
            rows.pop()

    fill([], (c,) * b)
    return [PlanePartition((a, b, c), rows) for rows in out]


def is_symmetric(T: PlanePartition) -> bool:
    a, b, _ = T.box
    if a != b:
        raise NonSquareBox(f"box {T.box} is not square")
    return all(T.entries[i][j] == T.entries[j][i] for i in range(a) for j in range(i))


def is_cyclically_symmetric(T: PlanePartition) -> bool:
    a, b, c = T.box
    if not a == b == c:
        raise NonCubicBox(f"box {T.box} is not a cube")
    cubes = T.cubes()
    return all((j, k, i) in cubes for (i, j, k) in cubes)


def enumerate_tspp(n: int) -> List[PlanePartition]:
    """Totally symmetric plane partitions in the n-cube.

    A TSPP is an S3-invariant order ideal of ``[n]^3``, determined by its
    sorted triples ``i <= j <= k``; those are enumerated as order ideals of
    the induced poset and expanded back to arrays.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    triples = [(i, j, k) for i in range(1, n + 1) for j in range(i, n + 1) for k in range(j, n + 1)]
    # linear extension: by coordinate sum, so predecessors come first
    triples.sort(key=lambda t: (sum(t), t))
    index = {t: idx for idx, t in enumerate(triples)}
    preds = []
    for i, j, k in triples:
        below = []
        for cand in ((i - 1, j, k), (i, j - 1, k), (i, j, k - 1)):
            s = tuple(sorted(cand))
            if s[0] >= 1 and s in index:
                below.append(index[s])
        preds.append(below)

    ideals: List[frozenset] = []
    chosen = [False] * len(triples)

    def rec(pos: int):
        if pos == len(triples):
            ideals.append(frozenset(t for t, c in zip(triples, chosen) if c))
            return
        chosen[pos] = False
        rec(pos + 1)
        if all(chosen[p] for p in preds[pos]):
            chosen[pos] = True
            rec(pos + 1)
            chosen[pos] = False

    rec(0)

    out = []
    for ideal in ideals:
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                rows[i - 1][j - 1] = sum(1 for k in range(1, n + 1) if tuple(sorted((i, j, k))) in ideal)
        out.append(PlanePartition((n, n, n), tuple(tuple(r) for r in rows)))
    out.sort(key=lambda T: T.entries)
    return out


def diag_partition(T: PlanePartition) -> Partition:
    a, b, _ = T.box
    if a != b:
        raise NonSquareBox(f"box {T.box} is not square")
    return conjugate(Partition(T.entries[i][i] for i in range(a)))


def diag_frobenius(T: PlanePartition) -> FrobeniusCoords:
    return frobenius(diag_partition(T))


def pi_k(T: PlanePartition, k: int) -> Partition:
    arms, legs = diag_frobenius(T)
    shifted = tuple(b + k for b in legs)
    if any(b < 0 for b in shifted):
        raise NegativeLeg(f"leg shift by {k} leaves a negative leg in ({arms}|{shifted})")
    return from_frobenius(arms, shifted)


def omega_weight(T: PlanePartition, outer_n: int) -> LaurentPoly:
    arms, legs = diag_frobenius(T)
    d = len(arms)
    u_exp = sum(a + 1 for a in arms)
    v_exp = comb(outer_n, 2) - sum(b + 1 for b in legs)
    w_exp = sum(b - a for a, b in zip(arms, legs))
    if v_exp < 0 or w_exp < 0:
        raise NegativeExponent(f"weight exponent negative for outer index {outer_n}")
    return LaurentPoly.monomial(1, r=d, u=u_exp, v=v_exp, w=w_exp)


def a_nk_via_definition(n: int, k: int, N: int) -> LaurentPoly:
    """The TSPP generating function with outer index ``n``, summed over TSPP_{n-1}."""
    if n < 1:
        raise ValueError("outer index n must be at least 1")
    if k < 0:
        raise ValueError("the definition route needs k >= 0")
    return poly_sum(omega_weight(T, n) * schur_via_ssyt(pi_k(T, k), N) for T in enumerate_tspp(n - 1))


def macmahon_box_count(a: int, b: int, c: int) -> int:
    """Number of plane partitions in an (a, b, c)-box."""
    from fractions import Fraction

    total = Fraction(1)
    for i, j, k in product(range(1, a + 1), range(1, b + 1), range(1, c + 1)):
        total *= Fraction(i + j + k - 1, i + j + k - 2)
    return int(total)
