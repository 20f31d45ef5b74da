"""TSPP tableaux: barred semistandard fillings of k-asymmetric shapes.

The alphabet is ``1 < ... < n+k < 1̄ < ... < (n-1)̄``.  Internally an
unbarred ``i`` is stored as ``i`` and a barred ``ī`` as ``n + k + i``, so
the integer order is the alphabet order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .partitions import Partition, conjugate, k_asymmetric_in_box
from .paths import WU, LatticePath, Model, PathFamily, e_end, e_start, e_start_primed
from .ring import ONE, LaurentPoly

Cell = Tuple[int, int]


@dataclass(frozen=True)
class BarredEntry:
    value: int
    barred: bool = False

    def __str__(self):
        return f"{self.value}̄" if self.barred else str(self.value)


@dataclass(frozen=True)
class BarredTableau:
    n: int
    k: int
    shape: Partition
    cells: Tuple[Tuple[Cell, int], ...]

    @property
    def filling(self) -> Dict[Cell, int]:
        return dict(self.cells)

    def entry(self, i: int, j: int) -> BarredEntry:
        v = self.filling[(i, j)]
        top = self.n + self.k
        return BarredEntry(v - top, True) if v > top else BarredEntry(v)

    def column(self, j: int) -> List[BarredEntry]:
        return [self.entry(i, j) for i in range(1, conjugate(self.shape).part(j) + 1)]

    def rows(self) -> List[List[BarredEntry]]:
        return [[self.entry(i, j) for j in range(1, lam + 1)] for i, lam in enumerate(self.shape, start=1)]

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in row) for row in self.rows()) or "(empty)"


def encode(entry: BarredEntry, n: int, k: int) -> int:
    return entry.value + (n + k if entry.barred else 0)


def from_rows(n: int, k: int, rows) -> BarredTableau:
    """Build a tableau from rows of ints and ``("bar", i)`` pairs (or BarredEntry)."""
    cells = []
    for i, row in enumerate(rows, start=1):
        for j, e in enumerate(row, start=1):
            if isinstance(e, BarredEntry):
                v = encode(e, n, k)
            elif isinstance(e, tuple):
                v = n + k + e[1]
            else:
                v = e
            cells.append(((i, j), v))
    shape = Partition(len(row) for row in rows)
    return BarredTableau(n, k, shape, tuple(sorted(cells)))


def violations(T: BarredTableau) -> List[str]:
    """Reasons ``T`` is not a TSPP tableau (empty if it is one)."""
    from .partitions import is_k_asymmetric

    n, k, top = T.n, T.k, T.n + T.k
    out = []
    if not is_k_asymmetric(T.shape, k):
        out.append("shape is not k-asymmetric")
    if T.shape.length > n + k or (T.shape and T.shape[0] > n):
        out.append("shape exceeds the box")
    fill = T.filling
    for (i, j), v in fill.items():
        if not 1 <= v <= top + n - 1:
            out.append(f"entry at {(i, j)} outside the alphabet")
            continue
        left, up = fill.get((i, j - 1)), fill.get((i - 1, j))
        if left is not None and left > v:
            out.append(f"row not weak at {(i, j)}")
        if up is not None and up >= v:
            out.append(f"column not strict at {(i, j)}")
        if v > top:
            b = v - top
            if b > j - 1:
                out.append(f"(C1) fails at {(i, j)}")
            if i > b:
                out.append(f"(C2) fails at {(i, j)}")
            if left is not None and left == v:
                out.append(f"(C3) fails at {(i, j)}")
    return out


def _fillings(shape: Partition, n: int, k: int):
    top = n + k
    cells = list(shape.cells())
    fill: Dict[Cell, int] = {}

    def rec(t: int):
        if t == len(cells):
            yield tuple(sorted(fill.items()))
            return
        i, j = cells[t]
        lo = 1
        left = fill.get((i, j - 1))
        if left is not None:
            lo = left + 1 if left > top else left
        up = fill.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1)
        # barred ī needs i >= row (C2) and i <= j - 1 (C1)
        hi_bar = min(n - 1, j - 1)
        for v in range(lo, top + hi_bar + 1):
            if v > top and v - top < i:
                continue
            fill[(i, j)] = v
            yield from rec(t + 1)
        fill.pop((i, j), None)

    yield from rec(0)


def enumerate_tspp_tableaux(n: int, k: int) -> List[BarredTableau]:
    """All TSPP tableaux of size ``(n, k)``, by shape then row-major filling."""
    if k < -1 or n < 0 or n + k < 0:
        raise ValueError("need k >= -1, n >= 0 and n + k >= 0")
    out = []
    for shape in k_asymmetric_in_box(n, k):
        for cells in _fillings(shape, n, k):
            out.append(BarredTableau(n, k, shape, cells))
    return out


def column_weight(shape: Partition, n: int, k: int, j: int) -> LaurentPoly:
    conj = conjugate(shape)
    d = shape.durfee
    if j <= d:
        return LaurentPoly.monomial(1, r=1, u=1 + max(0, conj.part(j) - (j + k)))
    if k == -1 and j == d + 1:
        return LaurentPoly.monomial(1, r=1, u=1) + LaurentPoly.monomial(1, v=1)
    missing = (j - 1) - min(conj.part(j), j - 1)
    return LaurentPoly.monomial(1, v=1 + missing)


def tableau_weight(T: BarredTableau) -> LaurentPoly:
    top = T.n + T.k
    xs: Counter = Counter()
    bars = 0
    for _, v in T.cells:
        if v > top:
            bars += 1
        else:
            xs[v] += 1
    exps = [0, -bars, 0, bars] + [xs[i] for i in range(1, top + 1)]
    out = LaurentPoly.from_exponents(exps)
    for j in range(1, T.n + 1):
        out = out * column_weight(T.shape, T.n, T.k, j)
    return out


def gf_tableaux(n: int, k: int) -> LaurentPoly:
    """Sum of tableau weights, a polynomial in ``x1..x_{n+k}``."""
    acc = Counter()
    weights: Dict[Tuple[Partition, int], LaurentPoly] = {}
    total = LaurentPoly()
    for T in enumerate_tspp_tableaux(n, k):
        top = n + k
        bars = sum(1 for _, v in T.cells if v > top)
        key = (T.shape, bars)
        xs = Counter(v for _, v in T.cells if v <= top)
        acc[key, tuple(xs[i] for i in range(1, top + 1))] += 1
    for (shape, bars), xs in sorted(acc):
        c = acc[(shape, bars), xs]
        if (shape, bars) not in weights:
            col = ONE
            for j in range(1, n + 1):
                col = col * column_weight(shape, n, k, j)
            weights[(shape, bars)] = col * LaurentPoly.monomial(1, u=-bars, w=bars)
        total = total + weights[(shape, bars)] * LaurentPoly.from_exponents((0, 0, 0, 0) + xs, c)
    return total


# column reading ---------------------------------------------------------------


def tableau_to_e_family(T: BarredTableau) -> PathFamily:
    """The e-family read off column by column, top path first.

    Column ``c`` gives the path ending at ``E_{n+1-c}``.  Walking that path
    backwards, an unbarred label ``p`` marks a horizontal step at position
    ``p``; a barred label ``b̄`` marks a ``(1,-1)`` step at position
    ``n + k + b - h``, with ``h`` the number of unbarred labels.
    """
    n, k = T.n, T.k
    if k < 0:
        raise ValueError("the column reading needs k >= 0")
    N = n + k
    conj = conjugate(T.shape)
    fill = T.filling
    built: Dict[int, Tuple[bool, LatticePath, int]] = {}
    for c in range(1, n + 1):
        labels = [fill[(i, c)] for i in range(1, conj.part(c) + 1)]
        plain = {v for v in labels if v <= N}
        barred = {v - N for v in labels if v > N}
        h = len(plain)
        j = n + 1 - c
        a, b = e_end(j, n, k, N)
        back: List[Tuple[int, int, int]] = []
        for p in range(1, N + 1):
            if p in plain:
                a -= 1
                back.append((1, 0, a + b + 1))
            else:
                b -= 1
                back.append((0, 1, 0))
        if a <= 0:
            if barred:
                raise ValueError(f"column {c} has barred labels but leaves from S")
            i, primed = 1 - a, False
        else:
            region_b = c - h - 1
            if region_b < 0 or any(not 1 <= s - h <= region_b for s in barred):
                raise ValueError(f"column {c} does not describe a path")
            for t in range(1, region_b + 1):
                if t + h in barred:
                    a, b = a - 1, b + 1
                    back.append((1, -1, WU))
                else:
                    a, b = a - 1, b - 1
                    back.append((1, 1, 0))
            i, primed = c - h - len(barred), True
            if (a, b) != e_start_primed(i, k):
                raise ValueError(f"column {c} does not reach a primed start")
        start = (a, b)
        if not primed and start != e_start(i, k):
            raise ValueError(f"column {c} does not reach a start point")
        back.reverse()
        path = LatticePath(start, tuple((dx, dy) for dx, dy, _ in back), tuple(lab for _, _, lab in back))
        if i in built:
            raise ValueError(f"two columns use start index {i}")
        built[i] = (primed, path, j)
    if sorted(built) != list(range(1, n + 1)):
        raise ValueError("columns do not use every start index")
    chosen = frozenset(i for i, (primed, _, _) in built.items() if primed)
    idx = tuple(range(1, n + 1))
    return PathFamily(
        Model.E, n, k, N, chosen, idx, tuple(built[i][1] for i in idx), tuple(built[i][2] for i in idx)
    )
