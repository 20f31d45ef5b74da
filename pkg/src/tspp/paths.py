"""Non-intersecting lattice path models for the TSPP generating function.

Three models share one engine:

* ``E``: e-paths from ``S_i`` or ``S'_i`` up to the top boundary;
* ``H``: h-paths, the dual picture, with ``n + k`` paths;
* ``MIXED``: paths from ``S_i`` that turn round and come down to ``Ê_i``.

Points are integer pairs ``(a, b)``; the diagonal of a point is ``a + b``.
With ``N`` variables no x-weighted step may leave diagonal ``N``, so the
infinitely high end points are cut off at the first point of diagonal ``N``
(every omitted step is a forced vertical step of weight 1).

A step label is ``m >= 1`` for weight ``x_m``, ``0`` for weight 1 and
``WU`` for weight ``w/u``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .ring import ONE, ZERO, LaurentPoly, poly_det

Point = Tuple[int, int]
Step = Tuple[int, int]
WU = -1


class Model(str, enum.Enum):
    E = "E"
    H = "H"
    MIXED = "MIXED"


class SignRule(str, enum.Enum):
    FIRST = "FIRST"
    SECOND = "SECOND"


def label_weight(label: int) -> LaurentPoly:
    if label == WU:
        return LaurentPoly.monomial(1, u=-1, w=1)
    if label == 0:
        return ONE
    return LaurentPoly.x(label)


# step tables ----------------------------------------------------------------


def allowed_steps(model: Model, a: int, b: int, k: int, N: int) -> List[Tuple[int, int, int]]:
    """Legal ``(dx, dy, label)`` steps out of ``(a, b)``.

    Besides the region rules this also drops steps that can only lead into
    dead ends (leaving diagonal ``N`` or breaking diagonal parity), so every
    prefix allowed here can still be completed.
    """
    d = a + b
    out: List[Tuple[int, int, int]] = []
    if model is Model.E:
        if d >= N:
            return out
        if d >= 0:
            out.append((1, 0, d + 1))
            out.append((0, 1, 0))
        if a > k and d <= 0:
            out.append((1, -1, WU))
            if d <= -2:
                out.append((1, 1, 0))
    elif model is Model.H:
        if d >= N:
            return out
        if d >= 0:
            out.append((-1, 1, d + 1))
            out.append((0, 1, 0))
        if a > k and d <= -2:
            out.append((0, 2, WU))
            out.append((1, 1, 0))
    else:
        if a < k:
            if d + 1 <= N - 1:
                out.append((1, 0, d + 1))
            if d + 1 <= N - 1:
                out.append((0, 1, 0))
        elif a == k:
            if d + 1 <= N:
                out.append((1, -1, d + 1))
            if d + 1 <= N - 1:
                out.append((0, 1, 0))
        else:
            if d >= 0 and d + 1 <= N:
                out.append((1, -1, d + 1))
            if d >= 1:
                out.append((0, -1, 0))
            if d <= 0:
                if a - 1 > k:
                    out.append((-1, -1, 0))
                out.append((0, -2, WU))
    return out


# special points ---------------------------------------------------------------


def e_start(i: int, k: int) -> Point:
    return (1 - i, i - 1)


def e_start_primed(i: int, k: int) -> Point:
    return (k + 1, -k - 2 * i + 1)


def e_end(j: int, n: int, k: int, N: int) -> Point:
    a = k + n + 1 - j
    return (a, N - a)


def h_start(i: int, n: int) -> Point:
    return (i - n, n - i)


def h_start_primed(i: int, n: int, k: int) -> Point:
    return (k + 1, -2 * n - k + 2 * i - 1)


def h_end(j: int, n: int, N: int) -> Point:
    return (j - n, N + n - j)


def mixed_end(i: int, k: int) -> Point:
    return (k + 1, -k - 2 * i + 1)


# data types -------------------------------------------------------------------


@dataclass(frozen=True)
class LatticePath:
    start: Point
    steps: Tuple[Step, ...]
    labels: Tuple[int, ...]

    def points(self) -> List[Point]:
        a, b = self.start
        pts = [(a, b)]
        for dx, dy in self.steps:
            a, b = a + dx, b + dy
            pts.append((a, b))
        return pts

    @property
    def end(self) -> Point:
        return self.points()[-1]

    def edges(self) -> Iterator[Tuple[Point, Step, int]]:
        a, b = self.start
        for (dx, dy), lab in zip(self.steps, self.labels):
            yield (a, b), (dx, dy), lab
            a, b = a + dx, b + dy

    def weight(self) -> LaurentPoly:
        out = ONE
        for lab in self.labels:
            if lab:
                out = out * label_weight(lab)
        return out


@dataclass(frozen=True)
class PathFamily:
    """One non-intersecting configuration.

    ``chosen`` is the set ``I``: indices starting at a primed point for
    ``E`` and ``H``, the active indices for ``MIXED``.  ``indices`` gives the
    path index of each entry of ``paths`` and ``ends`` the index of the end
    point it reaches.
    """

    model: Model
    n: int
    k: int
    N: int
    chosen: frozenset
    indices: Tuple[int, ...]
    paths: Tuple[LatticePath, ...]
    ends: Tuple[int, ...]

    @property
    def starts(self) -> Tuple[Point, ...]:
        return tuple(p.start for p in self.paths)

    def start_labels(self) -> Tuple[str, ...]:
        out = []
        for i in self.indices:
            if self.model is Model.MIXED:
                out.append(f"S{i}")
            elif self.model is Model.H and i > self.n:
                out.append(f"~S{i}")
            else:
                prime = "'" if i in self.chosen else ""
                out.append(("~S" if self.model is Model.H else "S") + f"{i}{prime}")
        return tuple(out)


def _start_point(model: Model, i: int, primed: bool, n: int, k: int) -> Point:
    if model is Model.H:
        return h_start_primed(i, n, k) if primed else h_start(i, n)
    return e_start_primed(i, k) if primed else e_start(i, k)


def start_weight(model: Model, i: int, primed: bool, n: int) -> LaurentPoly:
    """Factor contributed by path ``i``'s start choice."""
    if model is Model.E:
        return LaurentPoly.monomial(1, v=i) if primed else LaurentPoly.monomial(1, r=1, u=i)
    if model is Model.H:
        if i > n:
            return ONE
        e = n + 1 - i
        return LaurentPoly.monomial(1, r=1, u=e) if primed else LaurentPoly.monomial(1, v=e)
    return LaurentPoly.monomial(1, r=1, u=i) if not primed else LaurentPoly.monomial(1, v=i)


def _end_index(model: Model, p: Point, n: int, k: int, N: int) -> Optional[int]:
    a, b = p
    if model is Model.E:
        if a + b == N and k + 1 <= a <= k + n:
            return k + n + 1 - a
        return None
    if model is Model.H:
        if a + b == N and 1 - n <= a <= k:
            return a + n
        return None
    if a == k + 1:
        twice = 1 - k - b
        if twice % 2 == 0 and 1 <= twice // 2 <= n:
            return twice // 2
    return None


def _in_bounds(model: Model, p: Point, n: int, k: int) -> bool:
    a, b = p
    if model is Model.E:
        return a <= k + n
    if model is Model.H:
        return a >= 1 - n
    return a <= k + n and a + b >= 2 - 2 * n


# single paths -------------------------------------------------------------------


@dataclass(frozen=True)
class _Raw:
    path: LatticePath
    mask: int
    end: int
    xs: Tuple[int, ...]
    wu: int


class _Grid:
    """Assigns bit positions to lattice points on demand."""

    def __init__(self):
        self.bits: Dict[Point, int] = {}

    def bit(self, p: Point) -> int:
        b = self.bits.get(p)
        if b is None:
            b = self.bits[p] = 1 << len(self.bits)
        return b


def _single_paths(model: Model, start: Point, n: int, k: int, N: int, grid: _Grid) -> List[_Raw]:
    out: List[_Raw] = []
    steps: List[Step] = []
    labels: List[int] = []
    xs = [0] * N
    state = {"wu": 0}

    def rec(p: Point, mask: int):
        end = _end_index(model, p, n, k, N)
        if end is not None:
            out.append(_Raw(LatticePath(start, tuple(steps), tuple(labels)), mask, end, tuple(xs), state["wu"]))
            if model is not Model.MIXED:
                return
        for dx, dy, lab in allowed_steps(model, p[0], p[1], k, N):
            q = (p[0] + dx, p[1] + dy)
            if not _in_bounds(model, q, n, k):
                continue
            steps.append((dx, dy))
            labels.append(lab)
            if lab == WU:
                state["wu"] += 1
            elif lab:
                xs[lab - 1] += 1
            rec(q, mask | grid.bit(q))
            if lab == WU:
                state["wu"] -= 1
            elif lab:
                xs[lab - 1] -= 1
            steps.pop()
            labels.pop()

    rec(start, grid.bit(start))
    return out


def _check_params(model: Model, n: int, k: int, N: Optional[int]) -> int:
    if n < 1:
        raise ValueError("path models need n >= 1")
    if k < 0:
        raise ValueError("path models need k >= 0")
    if N is None:
        N = n + k
    if N < n + k:
        raise ValueError("path models need N >= n + k")
    return N


def _subsets(n: int) -> List[frozenset]:
    out = []
    for size in range(n + 1):
        out.extend(frozenset(c) for c in combinations(range(1, n + 1), size))
    return out


def _plan(model: Model, n: int, k: int, I: frozenset):
    """Path indices with their (start point, primed) for a start choice ``I``."""
    if model is Model.E:
        return [(i, _start_point(model, i, i in I, n, k), i in I) for i in range(1, n + 1)]
    if model is Model.H:
        plan = [(i, _start_point(model, i, i in I, n, k), i in I) for i in range(1, n + 1)]
        plan += [(i, h_start(i, n), False) for i in range(n + 1, n + k + 1)]
        return plan
    return [(i, e_start(i, k), False) for i in sorted(I)]


def _raw_families(model: Model, n: int, k: int, N: int, primes: Optional[Sequence] = None):
    grid = _Grid()
    cache: Dict[Point, List[_Raw]] = {}
    subsets = _subsets(n) if primes is None else [frozenset(primes)]
    for I in subsets:
        plan = _plan(model, n, k, I)
        candidates = []
        for i, pt, _ in plan:
            if pt not in cache:
                cache[pt] = _single_paths(model, pt, n, k, N, grid)
            pool = cache[pt]
            if model is Model.MIXED:
                pool = [r for r in pool if r.end in I]
            candidates.append(pool)
        chosen: List[_Raw] = []

        def rec(t: int, mask: int):
            if t == len(plan):
                yield tuple(chosen)
                return
            for raw in candidates[t]:
                if raw.mask & mask:
                    continue
                chosen.append(raw)
                yield from rec(t + 1, mask | raw.mask)
                chosen.pop()

        for combo in rec(0, 0):
            yield I, plan, combo


def enumerate_families(model, n: int, k: int, N: Optional[int] = None, primes=None) -> List[PathFamily]:
    """All non-intersecting families, ordered by start choice then path choice.

    ``N`` defaults to ``n + k``; larger values are allowed for
    families that need more variables.  ``primes``
    restricts to one start choice ``I``.
    """
    model = Model(model)
    N = _check_params(model, n, k, N)
    out = []
    for I, plan, combo in _raw_families(model, n, k, N, primes):
        out.append(
            PathFamily(
                model,
                n,
                k,
                N,
                I,
                tuple(i for i, _, _ in plan),
                tuple(r.path for r in combo),
                tuple(r.end for r in combo),
            )
        )
    return out


def family_weight(f: PathFamily) -> LaurentPoly:
    out = ONE
    if f.model is Model.MIXED:
        for l in range(1, f.n + 1):
            out = out * start_weight(f.model, l, l not in f.chosen, f.n)
    else:
        for i in f.indices:
            out = out * start_weight(f.model, i, i in f.chosen, f.n)
    for p in f.paths:
        out = out * p.weight()
    return out


def gf_model(model, n: int, k: int, N: Optional[int] = None) -> LaurentPoly:
    """Weighted count of all non-intersecting families of the model."""
    model = Model(model)
    N = _check_params(model, n, k, N)
    acc: Counter = Counter()
    for I, plan, combo in _raw_families(model, n, k, N):
        r = u = v = 0
        if model is Model.MIXED:
            for l in range(1, n + 1):
                if l in I:
                    r, u = r + 1, u + l
                else:
                    v += l
        else:
            for i, _, primed in plan:
                if model is Model.H and i > n:
                    continue
                e = i if model is Model.E else n + 1 - i
                ru_side = (not primed) if model is Model.E else primed
                if ru_side:
                    r, u = r + 1, u + e
                else:
                    v += e
        w = sum(raw.wu for raw in combo)
        xs = [0] * N
        for raw in combo:
            for t, c in enumerate(raw.xs):
                xs[t] += c
        acc[(r, u - w, v, w) + tuple(xs)] += 1
    return LaurentPoly(acc)


def single_path_gf(model, n: int, k: int, N: Optional[int], start: Tuple[int, bool], end: int, with_start_weight: bool = True) -> LaurentPoly:
    """Generating function of single paths from ``start = (i, primed)`` to end ``end``."""
    model = Model(model)
    N = _check_params(model, n, k, N)
    i, primed = start
    pt = e_start(i, k) if model is Model.MIXED else _start_point(model, i, primed, n, k)
    acc = ZERO
    for raw in _single_paths(model, pt, n, k, N, _Grid()):
        if raw.end == end:
            acc = acc + raw.path.weight()
    if with_start_weight:
        acc = acc * start_weight(model, i, primed, n)
    return acc


def validate_family(f: PathFamily) -> List[str]:
    """Problems with ``f``; an empty list means the family is valid."""
    problems = []
    model, n, k, N = f.model, f.n, f.k, f.N
    plan = _plan(model, n, k, f.chosen)
    if tuple(i for i, _, _ in plan) != f.indices:
        problems.append("path indices do not match the start choice")
    for (i, pt, _), path in zip(plan, f.paths):
        if path.start != pt:
            problems.append(f"path {i} starts at {path.start}, expected {pt}")
    seen: Dict[Point, int] = {}
    for i, path, end in zip(f.indices, f.paths, f.ends):
        for (a, b), step, lab in path.edges():
            legal = {(dx, dy): l for dx, dy, l in allowed_steps(model, a, b, k, N)}
            if legal.get(step, None) != lab:
                problems.append(f"path {i}: step {step} with label {lab} illegal at {(a, b)}")
        got = _end_index(model, path.end, n, k, N)
        if got != end:
            problems.append(f"path {i} ends at {path.end}, recorded end {end}")
        for p in path.points():
            if p in seen:
                problems.append(f"paths {seen[p]} and {i} share {p}")
            seen[p] = i
    if model is Model.MIXED:
        if set(f.ends) != set(f.chosen):
            problems.append("mixed ends do not match the active set")
    elif sorted(f.ends) != list(range(1, len(f.indices) + 1)):
        problems.append("end points are not all used exactly once")
    return problems


# determinants with two start points --------------------------------------------


def lgv_mixed_start_det(P, Pp, a, b, sign_rule=SignRule.FIRST) -> LaurentPoly:
    """``det(a_i P(i,j) + eps(i) b_i P'(i,j))`` with the sign of the rule.

    ``FIRST`` uses ``eps(i) = (-1)^(i-1)``, ``SECOND`` uses ``(-1)^(size-i)``.
    """
    sign_rule = SignRule(sign_rule)
    size = len(P)
    if len(Pp) != size or any(len(row) != size for row in list(P) + list(Pp)):
        raise ValueError("P and P' must be square of equal order")
    rows = []
    for i in range(1, size + 1):
        eps = (-1) ** (i - 1) if sign_rule is SignRule.FIRST else (-1) ** (size - i)
        rows.append([a[i - 1] * P[i - 1][j] + b[i - 1] * Pp[i - 1][j] * eps for j in range(size)])
    return poly_det(rows)


# dualisation ----------------------------------------------------------------------


class DualisationError(ValueError):
    pass


def _trace(start: Point, forced: Dict[Point, Tuple[int, int, int]], used: set, choose, limit: int = 10_000):
    p = start
    steps, labels = [], []
    for _ in range(limit):
        if p in forced:
            dx, dy, lab = forced[p]
            used.add(p)
        else:
            nxt = choose(p)
            if nxt is None:
                return LatticePath(start, tuple(steps), tuple(labels))
            dx, dy, lab = nxt
        steps.append((dx, dy))
        labels.append(lab)
        p = (p[0] + dx, p[1] + dy)
    raise DualisationError(f"path from {start} does not terminate")


def dualise_e_to_h(f: PathFamily) -> PathFamily:
    """Dual h-family: tilt every x-step and turn every w/u-step upright."""
    if f.model is not Model.E:
        raise ValueError("expected an e-family")
    n, k, N = f.n, f.k, f.N
    forced: Dict[Point, Tuple[int, int, int]] = {}
    for path in f.paths:
        for (a, b), step, lab in path.edges():
            if step == (1, 0):
                forced[(a + 1, b - 1)] = (-1, 1, lab)
            elif step == (1, -1):
                forced[(a, b - 2)] = (0, 2, WU)
    chosen = frozenset(n + 1 - i for i in range(1, n + 1) if i not in f.chosen)

    def choose(p):
        d = p[0] + p[1]
        if d >= N:
            return None
        return (0, 1, 0) if d >= 0 else (1, 1, 0)

    used: set = set()
    paths, ends = [], []
    for i in range(1, n + k + 1):
        start = _start_point(Model.H, i, i in chosen, n, k) if i <= n else h_start(i, n)
        path = _trace(start, forced, used, choose)
        end = _end_index(Model.H, path.end, n, k, N)
        if end is None:
            raise DualisationError(f"h-path {i} stops at {path.end}, not an end point")
        paths.append(path)
        ends.append(end)
    if used != set(forced):
        raise DualisationError("some dual steps were not covered by any h-path")
    return PathFamily(Model.H, n, k, N, chosen, tuple(range(1, n + k + 1)), tuple(paths), tuple(ends))


def dualise_e_to_mixed(f: PathFamily) -> PathFamily:
    """Half dualisation: only the steps weakly right of ``x = k`` are dualised."""
    if f.model is not Model.E:
        raise ValueError("expected an e-family")
    n, k, N = f.n, f.k, f.N
    forced: Dict[Point, Tuple[int, int, int]] = {}
    for path in f.paths:
        for (a, b), step, lab in path.edges():
            if step == (1, 0):
                forced[(a, b)] = (1, 0, lab) if a < k else (1, -1, lab)
            elif step == (1, -1):
                forced[(a, b)] = (0, -2, WU)

    def choose(p):
        a, b = p
        d = a + b
        if a == k + 1 and d <= 0:
            return None
        if a <= k:
            if d >= N:
                raise DualisationError(f"mixed path stuck at {p}")
            return (0, 1, 0)
        return (0, -1, 0) if d >= 1 else (-1, -1, 0)

    active = frozenset(i for i in range(1, n + 1) if i not in f.chosen)
    used: set = set()
    paths, ends = [], []
    for i in sorted(active):
        path = _trace(e_start(i, k), forced, used, choose)
        end = _end_index(Model.MIXED, path.end, n, k, N)
        if end is None:
            raise DualisationError(f"mixed path {i} stops at {path.end}, not an end point")
        paths.append(path)
        ends.append(end)
    if used != set(forced):
        raise DualisationError("some dual steps were not covered by any mixed path")
    return PathFamily(Model.MIXED, n, k, N, active, tuple(sorted(active)), tuple(paths), tuple(ends))
