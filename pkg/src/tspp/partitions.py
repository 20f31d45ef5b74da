"""Integer partitions, Frobenius coordinates and k-asymmetry.

Partitions are drawn in English convention: row 1 on top, cell ``(i, j)``
is the ``j``-th cell of row ``i`` (both 1-based).
"""

from __future__ import annotations

from typing import Iterator, List, NamedTuple, Sequence, Tuple


class NegativeLeg(ValueError):
    """A Frobenius arm or leg came out negative."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """``λ_i`` with 1-based ``i``, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def contains(self, other: Sequence[int]) -> bool:
        other = Partition(other)
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    @property
    def durfee(self) -> int:
        return durfee(self)


class FrobeniusCoords(NamedTuple):
    arms: Tuple[int, ...]
    legs: Tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.arms)

    def __str__(self):
        return f"({','.join(map(str, self.arms))}|{','.join(map(str, self.legs))})"


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def durfee(lam: Sequence[int]) -> int:
    # parts are decreasing and i increasing, so the condition fails once
    return sum(1 for i, part in enumerate(lam, start=1) if part >= i)


def frobenius(lam: Sequence[int]) -> FrobeniusCoords:
    lam = Partition(lam)
    conj = conjugate(lam)
    d = durfee(lam)
    return FrobeniusCoords(
        tuple(lam[i] - i - 1 for i in range(d)),
        tuple(conj[i] - i - 1 for i in range(d)),
    )


def from_frobenius(arms: Sequence[int], legs: Sequence[int] | None = None) -> Partition:
    """Partition with the given arms and legs.

    Accepts either a ``FrobeniusCoords`` or two sequences.
    """
    if legs is None:
        arms, legs = arms
    arms, legs = tuple(arms), tuple(legs)
    if len(arms) != len(legs):
        raise ValueError("arms and legs must have equal length")
    if any(x < 0 for x in arms + legs):
        raise NegativeLeg(f"negative Frobenius coordinate in ({arms}|{legs})")
    if any(a <= b for a, b in zip(arms, arms[1:])) or any(a <= b for a, b in zip(legs, legs[1:])):
        raise ValueError(f"Frobenius coordinates must strictly decrease: ({arms}|{legs})")
    d = len(arms)
    col_len = [legs[j] + j + 1 for j in range(d)]
    rows: List[int] = [arms[i] + i + 1 for i in range(d)]
    depth = col_len[0] if d else 0
    for i in range(d + 1, depth + 1):
        rows.append(sum(1 for c in col_len if c >= i))
    return Partition(rows)


def hook(arm: int, leg: int) -> Partition:
    """The hook ``(arm | leg)``, i.e. ``(arm + 1, 1^leg)``."""
    return from_frobenius((arm,), (leg,))


def is_k_asymmetric(lam: Sequence[int], k: int) -> bool:
    arms, legs = frobenius(lam)
    if k >= 0:
        return all(b == a + k for a, b in zip(arms, legs))
    return all(a == b - k for a, b in zip(arms, legs))


def partitions_in_box(width: int, height: int) -> Iterator[Partition]:
    """All partitions with at most ``height`` parts, each at most ``width``."""

    def rec(prefix: List[int], bound: int):
        yield Partition(prefix)
        if len(prefix) == height:
            return
        for p in range(1, bound + 1):
            prefix.append(p)
            yield from rec(prefix, p)
            prefix.pop()

    if width < 0 or height < 0:
        return
    yield from rec([], width)


def partitions_of_size_at_most(n: int) -> Iterator[Partition]:
    for lam in partitions_in_box(n, n):
        if lam.size <= n:
            yield lam


def graded_lex_key(lam: Partition):
    return (lam.size, tuple(lam))


def k_asymmetric_in_box(n: int, k: int) -> List[Partition]:
    """k-asymmetric partitions inside ``(n)^(n+k)``, ordered by size then lex."""
    if n < 0 or n + k < 0:
        raise ValueError("need n >= 0 and n + k >= 0")
    found = [lam for lam in partitions_in_box(n, n + k) if is_k_asymmetric(lam, k)]
    return sorted(found, key=graded_lex_key)
