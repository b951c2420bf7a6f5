"""Partitions, mu-vectors and inner corners."""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    NegativePart,
    NotStrictlyDecreasing,
    NotWeaklyDecreasing,
    NTooSmall,
)


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``. The empty partition is ``Partition(())``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 0:
                raise NegativePart(f"negative part {p} in {tuple(parts)}")
            if i and p > parts[i - 1]:
                raise NotWeaklyDecreasing(f"{tuple(parts)} is not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part lookup with lambda_i = 0 past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


EMPTY = Partition()


def make_partition(raw: Iterable[int]) -> Partition:
    return Partition(raw)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def to_mu(lam: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """mu_i = lambda_i - i + 1 for i = 1..n (lambda padded with zeros)."""
    lam = Partition(lam)
    if n is None:
        n = lam.height
    if n < lam.height:
        raise NTooSmall(f"N={n} is smaller than the height {lam.height} of {lam}")
    return tuple(lam.part(i) - i + 1 for i in range(1, n + 1))


def from_mu(mu: Sequence[int]) -> Partition:
    for a, b in zip(mu, mu[1:]):
        if a <= b:
            raise NotStrictlyDecreasing(f"{tuple(mu)} is not strictly decreasing")
    parts = [m + i for i, m in enumerate(mu)]
    if parts and parts[-1] < 0:
        raise NegativePart(f"{tuple(mu)} maps to a negative part")
    return Partition(parts)


class DistinctPart(NamedTuple):
    value: int  # xi_i
    multiplicity: int  # m_i


def distinct_parts(lam: Sequence[int]) -> list[DistinctPart]:
    out: list[DistinctPart] = []
    for p in lam:
        if out and out[-1].value == p:
            out[-1] = DistinctPart(p, out[-1].multiplicity + 1)
        else:
            out.append(DistinctPart(p, 1))
    return out


def cumulative_heights(lam: Sequence[int]) -> list[int]:
    """[y_0, y_1, ..., y_k] with y_0 = 0 and y_i = y_{i-1} + m_i."""
    ys = [0]
    for dp in distinct_parts(lam):
        ys.append(ys[-1] + dp.multiplicity)
    return ys


class InnerCorner(NamedTuple):
    x: int
    y: int
    index: int  # 1-based


def inner_corners(lam: Sequence[int]) -> list[InnerCorner]:
    """The k+1 points (xi_i, y_{i-1}), closing with (0, height).

    The empty diagram gets the single degenerate corner (0, 0).
    """
    xs = [dp.value for dp in distinct_parts(lam)] + [0]
    ys = cumulative_heights(lam)
    return [InnerCorner(x, y, i) for i, (x, y) in enumerate(zip(xs, ys), start=1)]


def from_corners(points: Iterable[tuple[int, int]]) -> Partition:
    """Rebuild a diagram from corner points ``(x, y)``.

    The points need not be an exact corner set: coincident x or y values
    (as produced by shifting corners into each other) simply merge rows.
    The point with the largest y must have x = 0 and fixes the height.
    """
    pts = sorted(points, key=lambda p: (p[1], -p[0]))
    parts: list[int] = []
    for (x, y), (_, y_next) in zip(pts, pts[1:]):
        parts.extend([x] * (y_next - y))
    if pts and pts[-1][0] != 0:
        raise ValueError(f"last corner {pts[-1]} is not on the y axis")
    return Partition(parts)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for w in range(n + 1):
        yield from partitions_of(w)


def parse_partition(text: str) -> Partition:
    """Parse "4,2,1" (empty string or "0" gives the empty partition)."""
    text = text.strip().strip("()[]")
    if not text:
        return EMPTY
    return Partition(int(tok) for tok in text.split(","))
