"""Young-diagram surgery: peelings, border-strip addition, corner moves."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    EmptyPartition,
    InvalidStartBox,
    InvalidStripSpec,
    RowOutOfRange,
    ShiftUndefined,
)
from .partition import Partition, from_corners, inner_corners


class StripSpec(NamedTuple):
    """One added border strip: it ends in row ``r`` (gaining ``t`` boxes
    there) and spans the ``m`` rows r..r+m-1."""

    r: int
    m: int
    t: int

    @property
    def start_row(self) -> int:
        # r_m = r + m - 1, the row holding the first (left-most) added box
        return self.r + self.m - 1

    def __str__(self) -> str:
        return f"{self.r}:{self.m}:{self.t}"


def parse_specs(text: str) -> list[StripSpec]:
    """Parse "r:m:t,r:m:t"."""
    specs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        fields = chunk.split(":")
        if len(fields) != 3:
            raise InvalidStripSpec(f"strip {chunk!r} is not of the form r:m:t")
        specs.append(StripSpec(*(int(f) for f in fields)))
    return specs


def format_specs(specs: Iterable[StripSpec]) -> str:
    return ",".join(str(s) for s in specs)


def validate_specs(lam: Sequence[int], specs: Sequence[StripSpec]) -> None:
    """Raise InvalidStripSpec naming the first violated inequality.

    With n the height of lam and r_{k+1} := n + 1:
    2 <= r_1 < ... < r_k <= n, lam_{r_i} < lam_{r_i - 1},
    1 <= t_i <= lam_{r_i - 1} - lam_{r_i}, 1 <= m_i <= r_{i+1} - r_i.
    """
    lam = Partition(lam)
    n = lam.height
    if not specs:
        raise InvalidStripSpec("at least one strip is required (k >= 1)")
    rows = [s.r for s in specs] + [n + 1]
    if rows[0] < 2:
        raise InvalidStripSpec(f"r_1 >= 2 violated (r_1={rows[0]})")
    for i in range(1, len(specs)):
        if rows[i] <= rows[i - 1]:
            raise InvalidStripSpec(f"r_{i} < r_{i + 1} violated ({rows[i - 1]} >= {rows[i]})")
    for i, s in enumerate(specs, start=1):
        if s.r > n:
            raise InvalidStripSpec(f"r_{i} <= n violated (r_{i}={s.r}, n={n})")
        gap = lam.part(s.r - 1) - lam.part(s.r)
        if gap <= 0:
            raise InvalidStripSpec(
                f"lambda_{{r_{i}}} < lambda_{{r_{i}-1}} violated at row {s.r} of {lam}"
            )
        if not 1 <= s.t <= gap:
            raise InvalidStripSpec(f"1 <= t_{i} <= {gap} violated (t_{i}={s.t})")
        room = rows[i] - s.r
        if not 1 <= s.m <= room:
            raise InvalidStripSpec(f"1 <= m_{i} <= {room} violated (m_{i}={s.m})")


def enumerate_specs(lam: Sequence[int], max_k: int) -> list[list[StripSpec]]:
    """Every valid spec list with 1 <= k <= max_k, sorted lexicographically."""
    lam = Partition(lam)
    n = lam.height
    ends = [r for r in range(2, n + 1) if lam.part(r) < lam.part(r - 1)]
    out = []
    for k in range(1, max_k + 1):
        for rows in combinations(ends, k):
            bounded = list(rows) + [n + 1]
            choices = [
                [
                    StripSpec(r, m, t)
                    for m in range(1, bounded[i + 1] - r + 1)
                    for t in range(1, lam.part(r - 1) - lam.part(r) + 1)
                ]
                for i, r in enumerate(rows)
            ]
            out.extend(list(c) for c in product(*choices))
    out.sort(key=lambda specs: [tuple(s) for s in specs])
    return out


def peel_complete(lam: Sequence[int]) -> Partition:
    """Remove the complete border strip: (lam_2 - 1, ..., lam_n - 1)."""
    return Partition(p - 1 for p in lam[1:])


def peel_down(lam: Sequence[int], r: int) -> Partition:
    """Partial down-peeling from the right-most strip box of row r."""
    lam = Partition(lam)
    if not 1 <= r <= lam.height:
        raise RowOutOfRange(f"row {r} outside 1..{lam.height} for {lam}")
    return Partition(tuple(lam[: r - 1]) + tuple(p - 1 for p in lam[r:]))


def peel_up(lam: Sequence[int], r: int, s: int) -> Partition:
    """Partial up-peeling from strip box (r, s):
    (lam_2 - 1, ..., lam_r - 1, lam_{r+1} + s - 1, lam_{r+1}, ..., lam_n).

    Needs lam_r > lam_{r+1} and 1 <= s <= lam_r - lam_{r+1}, i.e. no box
    directly under the starting box.
    """
    lam = Partition(lam)
    if not 1 <= r <= lam.height:
        raise RowOutOfRange(f"row {r} outside 1..{lam.height} for {lam}")
    below = lam.part(r + 1)
    if not 1 <= s <= lam.part(r) - below:
        raise InvalidStartBox(
            f"box ({r},{s}) of {lam} has a box under it or lies outside the strip"
        )
    head = [lam.part(i) - 1 for i in range(2, r + 1)]
    return Partition(head + [below + s - 1] + list(lam[r:]))


def add_strips(lam: Sequence[int], specs: Sequence[StripSpec]) -> Partition:
    lam = Partition(lam)
    validate_specs(lam, specs)
    parts = list(lam)
    for s in specs:
        # rows are 1-based; each strip only touches rows r..r_m
        parts[s.r - 1] = lam.part(s.r) + s.t
        for row in range(s.r + 1, s.start_row + 1):
            parts[row - 1] = lam.part(row - 1) + 1
    return Partition(parts)


def strip_box_count(lam: Sequence[int], spec: StripSpec) -> int:
    """Boxes added by one strip: lam_r - lam_{r_m} + t + m - 1."""
    lam = Partition(lam)
    return lam.part(spec.r) - lam.part(spec.start_row) + spec.t + spec.m - 1


def remove_first(lam: Sequence[int], axis: str) -> Partition:
    lam = Partition(lam)
    if not lam:
        raise EmptyPartition("cannot remove the first row/column of the empty partition")
    if axis == "row":
        return Partition(lam[1:])
    if axis == "column":
        return Partition(p - 1 for p in lam)
    raise ValueError(f"axis must be 'row' or 'column', not {axis!r}")


def corner_shift(lam: Sequence[int], i: int, direction: str) -> Partition:
    """Move the single inner corner alpha_i by one unit.

    ``direction`` is one of "h+", "h-", "v+", "v-". Rows merge when the
    corner runs into a neighbour.
    """
    corners = inner_corners(lam)
    if not 1 <= i <= len(corners):
        raise ShiftUndefined(f"corner index {i} outside 1..{len(corners)}")
    x, y, _ = corners[i - 1]
    if direction in ("h+", "h-"):
        if x == 0:
            raise ShiftUndefined(f"horizontal shift of corner (0,{y}) is undefined")
        if direction == "h+" and i == 1:
            raise ShiftUndefined("h+ of the top corner has no bounding corner above")
        x += 1 if direction == "h+" else -1
    elif direction in ("v+", "v-"):
        if y == 0:
            raise ShiftUndefined(f"vertical shift of corner ({x},0) is undefined")
        y += 1 if direction == "v+" else -1
    else:
        raise ValueError(f"unknown shift direction {direction!r}")
    points = [(c.x, c.y) for c in corners]
    points[i - 1] = (x, y)
    return from_corners(points)


def corner_push(lam: Sequence[int], i: int, mode: str) -> Partition:
    """lam^+_-(alpha_i) for mode "+-", lam^-_+(alpha_i) for mode "-+".

    Corners above alpha_i move horizontally by +1 (resp. -1), corners below
    move vertically by -1 (resp. +1), all at once; alpha_i stays put.
    """
    corners = inner_corners(lam)
    if not 1 <= i <= len(corners):
        raise ShiftUndefined(f"corner index {i} outside 1..{len(corners)}")
    if mode not in ("+-", "-+"):
        raise ValueError(f"mode must be '+-' or '-+', not {mode!r}")
    dh = 1 if mode == "+-" else -1
    points = []
    for c in corners:
        if c.index < i:
            points.append((c.x + dh, c.y))
        elif c.index > i:
            points.append((c.x, c.y - dh))
        else:
            points.append((c.x, c.y))
    return from_corners(points)

