"""Exact Schur polynomial values in finitely many variables.

Three independent routes: the bialternant (ratio of alternants), the
Jacobi-Trudi determinants in h_k or e_k, and brute-force enumeration of
semistandard tableaux. Identities are checked with the bialternant, which
shares nothing with the determinant manipulations that produce them.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    HeightExceedsVariables,
    RepeatedCoordinates,
    SizeTooSmall,
    TooLarge,
    VariableCountTooSmall,
)
from .linalg import det
from .partition import Partition, conjugate

EvalPoint = tuple  # tuple of Fractions, one per variable

MAX_SSYT_WEIGHT = 12
MAX_SSYT_VARS = 8
MAX_RANDOM_COORD = 50


def make_point(coords: Iterable) -> EvalPoint:
    point = tuple(Fraction(c) for c in coords)
    if not point:
        raise VariableCountTooSmall("an evaluation point needs at least one coordinate")
    return point


def symmetric_basis_values(kind: str, point: Sequence, max_k: int) -> list[Fraction]:
    """[b_0, ..., b_max_k] for b = h (complete) or e (elementary)."""
    if kind not in ("h", "e"):
        raise ValueError(f"kind must be 'h' or 'e', not {kind!r}")
    vals = [Fraction(1)] + [Fraction(0)] * max_k
    for t in point:
        t = Fraction(t)
        if kind == "h":
            # multiply by 1/(1 - t x): running sum from low degree up
            for k in range(1, max_k + 1):
                vals[k] += t * vals[k - 1]
        else:
            # multiply by (1 + t x): update from high degree down
            for k in range(max_k, 0, -1):
                vals[k] += t * vals[k - 1]
    return vals


def _basis_lookup(vals: list[Fraction], k: int) -> Fraction:
    if k < 0:
        return Fraction(0)
    return vals[k]


def schur_eval_jacobi_trudi(lam: Sequence[int], point: Sequence, kind: str = "h",
                            size: int | None = None) -> Fraction:
    """det[h_{lam_i - i + j}] or det[e_{lam'_i - i + j}] of the given size."""
    lam = Partition(lam)
    rows = lam if kind == "h" else conjugate(lam)
    if size is None:
        size = len(rows)
    if size < len(rows):
        need = "height" if kind == "h" else "first part"
        raise SizeTooSmall(f"size {size} is below the {need} {len(rows)} of {lam}")
    if size == 0:
        return Fraction(1)
    top = (rows[0] if rows else 0) + size
    vals = symmetric_basis_values(kind, point, top)
    padded = list(rows) + [0] * (size - len(rows))
    matrix = [
        [_basis_lookup(vals, padded[i] - i + j) for j in range(size)]
        for i in range(size)
    ]
    return Fraction(det(matrix))


def schur_eval_bialternant(lam: Sequence[int], point: Sequence) -> Fraction:
    lam = Partition(lam)
    point = make_point(point)
    if len(set(point)) != len(point):
        raise RepeatedCoordinates(f"bialternant needs distinct coordinates, got {point}")
    return _bialternant(tuple(lam), point)


@lru_cache(maxsize=None)
def _vandermonde(point: tuple) -> Fraction:
    m = len(point)
    return Fraction(det([[t ** (m - 1 - j) for j in range(m)] for t in point]))


@lru_cache(maxsize=200_000)
def _bialternant(lam: tuple, point: tuple) -> Fraction:
    m = len(point)
    if len(lam) > m:
        raise HeightExceedsVariables(f"height {len(lam)} of {lam} exceeds {m} variables")
    exps = [(lam[j] if j < len(lam) else 0) + m - 1 - j for j in range(m)]
    # integer points keep the whole computation in the integers
    if all(t.denominator == 1 for t in point):
        ints = [int(t) for t in point]
        num = det([[t ** e for e in exps] for t in ints])
    else:
        num = det([[t ** e for e in exps] for t in point])
    return Fraction(num) / _vandermonde(point)


def schur_expand_ssyt(lam: Sequence[int], m: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of s_lam(t_1..t_m) by counting SSYT per content."""
    lam = Partition(lam)
    if lam.weight > MAX_SSYT_WEIGHT or m > MAX_SSYT_VARS:
        raise TooLarge(
            f"SSYT enumeration limited to |lambda| <= {MAX_SSYT_WEIGHT}, m <= {MAX_SSYT_VARS}"
        )
    if lam.height > m:
        return {}
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}
    counts: Counter = Counter()

    def fill(pos: int) -> None:
        if pos == len(cells):
            content = [0] * m
            for v in filling.values():
                content[v - 1] += 1
            counts[tuple(content)] += 1
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = filling[(i, j - 1)]  # rows weakly increase
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)  # columns strictly increase
        # entry in row i needs room for the rows beneath it in this column
        col_len = sum(1 for row in lam if row > j)
        hi = m - (col_len - 1 - i)
        for v in range(lo, hi + 1):
            filling[(i, j)] = v
            fill(pos + 1)
        filling.pop((i, j), None)

    fill(0)
    return dict(counts)


def evaluate_monomials(expansion: dict[tuple[int, ...], int], point: Sequence) -> Fraction:
    total = Fraction(0)
    for exps, coeff in expansion.items():
        term = Fraction(coeff)
        for t, e in zip(point, exps):
            term *= Fraction(t) ** e
        total += term
    return total


@dataclass(frozen=True)
class VerificationReport:
    verified: bool
    points_checked: int
    counterexample: tuple | None = None

    def to_dict(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = [int(c) if Fraction(c).denominator == 1 else str(c) for c in self.counterexample]
        return {
            "verified": self.verified,
            "points_checked": self.points_checked,
            "counterexample": ce,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def evaluation_points(m: int, trials: int, seed: int) -> list[EvalPoint]:
    """(1, 2, ..., m) followed by ``trials`` seeded points of distinct
    integers drawn from 1..50."""
    if m > MAX_RANDOM_COORD:
        raise VariableCountTooSmall(f"at most {MAX_RANDOM_COORD} variables supported")
    rng = random.Random(seed)
    points = [make_point(range(1, m + 1))]
    for _ in range(trials):
        points.append(make_point(rng.sample(range(1, MAX_RANDOM_COORD + 1), m)))
    return points


def side_value(terms, point: EvalPoint) -> Fraction:
    total = Fraction(0)
    for term in terms:
        value = Fraction(term.coeff)
        for lam in term.factors:
            value *= _bialternant(tuple(lam), point)
        total += value
    return total


def verify_identity(identity, m: int | None = None, trials: int = 3,
                    seed: int = 42) -> VerificationReport:
    """Evaluate both sides exactly at (1..m) and at ``trials`` random points.

    ``m`` defaults to one more than the largest height in the identity.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    tallest = max((lam.height for lam in identity.partitions()), default=0)
    if m is None:
        m = tallest + 1
    if m < max(tallest, 1):
        raise VariableCountTooSmall(f"{m} variables cannot carry a partition of height {tallest}")
    points = evaluation_points(m, trials, seed)
    for n_checked, point in enumerate(points, start=1):
        if side_value(identity.lhs, point) != side_value(identity.rhs, point):
            return VerificationReport(False, n_checked, point)
    return VerificationReport(True, len(points))
