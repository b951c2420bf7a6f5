"""Plücker row-exchange relation and the determinant-level derivation of
the main identity.

For p x p matrices A, B and rows r_1 < ... < r_k,

    |A||B| = sum over s_1 < ... < s_k of |A'||B'|

where A' puts row s_j of B in place r_j of A, and B' puts row r_j of A in
place s_j of B. The same exchange routine drives both the numeric check
and the symbolic one, in which a Jacobi-Trudi row is identified by its
leading index mu_i.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import SizeMismatch
from .identities import Identity, Term
from .linalg import det, permutation_sign
from .partition import Partition, from_mu, to_mu
from .strips import StripSpec, validate_specs


def validate_exchange(p: int, rows: Sequence[int]) -> None:
    if not 1 <= len(rows) <= p:
        raise ValueError(f"need 1 <= k <= {p} exchanged rows, got {len(rows)}")
    if any(a >= b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"exchange rows {tuple(rows)} are not strictly increasing")
    if rows[0] < 1 or rows[-1] > p:
        raise ValueError(f"exchange rows {tuple(rows)} outside 1..{p}")


def exchanges(a_rows: Sequence, b_rows: Sequence, rows: Sequence[int]) -> Iterator[tuple]:
    """Yield (s, A', B') for every increasing index set s (1-based)."""
    p = len(a_rows)
    if len(b_rows) != p:
        raise SizeMismatch(f"row counts differ: {p} vs {len(b_rows)}")
    validate_exchange(p, rows)
    for s in combinations(range(1, p + 1), len(rows)):
        a_new, b_new = list(a_rows), list(b_rows)
        for r_j, s_j in zip(rows, s):
            a_new[r_j - 1] = b_rows[s_j - 1]
            b_new[s_j - 1] = a_rows[r_j - 1]
        yield s, a_new, b_new


@dataclass
class PluckerExpansion:
    terms: list  # (s, |A'|, |B'|)
    lhs: object  # |A||B|

    @property
    def total(self):
        return sum(da * db for _, da, db in self.terms)

    @property
    def holds(self) -> bool:
        return self.total == self.lhs


def plucker_expand(a: Sequence[Sequence], b: Sequence[Sequence],
                   rows: Sequence[int]) -> PluckerExpansion:
    p = len(a)
    if len(b) != p or any(len(row) != p for row in list(a) + list(b)):
        raise SizeMismatch("A and B must both be square of the same size")
    terms = [(s, det(a2), det(b2)) for s, a2, b2 in exchanges(a, b, rows)]
    return PluckerExpansion(terms, det(a) * det(b))


def selftest(trials: int = 200, seed: int = 42, size: int | None = None,
             lo: int = -9, hi: int = 9) -> tuple[int, int, int]:
    """Random integer matrix pairs checked against every exchange set.

    Returns (trials, relations checked, failures).
    """
    rng = random.Random(seed)
    checked = failures = 0
    for _ in range(trials):
        p = size if size is not None else rng.randint(2, 5)
        a = [[rng.randint(lo, hi) for _ in range(p)] for _ in range(p)]
        b = [[rng.randint(lo, hi) for _ in range(p)] for _ in range(p)]
        for k in range(1, p + 1):
            for rows in combinations(range(1, p + 1), k):
                checked += 1
                if not plucker_expand(a, b, rows).holds:
                    failures += 1
    return trials, checked, failures


# --- symbolic Jacobi-Trudi rows -------------------------------------------


def normalize_rows(mu: Sequence[int]) -> tuple[int, Partition] | None:
    """Sort leading indices into decreasing order.

    Returns (sign, partition), or None when the determinant vanishes
    (a repeated index, or a part that would be negative, which forces a
    zero last row).
    """
    if len(set(mu)) != len(mu):
        return None
    ordered = sorted(mu, reverse=True)
    # permutation_sign counts ascending inversions; reverse the comparison
    sign = permutation_sign([-x for x in mu])
    if ordered[-1] + len(ordered) - 1 < 0:
        return None
    return sign, from_mu(ordered)


def mu_add_strips(mu: Sequence[int], specs: Sequence[StripSpec]) -> tuple[int, ...]:
    """Strip addition on the mu-vector: mu_r -> mu_r + t, the block
    mu_r..mu_{r_m - 1} moves one place right, mu_{r_m} drops out."""
    out = list(mu)
    for s in specs:
        r, rm = s.r, s.start_row
        out[r - 1] = mu[r - 1] + s.t
        for i in range(r + 1, rm + 1):
            out[i - 1] = mu[i - 2]
    return tuple(out)


def mu_peel(mu: Sequence[int]) -> tuple[int, ...]:
    """Complete peeling: shift left, append 1 - N.

    Zero parts must stay zero rather than drop to -1, so the general rule
    is mu_i -> max(mu_{i+1}, 1 - i), which is the plain shift whenever
    lambda_N > 0.
    """
    n = len(mu)
    shifted = list(mu[1:]) + [-n]
    return tuple(max(v, -i) for i, v in enumerate(shifted))


@dataclass
class Derivation:
    identity: Identity
    surviving: list  # (s, sign, partition of A', partition of B')
    vanished: int


def derive(lam: Sequence[int], specs: Sequence[StripSpec], n: int | None = None) -> Derivation:
    lam = Partition(lam)
    specs = [StripSpec(*s) for s in specs]
    validate_specs(lam, specs)
    if n is None:
        n = lam.height + 1
    if n < lam.height + 1:
        raise ValueError(f"N={n} must be at least height + 1 = {lam.height + 1}")
    mat_i = to_mu(lam, n)
    mat_ii = mu_peel(mu_add_strips(mat_i, specs))
    rows = [s.start_row for s in specs]
    surviving, vanished = [], 0
    for s, a_new, b_new in exchanges(mat_i, mat_ii, rows):
        left, right = normalize_rows(a_new), normalize_rows(b_new)
        if left is None or right is None:
            vanished += 1
            continue
        surviving.append((s, left[0] * right[0], left[1], right[1]))
    lhs = (Term(1, (from_mu(mat_i), from_mu(mat_ii))),)
    rhs = tuple(Term(sign, (pa, pb)) for _, sign, pa, pb in surviving)
    return Derivation(Identity(lhs, rhs), surviving, vanished)


def derive_main_identity(lam: Sequence[int], specs: Sequence[StripSpec],
                         n: int | None = None) -> Identity:
    """Main identity rebuilt from the Plücker expansion of the two
    Jacobi-Trudi determinants, exchanging rows r_i + m_i - 1 of the first."""
    return derive(lam, specs, n).identity
