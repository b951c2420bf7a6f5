"""Bilinear identities among Schur functions as first-class values.

An :class:`Identity` is an equation ``sum c s_a s_b = sum c s_a s_b``.
Terms keep the order in which the generators produce them (which is also
how they are rendered); equality and hashing go through the canonical
form, where factor pairs are ordered, terms sorted and like terms merged.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import HeightTooSmall, InvalidRange, NegativePart
from .partition import Partition, conjugate, distinct_parts, inner_corners
from .strips import (
    StripSpec,
    add_strips,
    corner_push,
    peel_complete,
    peel_down,
    peel_up,
    remove_first,
    validate_specs,
)


def _factor_key(lam: Partition):
    return (-lam.weight, tuple(lam))


@dataclass(frozen=True)
class Term:
    coeff: int
    factors: tuple  # (Partition, Partition), s_a * s_b

    def __post_init__(self):
        if self.coeff == 0:
            raise ValueError("a term needs a nonzero coefficient")
        a, b = self.factors
        object.__setattr__(self, "factors", (Partition(a), Partition(b)))

    @property
    def degree(self) -> int:
        return sum(f.weight for f in self.factors)

    def canonical_factors(self) -> tuple:
        return tuple(sorted(self.factors, key=_factor_key))


def term(a: Sequence[int], b: Sequence[int], coeff: int = 1) -> Term:
    return Term(coeff, (Partition(a), Partition(b)))


def _canonical_side(terms: Iterable[Term]) -> tuple:
    merged: dict = defaultdict(int)
    for t in terms:
        merged[t.canonical_factors()] += t.coeff
    return tuple(
        (pair, c) for pair, c in sorted(merged.items(), key=lambda kv: [tuple(f) for f in kv[0]])
        if c != 0
    )


@dataclass(frozen=True, eq=False)
class Identity:
    lhs: tuple
    rhs: tuple

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        degrees = {t.degree for t in self.lhs + self.rhs}
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous identity, term degrees {sorted(degrees)}")

    def canonical(self) -> tuple:
        return (_canonical_side(self.lhs), _canonical_side(self.rhs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Identity):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    @property
    def degree(self) -> int:
        return (self.lhs + self.rhs)[0].degree if self.lhs or self.rhs else 0

    def partitions(self) -> list[Partition]:
        return [f for t in self.lhs + self.rhs for f in t.factors]

    def map_labels(self, fn) -> "Identity":
        return Identity(
            tuple(Term(t.coeff, tuple(fn(f) for f in t.factors)) for t in self.lhs),
            tuple(Term(t.coeff, tuple(fn(f) for f in t.factors)) for t in self.rhs),
        )

    def to_dict(self) -> dict:
        def side(terms):
            return [{"coeff": t.coeff, "factors": [list(f) for f in t.factors]} for t in terms]
        return {"lhs": side(self.lhs), "rhs": side(self.rhs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Identity":
        def side(items):
            return tuple(Term(int(it["coeff"]), tuple(it["factors"])) for it in items)
        return cls(side(data["lhs"]), side(data["rhs"]))

    @classmethod
    def from_json(cls, text: str) -> "Identity":
        return cls.from_dict(json.loads(text))

    def to_latex(self) -> str:
        return f"{_latex_side(self.lhs)} = {_latex_side(self.rhs)}"

    def __str__(self) -> str:
        return self.to_latex()


def _latex_term_body(t: Term) -> str:
    labels = [f for f in t.factors if f]  # s_empty = 1 is absorbed
    return "".join("s_{" + str(f) + "}" for f in labels)


def _latex_side(terms: Sequence[Term]) -> str:
    if not terms:
        return "0"
    out = []
    for i, t in enumerate(terms):
        body = _latex_term_body(t)
        mag = abs(t.coeff)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}{body}"
        if i == 0:
            out.append(text if t.coeff > 0 else f"-{text}")
        else:
            out.append(("+ " if t.coeff > 0 else "- ") + text)
    return " ".join(out)


# --- the generators -------------------------------------------------------


def main_identity(lam: Sequence[int], specs: Sequence[StripSpec]) -> Identity:
    """s_lam s_{lam+ peeled} = s_{lam+} s_{lam peeled}
    + sum_p s_{lam+ down-peeled at r_p} s_{lam up-peeled at (r_p - 1, t_p)}."""
    lam = Partition(lam)
    specs = [StripSpec(*s) for s in specs]
    plus = add_strips(lam, specs)
    rhs = [term(plus, peel_complete(lam))]
    for s in specs:
        rhs.append(term(peel_down(plus, s.r), peel_up(lam, s.r - 1, s.t)))
    return Identity((term(lam, peel_complete(plus)),), tuple(rhs))


def conjugate_identity(identity: Identity) -> Identity:
    return identity.map_labels(conjugate)


def barred_identity(lam: Sequence[int], specs: Sequence[StripSpec], axis: str) -> Identity:
    """Main identity with the first row or first column stripped from the
    labels that carry it.

    Row: bar lam, lam+ and every lam+ down-peeling (all share part lam_1).
    Column: bar lam, lam+ and every up-peeling of lam (these are exactly the
    labels of full height n).
    """
    lam = Partition(lam)
    specs = [StripSpec(*s) for s in specs]
    validate_specs(lam, specs)

    def bar(p):
        return remove_first(p, axis)

    plus = add_strips(lam, specs)
    lhs = (term(bar(lam), peel_complete(plus)),)
    rhs = [term(bar(plus), peel_complete(lam))]
    for s in specs:
        down = peel_down(plus, s.r)
        up = peel_up(lam, s.r - 1, s.t)
        if axis == "row":
            rhs.append(term(bar(down), up))
        else:
            rhs.append(term(down, bar(up)))
    return Identity(lhs, tuple(rhs))


def square_identity(lam: Sequence[int]) -> Identity:
    """s_lam^2 as a sum over inner corners alpha of
    s_{lam^+_-(alpha)} s_{lam^-_+(alpha)}, bottom corner first."""
    lam = Partition(lam)
    corners = inner_corners(lam)
    rhs = tuple(
        term(corner_push(lam, c.index, "+-"), corner_push(lam, c.index, "-+"))
        for c in reversed(corners)
    )
    return Identity((term(lam, lam),), rhs)


def square_identity_via_nu(lam: Sequence[int]) -> Identity:
    """Same identity as :func:`square_identity`, obtained the long way.

    Prepend a row of length lam_1 + 1 to get nu, add one vertical strip
    (t = 1) at each block of equal parts, and take the row-barred main
    identity of nu.
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("square_identity_via_nu needs a non-empty partition")
    nu = Partition((lam[0] + 1,) + tuple(lam))
    specs = []
    y = 0
    for dp in distinct_parts(lam):
        specs.append(StripSpec(r=y + 2, m=dp.multiplicity, t=1))
        y += dp.multiplicity
    return barred_identity(nu, specs, "row")


def _label(parts: Sequence[int]) -> Partition:
    if any(p < 0 for p in parts):
        raise NegativePart(f"substitution produced a negative part in {tuple(parts)}")
    return Partition(parts)


def fulmek_kleber_identity(components: Sequence[int]) -> Identity:
    """For (l_1, ..., l_{n+1}), n >= 1:
    s_(l_2..l_{n+1}) s_(l_1..l_n)
      = s_(l_1+1..l_n+1) s_(l_2-1..l_{n+1}-1) + s_(l_2..l_n) s_(l_1..l_{n+1}).
    """
    comps = [int(c) for c in components]
    if len(comps) < 2:
        raise HeightTooSmall(f"need at least two components, got {tuple(comps)}")
    Partition(comps)  # weakly decreasing, non-negative
    lhs = (term(_label(comps[1:]), _label(comps[:-1])),)
    rhs = (
        term(_label([c + 1 for c in comps[:-1]]), _label([c - 1 for c in comps[1:]])),
        term(_label(comps[1:-1]), _label(comps)),
    )
    return Identity(lhs, rhs)


def fulmek_kleber_via_main(lam: Sequence[int]) -> Identity:
    """Fulmek-Kleber from the row-barred main identity of
    (lam_1 + 1, lam_2, ..., lam_{n+1}) with one strip r=2, m=n,
    t=lam_1 - lam_2 + 1."""
    lam = Partition(lam)
    if lam.height < 2:
        raise HeightTooSmall(f"need height >= 2, got {lam}")
    hat = Partition((lam[0] + 1,) + tuple(lam[1:]))
    spec = StripSpec(r=2, m=lam.height - 1, t=lam[0] - lam[1] + 1)
    return barred_identity(hat, [spec], "row")


# [r|p] brackets. Decorated forms are fixed by their definitions:
#   [r|p]^k = ((p+1)^k, p^(r-k)),  [r|p]_k = (p^r, k).
# The bare bracket is (p^r) under "power" and (r^p) under "transposed".
GPS_ORIENTATIONS = ("power", "transposed")
GPS_DEFAULT_ORIENTATION = "power"


def bracket(r: int, p: int, orientation: str = GPS_DEFAULT_ORIENTATION) -> Partition:
    if orientation == "power":
        return Partition([p] * r)
    if orientation == "transposed":
        return Partition([r] * p)
    raise ValueError(f"unknown orientation {orientation!r}")


def bracket_upper(r: int, p: int, k: int) -> Partition:
    return Partition([p + 1] * k + [p] * (r - k))


def bracket_lower(r: int, p: int, k: int) -> Partition:
    return Partition([p] * r + [k])


def gps_identity(a: int, b: int, m: int, n: int,
                 orientation: str = GPS_DEFAULT_ORIENTATION) -> Identity:
    """s_[a|b] s_[m|n] as two alternating sums of bracket products."""
    if not (1 <= a <= m and 1 <= b <= n):
        raise InvalidRange(f"need 1 <= a <= m and 1 <= b <= n, got a={a} b={b} m={m} n={n}")
    lhs = (term(bracket(a, b, orientation), bracket(m, n, orientation)),)
    rhs = []
    for k in range(max(1, a + b - n), a + 1):
        rhs.append(term(bracket_lower(m, n, a + b - k),
                        bracket_upper(a - 1, b - 1, k - 1), (-1) ** (a - k)))
    for k in range(max(1, a + b - m), b + 1):
        rhs.append(term(bracket_upper(m, n, a + b - k),
                        bracket_lower(a - 1, b - 1, k - 1), (-1) ** (b - k)))
    return Identity(lhs, tuple(rhs))

