from fractions import Fraction
from itertools import product

from hypothesis import strategies as st

from schurid.partition import Partition


@st.composite
def partitions(draw, max_weight=10, min_weight=0):
    n = draw(st.integers(min_value=min_weight, max_value=max_weight))
    parts = []
    remaining = n
    while remaining:
        cap = min(remaining, parts[-1] if parts else remaining)
        p = draw(st.integers(min_value=1, max_value=cap))
        parts.append(p)
        remaining -= p
    return Partition(parts)


def brute_force_schur(lam, point):
    """Sum of t^T over every filling of the diagram with 1..m that is a
    semistandard tableau. Deliberately naive: no pruning."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    m = len(point)
    total = Fraction(0)
    for values in product(range(1, m + 1), repeat=len(cells)):
        fill = dict(zip(cells, values))
        ok = all(
            (j == 0 or fill[(i, j - 1)] <= v) and (i == 0 or fill[(i - 1, j)] < v)
            for (i, j), v in fill.items()
        )
        if ok:
            mono = Fraction(1)
            for v in values:
                mono *= point[v - 1]
            total += mono
    return total
