"""Exact rank of sparse rational vectors."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping


def rank(vectors: Iterable[Mapping[Hashable, object]]) -> int:
    """Rank over Q of vectors given as ``{coordinate: value}`` dicts.

    Gaussian elimination keyed on each pivot's coordinate; only non-zero
    entries are stored.
    """
    pivots: dict[Hashable, dict[Hashable, Fraction]] = {}
    order: dict[Hashable, int] = {}
    for vec in vectors:
        row = {k: Fraction(v) for k, v in vec.items() if v}
        while row:
            for k in row:
                order.setdefault(k, len(order))
            lead = min(row, key=order.__getitem__)
            piv = pivots.get(lead)
            if piv is None:
                c = row[lead]
                pivots[lead] = {k: v / c for k, v in row.items()}
                break
            c = row[lead]
            for k, v in piv.items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)
