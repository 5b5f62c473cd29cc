"""Row-constant fillings of a partition diagram and their signed counts.

Every row of ``mu`` carries a single label (possibly empty) repeated in all of
its cells.  These fillings compute the character values ``h_alpha[Xi_mu]``
and ``e_beta[Xi_mu]`` combinatorially, and grouping mixed fillings by the
multiset of their labels recovers the ``h``/``e`` products whose Schur
expansions count multiset tableaux.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .combinat import EMPTY, Multiset, MultisetPartition, Partition, check_partition


@dataclass(frozen=True)
class RowFilling:
    mu: Partition
    row_labels: tuple[Multiset, ...]  # row_labels[r] fills every cell of row r + 1

    def __post_init__(self):
        if len(self.row_labels) != len(self.mu):
            raise ValueError("one label per row is required")

    def msp(self) -> MultisetPartition:
        """The multiset of non-empty cell labels."""
        return MultisetPartition(tuple(x for size, x in zip(self.mu, self.row_labels) if len(x) for _ in range(size)))

    def weight(self) -> int:
        """``(-1)**(cells with odd labels + rows with odd labels)``."""
        odd_rows = [size for size, x in zip(self.mu, self.row_labels) if x.odd]
        return (-1) ** (sum(odd_rows) + len(odd_rows))

    def render(self) -> str:
        width = max([1] + [len(x.compact()) for x in self.row_labels])
        lines = ["|" + "|".join([x.compact().ljust(width)] * size) + "|" for size, x in zip(self.mu, self.row_labels)]
        return "\n".join(reversed(lines))


def _unbarred_choices(alpha: tuple[int, ...], mu: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    # per-row multiplicity vectors v_r with sum_r mu_r v_r == alpha
    def rec(r: int, rem: tuple[int, ...]):
        if r == len(mu):
            if not any(rem):
                yield ()
            return
        size = mu[r]
        for v in product(*(range(x // size + 1) for x in rem)):
            nxt = tuple(x - size * y for x, y in zip(rem, v))
            for tail in rec(r + 1, nxt):
                yield (v,) + tail

    yield from rec(0, alpha)


def _barred_choices(beta: tuple[int, ...], mu: Partition) -> Iterator[tuple[frozenset, ...]]:
    # per-row subsets of barred letters; letter j must cover exactly beta_j cells
    def rec(r: int, rem: tuple[int, ...]):
        if r == len(mu):
            if not any(rem):
                yield ()
            return
        size = mu[r]
        avail = [j for j, x in enumerate(rem) if x >= size]
        for k in range(len(avail) + 1):
            for chosen in combinations(avail, k):
                nxt = tuple(x - size if j in chosen else x for j, x in enumerate(rem))
                for tail in rec(r + 1, nxt):
                    yield (frozenset(j + 1 for j in chosen),) + tail

    yield from rec(0, beta)


def unbarred_fillings(alpha: Sequence[int], mu: Sequence[int]) -> Iterator[RowFilling]:
    mu = check_partition(mu)
    for rows in _unbarred_choices(tuple(alpha), mu):
        yield RowFilling(mu, tuple(Multiset.from_counts(v) for v in rows))


def barred_fillings(beta: Sequence[int], mu: Sequence[int]) -> Iterator[RowFilling]:
    mu = check_partition(mu)
    for rows in _barred_choices(tuple(beta), mu):
        yield RowFilling(mu, tuple(Multiset.from_counts((), sorted(b)) for b in rows))


def count_T(alpha: Sequence[int], mu: Sequence[int]) -> int:
    """Number of row-constant fillings of ``mu`` with content ``{1^a1, 2^a2, ...}``; equals ``h_alpha[Xi_mu]``."""
    return sum(1 for _ in _unbarred_choices(tuple(alpha), check_partition(mu)))


def signed_sum_Tbar(beta: Sequence[int], mu: Sequence[int]) -> int:
    """Signed count of row-constant subset fillings with content ``{1'^b1, ...}``; equals ``e_beta[Xi_mu]``."""
    return sum(f.weight() for f in barred_fillings(beta, mu))


def mixed_fillings(alpha: Sequence[int], beta: Sequence[int], mu: Sequence[int]) -> Iterator[RowFilling]:
    """Row-wise unions of an unbarred and a barred filling."""
    mu = check_partition(mu)
    barred = list(_barred_choices(tuple(beta), mu))
    for rows_a in _unbarred_choices(tuple(alpha), mu):
        for rows_b in barred:
            yield RowFilling(mu, tuple(Multiset.from_counts(v, sorted(b)) for v, b in zip(rows_a, rows_b)))


def mixed_fillings_by_msp(alpha: Sequence[int], beta: Sequence[int], mu: Sequence[int]) -> dict[MultisetPartition, int]:
    """Signed counts of mixed fillings grouped by their label multiset partition.

    Zero groups are dropped.  The values sum to ``h_alpha[Xi_mu] e_beta[Xi_mu]``.
    """
    out: dict[MultisetPartition, int] = defaultdict(int)
    for f in mixed_fillings(alpha, beta, mu):
        out[f.msp()] += f.weight()
    return {k: v for k, v in sorted(out.items()) if v}


def evalhet_fillings(lam: Sequence[int], tau: Sequence[int], mu: Sequence[int]) -> Iterator[tuple[tuple[int, ...], int]]:
    """Row-constant fillings of ``mu`` with ``lam_i`` cells labelled ``i`` and ``tau_j`` labelled ``j'``.

    Yields ``(row_labels, weight)``; a row label is 0 (empty), ``+i`` or ``-j``
    for the primed label ``j'``.
    """
    mu = check_partition(mu)
    need = {i + 1: x for i, x in enumerate(lam) if x}
    need.update({-(j + 1): x for j, x in enumerate(tau) if x})

    def rec(r: int, rem: dict[int, int], labels: tuple[int, ...]):
        if r == len(mu):
            if not any(rem.values()):
                primed = [mu[k] for k, lab in enumerate(labels) if lab < 0]
                yield labels, (-1) ** (sum(primed) + len(primed))
            return
        size = mu[r]
        yield from rec(r + 1, rem, labels + (0,))
        for lab, left in rem.items():
            if left >= size:
                rem[lab] -= size
                yield from rec(r + 1, rem, labels + (lab,))
                rem[lab] += size

    yield from rec(0, dict(need), ())


def evalhet_sum(lam: Sequence[int], tau: Sequence[int], mu: Sequence[int]) -> int:
    """``sum wt(F)`` over row-constant fillings; equals ``< h_{|mu|-|lam|-|tau|} h_lam e_tau, p_mu >``."""
    if sum(lam) + sum(tau) > sum(mu):
        raise ValueError("|lam| + |tau| exceeds |mu|")
    return sum(w for _, w in evalhet_fillings(lam, tau, mu))


def filling_from_rows(mu: Sequence[int], labels: Sequence[Multiset]) -> RowFilling:
    mu = check_partition(mu)
    labels = tuple(labels) + (EMPTY,) * (len(mu) - len(labels))
    return RowFilling(mu, labels)
