"""Multiset tableaux: validation, enumeration and counting.

Cells are addressed ``(row, column)``, 1-indexed, in French notation: row 1
is the bottom (longest) row.  Blank cells hold the empty multiset.

A tableau is the same thing as a chain of shapes, one per distinct label
taken in increasing order, where each step adds a horizontal strip (label
with an even number of barred letters, blanks included) or a vertical strip
(odd number).  Enumeration and counting walk those chains.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .combinat import (
    EMPTY,
    DegreeVector,
    Multiset,
    MultisetPartition,
    Partition,
    check_partition,
    enumerate_multiset_partitions,
)
from .symfunc import horizontal_strips, vertical_strips

Cell = tuple[int, int]


@dataclass(frozen=True)
class MultisetTableau:
    shape: Partition
    rows: tuple[tuple[Multiset, ...], ...]  # rows[0] is the bottom row

    def __post_init__(self):
        shape = check_partition(self.shape)
        rows = tuple(tuple(r) for r in self.rows)
        if tuple(len(r) for r in rows) != shape:
            raise ValueError(f"row lengths {[len(r) for r in rows]} do not match shape {shape}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Multiset]]) -> "MultisetTableau":
        rows = tuple(tuple(r) for r in rows)
        return cls(tuple(len(r) for r in rows), rows)

    @classmethod
    def parse(cls, rows: Sequence[Sequence[str]]) -> "MultisetTableau":
        """Rows bottom to top, each cell in multiset syntax (``{}`` for blank)."""
        return cls.from_rows([[Multiset.parse(c) for c in r] for r in rows])

    def __getitem__(self, cell: Cell) -> Multiset:
        r, c = cell
        return self.rows[r - 1][c - 1]

    def cells(self) -> Iterator[Cell]:
        for r, length in enumerate(self.shape, 1):
            for c in range(1, length + 1):
                yield (r, c)

    def content(self) -> DegreeVector:
        return MultisetPartition(tuple(x for row in self.rows for x in row if len(x))).content()

    def labels(self) -> MultisetPartition:
        """The non-blank labels as a multiset partition."""
        return MultisetPartition(tuple(x for row in self.rows for x in row if len(x)))

    def render(self) -> str:
        """One line per row, top row first, in the layout of a French Young diagram."""
        width = max([1] + [len(x.compact()) for row in self.rows for x in row])
        lines = ["|" + "|".join(x.compact().ljust(width) for x in row) + "|" for row in self.rows]
        return "\n".join(reversed(lines))

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [[str(x) for x in row] for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "MultisetTableau":
        t = cls.parse(data["rows"])
        if list(t.shape) != list(data["shape"]):
            raise ValueError("shape field disagrees with rows")
        return t


@dataclass(frozen=True)
class Violation:
    condition: int
    cells: tuple[Cell, ...]
    message: str

    def __str__(self):
        return f"condition {self.condition} violated at {list(self.cells)}: {self.message}"


def validate(t: MultisetTableau) -> Optional[Violation]:
    """``None`` if ``t`` is a multiset tableau, else the first violated condition."""
    for cell in t.cells():
        if not isinstance(t[cell], Multiset):
            return Violation(1, (cell,), "label is not a multiset")
    for r, c in t.cells():
        here = t[r, c]
        if c > 1 and t[r, c - 1] > here:
            return Violation(2, ((r, c - 1), (r, c)), "row not weakly increasing")
        if r > 1 and t[r - 1, c] > here:
            return Violation(2, ((r - 1, c), (r, c)), "column not weakly increasing")
    seen: dict[tuple[Multiset, int], Cell] = {}
    for r, c in t.cells():
        x = t[r, c]
        if x.odd:
            continue
        if (x, c) in seen:
            return Violation(3, (seen[x, c], (r, c)), f"even label {x} repeated in a column")
        seen[x, c] = (r, c)
    seen = {}
    for r, c in t.cells():
        x = t[r, c]
        if not x.odd:
            continue
        if (x, r) in seen:
            return Violation(4, (seen[x, r], (r, c)), f"odd label {x} repeated in a row")
        seen[x, r] = (r, c)
    return None


def is_valid(t: MultisetTableau) -> bool:
    return validate(t) is None


def _label_steps(pi: MultisetPartition, n: int) -> Optional[list[tuple[Multiset, int]]]:
    blanks = n - len(pi)
    if blanks < 0:
        return None
    return [(EMPTY, blanks)] + pi.multiplicities()


def _strips(inner: Partition, label: Multiset, size: int, outer: Partition) -> list[Partition]:
    if label.odd:
        return vertical_strips(inner, size, outer)
    return sorted(horizontal_strips(inner, size, outer), reverse=True)


def count_with_entry_multiset(shape: Sequence[int], pi: MultisetPartition, n: Optional[int] = None) -> int:
    """Number of tableaux of ``shape`` whose non-blank labels are exactly the parts of ``pi``.

    This is the coefficient of ``s_shape`` in ``h_{n - l(pi)} h_{m_e} e_{m_o}``,
    computed by iterating the Pieri rule inside ``shape``.
    """
    shape = check_partition(shape)
    n = sum(shape) if n is None else n
    if n != sum(shape):
        raise ValueError("shape must be a partition of n")
    steps = _label_steps(pi, n)
    if steps is None:
        return 0
    layer: dict[Partition, int] = {(): 1}
    for label, mult in steps:
        nxt: dict[Partition, int] = defaultdict(int)
        for inner, k in layer.items():
            for mu in _strips(inner, label, mult, shape):
                nxt[mu] += k
        layer = nxt
    return layer.get(shape, 0)


def tableaux_with_entries(shape: Sequence[int], pi: MultisetPartition) -> list[MultisetTableau]:
    """All tableaux of ``shape`` whose non-blank labels are the parts of ``pi``."""
    shape = check_partition(shape)
    steps = _label_steps(pi, sum(shape))
    if steps is None:
        return []
    out: list[MultisetTableau] = []

    def rec(i: int, inner: Partition, grid: list[list[Multiset]]):
        if i == len(steps):
            if inner == shape:
                out.append(MultisetTableau(shape, tuple(tuple(row) for row in grid)))
            return
        label, mult = steps[i]
        for mu in _strips(inner, label, mult, shape):
            added = []
            for r, length in enumerate(mu):
                start = inner[r] if r < len(inner) else 0
                for c in range(start, length):
                    grid[r][c] = label
                    added.append((r, c))
            rec(i + 1, mu, grid)
            for r, c in added:
                grid[r][c] = None

    rec(0, (), [[None] * length for length in shape])
    return out


def enumerate_tableaux(shape: Sequence[int], content: DegreeVector) -> list[MultisetTableau]:
    """All multiset tableaux of ``shape`` and content ``content``.

    Ordered by the label multiset partition (lexicographically) and then by
    the chain of strip insertions.
    """
    shape = check_partition(shape)
    out: list[MultisetTableau] = []
    for pi in enumerate_multiset_partitions(content, n=sum(shape)):
        out.extend(tableaux_with_entries(shape, pi))
    return out


def multiplicity(lam: Sequence[int], alpha: Sequence[int], beta: Sequence[int], n: Optional[int] = None) -> int:
    """Number of multiset tableaux of shape ``lam`` and content ``{1^alpha, 1'^beta}``."""
    lam = check_partition(lam)
    n = sum(lam) if n is None else n
    if n != sum(lam):
        raise ValueError("lambda must be a partition of n")
    content = DegreeVector(tuple(alpha), tuple(beta))
    return sum(count_with_entry_multiset(lam, pi, n) for pi in enumerate_multiset_partitions(content, n=n))
