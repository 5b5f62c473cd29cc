"""Partitions, multisets over the barred/unbarred alphabet, and multiset partitions.

Letters are encoded as pairs ``(0, i)`` for the unbarred letter ``i`` and
``(1, j)`` for the barred letter ``j'``, so the natural tuple order gives
``1 < 2 < ... < m < 1' < 2' < ... < m'``.  A multiset stores its letters
sorted, and multisets compare lexicographically on that reading word, with
the empty multiset smallest.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cache
from itertools import groupby, product
from math import factorial, prod
from typing import Iterable, Iterator, Optional, Sequence

Partition = tuple[int, ...]
Letter = tuple[int, int]

UNBARRED, BARRED = 0, 1


def check_partition(parts: Sequence[int]) -> Partition:
    """Return ``parts`` as a partition tuple, raising ``ValueError`` if it is not one."""
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def as_partition(parts: Iterable[int]) -> Partition:
    """Sort a sequence of non-negative integers into a partition, dropping zeros."""
    return tuple(sorted((int(p) for p in parts if p), reverse=True))


def partitions(k: int, max_length: Optional[int] = None) -> list[Partition]:
    """All partitions of ``k`` in reverse lexicographic order.

    >>> partitions(3)
    [(3,), (2, 1), (1, 1, 1)]
    >>> partitions(5, max_length=2)
    [(5,), (4, 1), (3, 2)]
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    cap = k if max_length is None else max_length
    return list(_partitions(k, k, cap))


enumerate_partitions = partitions


def _partitions(k: int, largest: int, cap: int) -> Iterator[Partition]:
    if k == 0:
        yield ()
        return
    if cap == 0:
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first, cap - 1):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def z_mu(mu: Sequence[int]) -> int:
    """``prod_i m_i(mu)! * i**m_i(mu)``, the centralizer order of cycle type ``mu``."""
    return prod(factorial(c) * i**c for i, c in Counter(mu).items())


@dataclass(frozen=True, order=True)
class Multiset:
    """A multiset of letters in which a barred letter occurs at most once."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(sorted((int(b), int(v)) for b, v in self.letters))
        for b, v in letters:
            if b not in (UNBARRED, BARRED) or v < 1:
                raise ValueError(f"bad letter {(b, v)}")
        barred = [v for b, v in letters if b == BARRED]
        if len(barred) != len(set(barred)):
            raise ValueError("a barred letter may occur at most once in a multiset")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_counts(cls, unbarred: Sequence[int] = (), barred: Iterable[int] = ()) -> "Multiset":
        """Build from a multiplicity vector ``(a_1, ..., a_m)`` and a set of barred letters."""
        letters = [(UNBARRED, i + 1) for i, a in enumerate(unbarred) for _ in range(a)]
        letters += [(BARRED, j) for j in barred]
        return cls(tuple(letters))

    @classmethod
    def parse(cls, text: str) -> "Multiset":
        """Parse ``{1,1,2'}``; a trailing apostrophe marks a barred letter."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        letters = []
        for tok in filter(None, (t.strip() for t in body.split(","))):
            if tok.endswith("'"):
                letters.append((BARRED, int(tok[:-1])))
            else:
                letters.append((UNBARRED, int(tok)))
        return cls(tuple(letters))

    @property
    def size(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def barred(self) -> tuple[int, ...]:
        return tuple(v for b, v in self.letters if b == BARRED)

    @property
    def unbarred(self) -> tuple[int, ...]:
        """Unbarred letters with repetition, ascending."""
        return tuple(v for b, v in self.letters if b == UNBARRED)

    def unbarred_counts(self, m: Optional[int] = None) -> tuple[int, ...]:
        c = Counter(self.unbarred)
        m = max(c, default=0) if m is None else m
        return tuple(c[i] for i in range(1, m + 1))

    @property
    def odd(self) -> bool:
        """True when the number of barred letters is odd."""
        return len(self.barred) % 2 == 1

    @property
    def parity(self) -> int:
        return len(self.barred) % 2

    def __str__(self) -> str:
        return "{" + ",".join(_letter_str(x) for x in self.letters) + "}"

    def __repr__(self) -> str:
        return f"Multiset({self})"

    def compact(self) -> str:
        """Short label used when drawing tableaux: ``11'2'``."""
        sep = "," if any(v > 9 for _, v in self.letters) else ""
        return sep.join(_letter_str(x) for x in self.letters)


def _letter_str(letter: Letter) -> str:
    b, v = letter
    return f"{v}'" if b == BARRED else str(v)


EMPTY = Multiset()


def compare_multisets(a: Multiset, b: Multiset) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    return (a > b) - (a < b)


@dataclass(frozen=True)
class DegreeVector:
    """Target content ``{1^a1, ..., m^am, 1'^b1, ..., m'^bm'}``.

    Unlike a single part, the content may repeat barred letters.
    """

    alpha: tuple[int, ...] = ()
    beta: tuple[int, ...] = ()

    def __post_init__(self):
        alpha = tuple(int(a) for a in self.alpha)
        beta = tuple(int(b) for b in self.beta)
        if any(a < 0 for a in alpha + beta):
            raise ValueError("degrees must be non-negative")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def size(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    @property
    def m(self) -> int:
        return len(self.alpha)

    @property
    def mb(self) -> int:
        return len(self.beta)

    def letters(self) -> Counter:
        c: Counter = Counter()
        for i, a in enumerate(self.alpha):
            if a:
                c[(UNBARRED, i + 1)] = a
        for j, b in enumerate(self.beta):
            if b:
                c[(BARRED, j + 1)] = b
        return c


@dataclass(frozen=True)
class MultisetPartition:
    """A multiset of non-empty multisets, stored sorted so equality is structural."""

    parts: tuple[Multiset, ...] = ()

    def __post_init__(self):
        parts = tuple(sorted(self.parts))
        if any(len(p) == 0 for p in parts):
            raise ValueError("parts of a multiset partition are non-empty")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "MultisetPartition":
        """Parse ``{{1,1},{2'}}`` (the outer braces are optional)."""
        return cls(tuple(Multiset.parse(g) for g in re.findall(r"\{[^{}]*\}", text)))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __lt__(self, other: "MultisetPartition") -> bool:
        return self.parts < other.parts

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> list[tuple[Multiset, int]]:
        """Distinct parts in ascending order with their multiplicities."""
        return [(k, len(list(g))) for k, g in groupby(self.parts)]

    @property
    def is_super(self) -> bool:
        """No part with an odd number of barred letters is repeated."""
        return all(c == 1 for s, c in self.multiplicities() if s.odd)

    def content(self, m: Optional[int] = None, mb: Optional[int] = None) -> DegreeVector:
        c = Counter(x for p in self.parts for x in p.letters)
        if m is None:
            m = max((v for b, v in c if b == UNBARRED), default=0)
        if mb is None:
            mb = max((v for b, v in c if b == BARRED), default=0)
        return DegreeVector(
            tuple(c[(UNBARRED, i)] for i in range(1, m + 1)),
            tuple(c[(BARRED, j)] for j in range(1, mb + 1)),
        )

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.parts) + "}"

    def __repr__(self) -> str:
        return f"MultisetPartition({self})"


def sub_multisets(content: DegreeVector) -> list[Multiset]:
    """All non-empty valid multisets contained in ``content``, ascending."""
    return list(_sub_multisets(content.alpha, content.beta))


@cache
def _sub_multisets(alpha: tuple[int, ...], beta: tuple[int, ...]) -> tuple[Multiset, ...]:
    out = []
    for a in product(*(range(x + 1) for x in alpha)):
        for b in product(*(range(min(1, y) + 1) for y in beta)):
            if any(a) or any(b):
                out.append(Multiset.from_counts(a, [j + 1 for j, bj in enumerate(b) if bj]))
    return tuple(sorted(out))


def enumerate_multiset_partitions(
    content: DegreeVector, n: Optional[int] = None, super_only: bool = False
) -> list[MultisetPartition]:
    """Multiset partitions of ``content`` with at most ``n`` parts.

    Parts never repeat a barred letter.  With ``super_only`` a part with an
    odd number of barred letters may not be repeated either.  Output is in
    lexicographic order of the sorted part sequences.
    """
    cap = content.size if n is None else n
    candidates = sub_multisets(content)
    need = content.letters()
    out: list[MultisetPartition] = []

    def fits(part: Multiset, rem: Counter) -> bool:
        c = Counter(part.letters)
        return all(rem[x] >= k for x, k in c.items())

    def rec(start: int, rem: Counter, left: int, chosen: list[Multiset]):
        if not +rem:
            out.append(MultisetPartition(tuple(chosen)))
            return
        if left == 0:
            return
        for idx in range(start, len(candidates)):
            part = candidates[idx]
            if not fits(part, rem):
                continue
            if super_only and part.odd and chosen and chosen[-1] == part:
                continue
            rem2 = rem - Counter(part.letters)
            chosen.append(part)
            rec(idx, rem2, left - 1, chosen)
            chosen.pop()

    if content.size == 0:
        return [MultisetPartition()]
    rec(0, need, cap, [])
    return out


def m_tilde(pi: MultisetPartition) -> tuple[Partition, Partition]:
    """Multiplicity partitions of the even-parity and odd-parity parts of ``pi``."""
    mults = pi.multiplicities()
    even = as_partition(c for s, c in mults if not s.odd)
    odd = as_partition(c for s, c in mults if s.odd)
    return even, odd


def all_multisets(m: int, mb: int, max_size: int, min_size: int = 1) -> list[Multiset]:
    """Every valid multiset over ``[m]`` and ``[m']`` of size in ``[min_size, max_size]``."""
    out = []
    for b in product((0, 1), repeat=mb):
        k = sum(b)
        for a in product(range(max_size + 1), repeat=m):
            size = sum(a) + k
            if min_size <= size <= max_size:
                out.append(Multiset.from_counts(a, [j + 1 for j, bj in enumerate(b) if bj]))
    return sorted(out)


def compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``length`` parts."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


def degree_vectors(m: int, mb: int, max_total: int) -> Iterator[DegreeVector]:
    """All ``(alpha, beta)`` with ``len(alpha) == m``, ``len(beta) == mb`` and total at most ``max_total``."""
    for total in range(max_total + 1):
        for c in compositions(total, m + mb):
            yield DegreeVector(c[:m], c[m:])
