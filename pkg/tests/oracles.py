"""Brute-force oracles that share no code path with the library routines they check."""

from __future__ import annotations

import cmath
from collections import Counter
from itertools import permutations, product

import numpy as np

from supersym.combinat import EMPTY, DegreeVector, Multiset, MultisetPartition


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1 :]
        yield [[first]] + smaller


def multiset_partitions_by_refinement(content: DegreeVector, n=None, super_only=False):
    """Set partitions of the labelled letters, collapsed to multiset partitions."""
    letters = [(0, i + 1) for i, a in enumerate(content.alpha) for _ in range(a)]
    letters += [(1, j + 1) for j, b in enumerate(content.beta) for _ in range(b)]
    found = set()
    for blocks in set_partitions(list(range(len(letters)))):
        try:
            parts = tuple(Multiset(tuple(letters[k] for k in b)) for b in blocks)
        except ValueError:
            continue
        pi = MultisetPartition(parts)
        if n is not None and len(pi) > n:
            continue
        if super_only and any(c > 1 and s.odd for s, c in Counter(pi.parts).items()):
            continue
        found.add(pi)
    return found


def _label_ok(shape, grid):
    """The four tableau conditions checked straight from the definition."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    for r, c in cells:
        if c > 0 and grid[r][c - 1] > grid[r][c]:
            return False
        if r > 0 and grid[r - 1][c] > grid[r][c]:
            return False
    for (r1, c1), (r2, c2) in product(cells, cells):
        if (r1, c1) == (r2, c2) or grid[r1][c1] != grid[r2][c2]:
            continue
        odd = len(grid[r1][c1].barred) % 2 == 1
        if not odd and c1 == c2:
            return False
        if odd and r1 == r2:
            return False
    return True


def naive_tableaux(shape, content: DegreeVector):
    """Assign every cell any label that fits the remaining content, keep the valid fillings."""
    labels = [EMPTY]
    for a in product(*(range(x + 1) for x in content.alpha)):
        for b in product((0, 1), repeat=len(content.beta)):
            if any(a) or any(b):
                try:
                    labels.append(Multiset.from_counts(a, [j + 1 for j, bj in enumerate(b) if bj]))
                except ValueError:
                    pass
    need = content.letters()
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = []
    grid = [[None] * length for length in shape]

    def rec(k, rem):
        if k == len(cells):
            if not +rem and _label_ok(shape, grid):
                out.append(tuple(tuple(row) for row in grid))
            return
        r, c = cells[k]
        for lab in labels:
            use = Counter(lab.letters)
            if any(rem[x] < v for x, v in use.items()):
                continue
            grid[r][c] = lab
            rec(k + 1, rem - use)
        grid[r][c] = None

    rec(0, need)
    return out


def permutation_matrix(mu):
    n = sum(mu)
    a = np.zeros((n, n))
    start = 0
    for c in mu:
        for t in range(c):
            a[start + (t + 1) % c, start + t] = 1
        start += c
    return a


def power_sum_from_eigenvalues(k, mu):
    eig = np.linalg.eigvals(permutation_matrix(mu)) if sum(mu) else np.array([])
    val = complex(np.sum(eig**k))
    rounded = round(val.real)
    assert abs(val - rounded) < 1e-9
    return rounded


def roots_of_unity_power_sum(k, mu):
    return sum(cmath.exp(2j * cmath.pi * t * k / c) for c in mu for t in range(c))


def standard_tableaux_count(shape):
    shape = list(shape)
    if sum(shape) == 0:
        return 1
    total = 0
    for i, v in enumerate(shape):
        nxt = shape[i + 1] if i + 1 < len(shape) else 0
        if v > nxt:
            smaller = shape.copy()
            smaller[i] -= 1
            total += standard_tableaux_count([x for x in smaller if x])
    return total


def cycle_type(perm):
    seen, lengths = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        j, c = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            c += 1
        lengths.append(c)
    return tuple(sorted(lengths, reverse=True))


def count_permutations_of_type(mu):
    n = sum(mu)
    return sum(1 for p in permutations(range(n)) if cycle_type(p) == tuple(mu))
