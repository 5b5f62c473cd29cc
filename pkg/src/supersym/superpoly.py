"""Exact arithmetic in C[X_{n x m}; Theta_{n x m'}] and the S_n action on it.

A monomial is a pair ``(xs, thetas)``: ``xs`` is a sorted tuple of
``(i, j, exponent)`` for ``x_{ij}``, ``thetas`` a strictly increasing tuple of
``(i, j)`` for ``theta_{ij'}``.  Grassmann variables are kept in ascending
``(i, j)`` order; reordering during a product or an action contributes the
sign of the sorting permutation.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, prod
from typing import Iterable, Mapping, Optional, Sequence

from .combinat import Multiset, MultisetPartition, check_partition, compositions, partitions, z_mu
from .symfunc import character

Mono = tuple[tuple[tuple[int, int, int], ...], tuple[tuple[int, int], ...]]
ONE: Mono = ((), ())

DEFAULT_CAP = 10**7


class DimensionError(ValueError):
    """A homogeneous component is larger than the configured cap."""


def _sort_sign(seq: Sequence) -> tuple[int, tuple]:
    # parity of inversions; 0 sign on a repeated element
    items = list(seq)
    if len(set(items)) != len(items):
        return 0, ()
    inv = sum(1 for a, b in combinations(items, 2) if a > b)
    return (-1) ** inv, tuple(sorted(items))


def mono_mul(a: Mono, b: Mono) -> tuple[int, Mono]:
    """Product of two monomials as ``(sign, monomial)``; sign 0 when a theta repeats."""
    ta, tb = a[1], b[1]
    if ta and tb:
        if set(ta) & set(tb):
            return 0, ONE
        inv = sum(len(ta) - bisect_right(ta, t) for t in tb)
        sign = -1 if inv % 2 else 1
        th = tuple(sorted(ta + tb))
    else:
        sign, th = 1, ta or tb
    if a[0] and b[0]:
        xs: dict[tuple[int, int], int] = {}
        for i, j, k in a[0] + b[0]:
            xs[i, j] = xs.get((i, j), 0) + k
        x = tuple(sorted((i, j, k) for (i, j), k in xs.items()))
    else:
        x = a[0] or b[0]
    return sign, (x, th)


def mono_act(sigma: Mapping[int, int] | Sequence[int], mono: Mono) -> tuple[int, Mono]:
    """Apply ``x_{ij} -> x_{sigma(i) j}``, ``theta_{ij} -> theta_{sigma(i) j}``.

    ``sigma`` is a mapping or a sequence with ``sigma[i - 1] = sigma(i)``.
    """
    f = sigma.__getitem__ if isinstance(sigma, Mapping) else (lambda i: sigma[i - 1])
    x = tuple(sorted((f(i), j, k) for i, j, k in mono[0]))
    sign, th = _sort_sign([(f(i), j) for i, j in mono[1]])
    return sign, (x, th)


def mono_str(mono: Mono) -> str:
    if mono == ONE:
        return "1"
    parts = [f"x_{{{i},{j}}}" + (f"^{k}" if k > 1 else "") for i, j, k in mono[0]]
    parts += [f"theta_{{{i},{j}'}}" for i, j in mono[1]]
    return "*".join(parts)


class SuperPoly:
    """Sparse polynomial with rational coefficients over ``n`` rows of variables."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Mono, object]] = None):
        self.n = n
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, n: int, mono: Mono, coeff=1) -> "SuperPoly":
        return cls(n, {mono: coeff})

    def _check(self, other: "SuperPoly"):
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: n = {self.n} vs n = {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPoly(self.n, {ONE: other})
        if not isinstance(other, SuperPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SuperPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SuperPoly(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SuperPoly(self.n, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, SuperPoly):
            return NotImplemented
        self._check(other)
        out: dict[Mono, Fraction] = defaultdict(Fraction)
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                sign, mono = mono_mul(ka, kb)
                if sign:
                    out[mono] += sign * va * vb
        return SuperPoly(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = SuperPoly(self.n, {ONE: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPoly(self.n, {ONE: other})
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, mono: Mono) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def act(self, sigma) -> "SuperPoly":
        out: dict[Mono, Fraction] = defaultdict(Fraction)
        for k, v in self.terms.items():
            sign, mono = mono_act(sigma, k)
            out[mono] += sign * v
        return SuperPoly(self.n, out)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for k in sorted(self.terms):
            c = self.terms[k]
            pieces.append(f"{c}*{mono_str(k)}" if c != 1 else mono_str(k))
        return " + ".join(pieces)

    __repr__ = __str__


def x(n: int, i: int, j: int) -> SuperPoly:
    return SuperPoly.monomial(n, (((i, j, 1),), ()))


def theta(n: int, i: int, j: int) -> SuperPoly:
    return SuperPoly.monomial(n, ((), ((i, j),)))


def multiply(p: SuperPoly, q: SuperPoly) -> SuperPoly:
    return p * q


def act(sigma, p: SuperPoly) -> SuperPoly:
    return p.act(sigma)


def cycle_permutation(mu: Sequence[int]) -> tuple[int, ...]:
    """A permutation of cycle type ``mu`` whose cycles are consecutive blocks."""
    sigma = []
    start = 1
    for c in mu:
        sigma.extend(start + (t + 1) % c for t in range(c))
        start += c
    return tuple(sigma)


def component_size(n: int, alpha: Sequence[int], beta: Sequence[int]) -> int:
    return prod(comb(a + n - 1, n - 1) for a in alpha) * prod(comb(n, b) for b in beta)


def component_basis(
    n: int, m: int, mb: int, alpha: Sequence[int], beta: Sequence[int], cap: int = DEFAULT_CAP
) -> list[Mono]:
    """Normal-form monomials of degree ``alpha`` in the x's and ``beta`` in the thetas."""
    if len(alpha) != m or len(beta) != mb:
        raise ValueError("alpha must have length m and beta length m'")
    size = component_size(n, alpha, beta)
    if size > cap:
        raise DimensionError(f"component has {size} monomials, above the cap of {cap}")
    x_choices = [list(compositions(a, n)) for a in alpha]
    t_choices = [list(combinations(range(1, n + 1), b)) for b in beta]
    out = []
    for xs in product(*x_choices):
        xpart = tuple(sorted((i + 1, j + 1, k) for j, comp in enumerate(xs) for i, k in enumerate(comp) if k))
        for ts in product(*t_choices):
            tpart = tuple(sorted((i, j + 1) for j, rows in enumerate(ts) for i in rows))
            out.append((xpart, tpart))
    return out


@lru_cache(maxsize=None)
def _trace(n: int, alpha: tuple, beta: tuple, mu: tuple, cap: int) -> int:
    sigma = cycle_permutation(mu)
    total = 0
    for mono in component_basis(n, len(alpha), len(beta), alpha, beta, cap):
        sign, image = mono_act(sigma, mono)
        if image == mono:
            total += sign
    return total


def trace_character(
    n: int, m: int, mb: int, alpha: Sequence[int], beta: Sequence[int], mu: Sequence[int], cap: int = DEFAULT_CAP
) -> int:
    """Trace of a permutation of cycle type ``mu`` on the degree ``(alpha, beta)`` component."""
    mu = check_partition(mu)
    if sum(mu) != n:
        raise ValueError("mu must be a partition of n")
    if len(alpha) != m or len(beta) != mb:
        raise ValueError("alpha must have length m and beta length m'")
    return _trace(n, tuple(alpha), tuple(beta), mu, cap)


def brute_multiplicity(n: int, lam: Sequence[int], alpha: Sequence[int], beta: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    """Multiplicity of ``lam`` in the component, from the trace character by orthogonality."""
    lam = check_partition(lam)
    if sum(lam) != n:
        raise ValueError("lambda must be a partition of n")
    total = Fraction(0)
    for mu in partitions(n):
        chi = character(lam, mu)
        if chi:
            total += Fraction(chi * trace_character(n, len(alpha), len(beta), alpha, beta, mu, cap), z_mu(mu))
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"character inner product {total} is not a multiplicity")
    return int(total)


def part_monomial(part: Multiset, row: int) -> Mono:
    """``x_{r1}^{a1} ... x_{rm}^{am} theta_{r s1} ... theta_{r sk}`` for ``r = row``."""
    counts = part.unbarred_counts()
    xs = tuple((row, j + 1, a) for j, a in enumerate(counts) if a)
    return xs, tuple((row, s) for s in part.barred)


def power_sum(S: Multiset, n: int) -> SuperPoly:
    """``p_S = sum_r x_{r1}^{a1} ... theta_{r s1} ... theta_{r sk}``."""
    return SuperPoly(n, {part_monomial(S, r): 1 for r in range(1, n + 1)})


def power_prod(pi: MultisetPartition | Sequence[Multiset], n: int) -> SuperPoly:
    """Ordered product of ``p_S`` over the parts (canonical order for a ``MultisetPartition``)."""
    out = SuperPoly(n, {ONE: 1})
    for part in pi:
        out = out * power_sum(part, n)
    return out


def leading_monomial(pi: MultisetPartition) -> tuple[int, Mono]:
    """``(X; Theta)^pi``: part ``i`` placed in row ``i``, as ``(sign, normal form)``."""
    sign, mono = 1, ONE
    for row, part in enumerate(pi.parts, 1):
        s, mono = mono_mul(mono, part_monomial(part, row))
        sign *= s
    return sign, mono


def monomial_sym(pi: MultisetPartition, n: int) -> SuperPoly:
    """``m_pi``: the sum of the distinct elements of the S_n orbit of ``(X; Theta)^pi``.

    Summing over all placements of the parts into distinct rows counts each
    orbit element once per stabilizer element; dividing by the stabilizer
    size leaves each distinct element once.  An odd stabilizer element makes
    the signed sum vanish, which is how repeated odd parts give zero.
    """
    length = len(pi)
    if length > n:
        return SuperPoly(n)
    sign0, base = leading_monomial(pi)
    total: dict[Mono, Fraction] = defaultdict(Fraction)
    stab = 0
    for rows in permutations(range(1, n + 1), length):
        f = {i + 1: r for i, r in enumerate(rows)}
        sign, image = mono_act(f, base)
        total[image] += sign * sign0
        if image == base:
            stab += 1
    return SuperPoly(n, {k: v / stab for k, v in total.items()})


def transposition_and_cycle(n: int) -> list[tuple[int, ...]]:
    """Generators ``(1 2)`` and ``(1 2 ... n)`` of S_n."""
    if n < 2:
        return []
    swap = (2, 1) + tuple(range(3, n + 1))
    cycle = tuple(range(2, n + 1)) + (1,)
    return [swap, cycle]


def is_invariant(p: SuperPoly) -> bool:
    return all(p.act(g) == p for g in transposition_and_cycle(p.n))


def symmetrize(p: SuperPoly) -> SuperPoly:
    """Reynolds operator: average of ``sigma p`` over S_n."""
    total = SuperPoly(p.n)
    count = 0
    for sigma in permutations(range(1, p.n + 1)):
        total = total + p.act(sigma)
        count += 1
    return total * Fraction(1, count)


def as_vector(p: SuperPoly) -> dict[Mono, Fraction]:
    return dict(p.terms)


def monomials_of(polys: Iterable[SuperPoly]) -> list[Mono]:
    return sorted({k for q in polys for k in q.terms})
