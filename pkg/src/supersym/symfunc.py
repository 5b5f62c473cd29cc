"""Exact symmetric functions in the p, h, e and s bases.

An expression lives in a single basis; conversions are explicit.  All
coefficients are ``fractions.Fraction``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping, Optional, Sequence

from .combinat import Partition, as_partition, check_partition, conjugate, partitions, z_mu

BASES = ("p", "h", "e", "s")


class SymFunc:
    """A finite linear combination of ``b_lambda`` for one basis ``b``."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Optional[Mapping[Partition, object]] = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean: dict[Partition, Fraction] = {}
        for idx, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = check_partition(idx)
                clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = {k: v for k, v in clean.items() if v}

    # construction

    @classmethod
    def basis_element(cls, basis: str, parts: Iterable[int]) -> "SymFunc":
        """``b_parts`` with the conventions ``b_0 = 1`` and ``b_{-r} = 0``."""
        parts = list(parts)
        if any(p < 0 for p in parts):
            return cls(basis)
        return cls(basis, {as_partition(parts): 1})

    @classmethod
    def one(cls, basis: str = "p") -> "SymFunc":
        return cls(basis, {(): 1})

    # arithmetic

    def _same(self, other: "SymFunc"):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            raise ValueError(f"mixed bases {self.basis} and {other.basis}; convert explicitly")

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(self.basis, out)

    def __neg__(self):
        return SymFunc(self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.basis, {k: v * other for k, v in self.terms.items()})
        if self._same(other) is NotImplemented:
            return NotImplemented
        if self.basis == "s":
            return p_to_schur(to_p(self) * to_p(other))
        out: dict[Partition, Fraction] = defaultdict(Fraction)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[as_partition(k1 + k2)] += v1 * v2
        return SymFunc(self.basis, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, idx: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(idx), Fraction(0))

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for k in sorted(self.terms, key=lambda k: (sum(k), tuple(-x for x in k))):
            pieces.append(f"{self.terms[k]}*{self.basis}{list(k)}")
        return " + ".join(pieces)

    # serialization

    def to_json(self) -> list[dict]:
        return [
            {"basis": self.basis, "index": list(k), "numerator": v.numerator, "denominator": v.denominator}
            for k, v in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "SymFunc":
        bases = {d["basis"] for d in data}
        if len(bases) > 1:
            raise ValueError("serialized expression mixes bases")
        basis = bases.pop() if bases else "p"
        return cls(basis, {tuple(d["index"]): Fraction(d["numerator"], d["denominator"]) for d in data})


def p(*parts: int) -> SymFunc:
    return SymFunc.basis_element("p", parts)


def h(*parts: int) -> SymFunc:
    return SymFunc.basis_element("h", parts)


def e(*parts: int) -> SymFunc:
    return SymFunc.basis_element("e", parts)


def s(*parts: int) -> SymFunc:
    parts = tuple(x for x in parts if x)
    return SymFunc("s", {check_partition(parts): 1})


# Newton identities

@cache
def _h_in_p(k: int) -> dict[Partition, Fraction]:
    # k h_k = sum_{r=1}^k p_r h_{k-r}
    if k == 0:
        return {(): Fraction(1)}
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for r in range(1, k + 1):
        for idx, c in _h_in_p(k - r).items():
            out[as_partition(idx + (r,))] += c / k
    return dict(out)


@cache
def _e_in_p(k: int) -> dict[Partition, Fraction]:
    # k e_k = sum_{r=1}^k (-1)^(r-1) p_r e_{k-r}
    if k == 0:
        return {(): Fraction(1)}
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for r in range(1, k + 1):
        sign = 1 if r % 2 else -1
        for idx, c in _e_in_p(k - r).items():
            out[as_partition(idx + (r,))] += sign * c / k
    return dict(out)


def _mul_p(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction], max_degree: Optional[int] = None):
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for k1, v1 in a.items():
        d1 = sum(k1)
        for k2, v2 in b.items():
            if max_degree is not None and d1 + sum(k2) > max_degree:
                continue
            out[as_partition(k1 + k2)] += v1 * v2
    return {k: v for k, v in out.items() if v}


def newton_convert(expr: SymFunc, target: str = "p") -> SymFunc:
    """Rewrite an ``h`` or ``e`` expression in the power-sum basis."""
    if target != "p":
        raise ValueError("only conversion to the p basis is supported")
    if expr.basis not in ("h", "e"):
        raise ValueError("newton_convert expects an h or e expression")
    gen = _h_in_p if expr.basis == "h" else _e_in_p
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for idx, c in expr.terms.items():
        acc: Mapping[Partition, Fraction] = {(): Fraction(1)}
        for part in idx:
            acc = _mul_p(acc, gen(part))
        for k, v in acc.items():
            out[k] += c * v
    return SymFunc("p", out)


# characters

def character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``chi^lam(mu)`` by the Murnaghan-Nakayama rule."""
    lam, mu = check_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|lambda| = {sum(lam)} differs from |mu| = {sum(mu)}")
    return _mn(lam, mu)


@cache
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    # beta-numbers: removing a k-rim hook slides one bead down k places
    L = len(lam)
    beads = [lam[i] + L - 1 - i for i in range(L)]
    occupied = set(beads)
    total = 0
    for b in beads:
        t = b - k
        if t < 0 or t in occupied:
            continue
        height = sum(1 for c in beads if t < c < b)
        new = sorted((occupied - {b}) | {t}, reverse=True)
        smaller = tuple(x - (L - 1 - i) for i, x in enumerate(new))
        total += (-1) ** height * _mn(tuple(x for x in smaller if x), rest)
    return total


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    parts = partitions(n)
    return {(lam, mu): _mn(lam, mu) for lam in parts for mu in parts}


def schur_to_p(lam: Sequence[int]) -> SymFunc:
    """``s_lam = sum_mu chi^lam(mu) p_mu / z_mu``."""
    lam = check_partition(lam)
    n = sum(lam)
    return SymFunc("p", {mu: Fraction(_mn(lam, mu), z_mu(mu)) for mu in partitions(n)})


def p_to_schur(expr: SymFunc) -> SymFunc:
    """Expand a p-basis expression in Schur functions via ``p_mu = sum_lam chi^lam(mu) s_lam``."""
    if expr.basis != "p":
        raise ValueError("p_to_schur expects a p expression")
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for mu, c in expr.terms.items():
        for lam in partitions(sum(mu)):
            chi = _mn(lam, mu)
            if chi:
                out[lam] += c * chi
    return SymFunc("s", out)


def to_p(expr: SymFunc) -> SymFunc:
    if expr.basis == "p":
        return expr
    if expr.basis in ("h", "e"):
        return newton_convert(expr)
    out = SymFunc("p")
    for lam, c in expr.terms.items():
        out = out + schur_to_p(lam) * c
    return out


def to_schur(expr: SymFunc) -> SymFunc:
    return expr if expr.basis == "s" else p_to_schur(to_p(expr))


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall scalar product, ``<p_lam, p_mu> = z_mu [lam == mu]``."""
    if f.basis == "s" and g.basis == "s":
        return sum((c * g.terms.get(k, 0) for k, c in f.terms.items()), Fraction(0))
    fp, gp = to_p(f), to_p(g)
    return sum((c * gp.terms.get(k, 0) * z_mu(k) for k, c in fp.terms.items()), Fraction(0))


# Pieri rule

def horizontal_strips(lam: Sequence[int], r: int, outer: Optional[Sequence[int]] = None) -> list[Partition]:
    """Partitions ``mu`` with ``mu / lam`` a horizontal strip of size ``r`` (and ``mu`` inside ``outer``)."""
    lam = tuple(lam)
    rows = len(lam) + 1
    if outer is not None:
        rows = min(rows, len(outer))
    out: list[Partition] = []

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        cur = lam[i] if i < len(lam) else 0
        hi = cur + left
        if i > 0:
            hi = min(hi, lam[i - 1])
        if outer is not None:
            hi = min(hi, outer[i])
        for v in range(hi, cur - 1, -1):
            acc.append(v)
            rec(i + 1, left - (v - cur), acc)
            acc.pop()

    if outer is not None and (len(lam) > len(outer) or any(a > b for a, b in zip(lam, outer))):
        return []
    rec(0, r, [])
    return out


def vertical_strips(lam: Sequence[int], r: int, outer: Optional[Sequence[int]] = None) -> list[Partition]:
    """Partitions ``mu`` with ``mu / lam`` a vertical strip of size ``r``."""
    outer_c = None if outer is None else conjugate(outer)
    found = [conjugate(mu) for mu in horizontal_strips(conjugate(lam), r, outer_c)]
    return sorted(found, reverse=True)


def pieri(kind: str, r: int, lam: Sequence[int]) -> list[Partition]:
    """Shapes ``mu`` with ``s_mu`` in ``h_r s_lam`` (kind ``"h"``) or ``e_r s_lam`` (kind ``"e"``)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    lam = check_partition(lam)
    if kind == "h":
        return sorted(horizontal_strips(lam, r), reverse=True)
    if kind == "e":
        return vertical_strips(lam, r)
    raise ValueError(f"kind must be 'h' or 'e', not {kind!r}")


# evaluation at permutation-matrix eigenvalues

def power_sum_at_xi(k: int, mu: Sequence[int]) -> int:
    """``p_k`` at the eigenvalues of a permutation of cycle type ``mu``.

    A ``c``-cycle contributes the ``c``-th roots of unity, whose ``k``-th
    powers sum to ``c`` when ``c | k`` and to 0 otherwise.
    """
    return sum(c for c in mu if k % c == 0)


def eval_xi(f: SymFunc, mu: Sequence[int]) -> Fraction:
    """``f[Xi_mu]``."""
    fp = to_p(f)
    total = Fraction(0)
    for idx, c in fp.terms.items():
        v = c
        for k in idx:
            v *= power_sum_at_xi(k, mu)
            if not v:
                break
        total += v
    return total


def frobenius_from_values(values: Mapping[Sequence[int], object], n: int) -> SymFunc:
    """``sum_{mu |- n} values[mu] p_mu / z_mu``."""
    vals = {tuple(k): Fraction(v) for k, v in values.items()}
    out = {}
    for mu in partitions(n):
        if mu not in vals:
            raise KeyError(f"no character value given for cycle type {mu}")
        out[mu] = vals[mu] / z_mu(mu)
    return SymFunc("p", out)


def module_frobenius(n: int, alpha: Sequence[int], beta: Sequence[int]) -> SymFunc:
    """Schur expansion of the Frobenius image of the degree ``(alpha, beta)`` component."""
    hp = newton_convert(h(*alpha))
    ep = newton_convert(e(*beta))
    values = {mu: eval_xi(hp, mu) * eval_xi(ep, mu) for mu in partitions(n)}
    return p_to_schur(frobenius_from_values(values, n))


# plethysm s_lam[1 + h_1 + h_2 + ...], truncated

def _p_plethysm(k: int, g: Mapping[Partition, Fraction], max_degree: int) -> dict[Partition, Fraction]:
    # p_k[1 + g] = 1 + p_k[g], and p_k[p_nu] = p_{k nu}
    out = {(): Fraction(1)}
    for nu, c in g.items():
        if k * sum(nu) <= max_degree:
            key = tuple(k * x for x in nu)
            out[key] = out.get(key, Fraction(0)) + c
    return out


def plethysm_one_plus_h(lam: Sequence[int], max_degree: int) -> SymFunc:
    """``s_lam[1 + h_1 + h_2 + ...]`` keeping only terms of degree at most ``max_degree``."""
    lam = check_partition(lam)
    g: dict[Partition, Fraction] = defaultdict(Fraction)
    for j in range(1, max_degree + 1):
        for idx, c in _h_in_p(j).items():
            g[idx] += c
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for mu, c in schur_to_p(lam).terms.items():
        acc: Mapping[Partition, Fraction] = {(): c}
        for k in mu:
            acc = _mul_p(acc, _p_plethysm(k, g, max_degree), max_degree)
        for idx, v in acc.items():
            out[idx] += v
    return SymFunc("p", out)


def plethysm_multiplicity(a: Sequence[int], lam: Sequence[int], n: Optional[int] = None) -> int:
    """``< h_a, s_lam[1 + h_1 + h_2 + ...] >``: the multiplicity of ``lam`` in ``C[X_{n x m}]`` of degree ``a``."""
    lam = check_partition(lam)
    if n is not None and sum(lam) != n:
        raise ValueError("lambda must be a partition of n")
    d = sum(a)
    val = hall_inner(h(*a), plethysm_one_plus_h(lam, d))
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral plethysm coefficient {val}")
    return int(val)
