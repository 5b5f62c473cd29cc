"""The ring of S_n invariants: counting, power-sum generators and their relations.

Power sums ``p_S`` with an odd number of barred letters are odd elements and
anticommute with each other; ``PExpr`` keeps each product in canonical part
order and folds the reordering sign into its coefficient.

The generating functions are computed with the formal parameters stored as
row 0 of the polynomial ring: ``q_j`` is ``x_{0j}`` and ``z_j`` is
``theta_{0j}``.  Because row 0 sorts first, a normal-form term is literally
``z_{s1} ... z_{sk}`` times a polynomial in the genuine variables.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Mapping, Optional, Sequence

from .combinat import (
    DegreeVector,
    Multiset,
    MultisetPartition,
    all_multisets,
    enumerate_multiset_partitions,
)
from .linalg import rank
from .superpoly import ONE, Mono, SuperPoly, power_prod, power_sum

Parts = tuple[Multiset, ...]


def count_invariants(n: int, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Dimension of the invariants of degree ``(alpha, beta)``: super multiset partitions with at most ``n`` parts."""
    return len(enumerate_multiset_partitions(DegreeVector(tuple(alpha), tuple(beta)), n=n, super_only=True))


def c_of_S(S: Multiset) -> int:
    """Multinomial ``|S|! / (a_1! ... a_m! 1!^k)``."""
    return factorial(len(S)) // prod(factorial(a) for a in S.unbarred_counts())


def a_of_pi(pi: MultisetPartition) -> Fraction:
    """``prod c(S_i)^{m_i} / (prod |S_i|^{m_i} * prod m_i!)``."""
    num, den = 1, 1
    for part, mult in pi.multiplicities():
        num *= c_of_S(part) ** mult
        den *= len(part) ** mult * factorial(mult)
    return Fraction(num, den)


def shuffle_sign(parts: Iterable[Multiset]) -> int:
    """Sign of sorting the barred letters read part by part."""
    word = [b for part in parts for b in part.barred]
    inv = sum(1 for a, b in combinations(word, 2) if a > b)
    return -1 if inv % 2 else 1


def normalize_product(parts: Sequence[Multiset]) -> tuple[int, Parts]:
    """Rewrite ``p_{S_1} ... p_{S_l}`` in canonical order: ``(sign, sorted parts)``; sign 0 if an odd ``p_S`` repeats."""
    odd = [p for p in parts if p.odd]
    if len(set(odd)) != len(odd):
        return 0, ()
    inv = sum(1 for a, b in combinations(odd, 2) if a > b)
    return (-1 if inv % 2 else 1), tuple(sorted(parts))


class PExpr:
    """Rational linear combination of products ``p_pi`` of abstract power sums ``p_S``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Parts, object]] = None):
        out: dict[Parts, Fraction] = defaultdict(Fraction)
        for parts, c in (terms or {}).items():
            sign, canon = normalize_product(parts)
            if sign and c:
                out[canon] += sign * Fraction(c)
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def generator(cls, S: Multiset) -> "PExpr":
        return cls({(S,): 1})

    @classmethod
    def product(cls, parts: Sequence[Multiset], coeff=1) -> "PExpr":
        return cls({tuple(parts): coeff})

    def __add__(self, other: "PExpr") -> "PExpr":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return PExpr(out)

    def __neg__(self):
        return PExpr({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PExpr({k: v * other for k, v in self.terms.items()})
        out: dict[Parts, Fraction] = defaultdict(Fraction)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                sign, canon = normalize_product(k1 + k2)
                if sign:
                    out[canon] += sign * v1 * v2
        return PExpr(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PExpr) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def max_part_size(self) -> int:
        return max((len(p) for k in self.terms for p in k), default=0)

    def realize(self, n: int) -> SuperPoly:
        """Evaluate every ``p_S`` as the power sum in ``n`` rows of variables."""
        total = SuperPoly(n)
        for parts, c in self.terms.items():
            total = total + power_prod(parts, n) * c
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for parts in sorted(self.terms):
            c = self.terms[parts]
            mono = "*".join(f"p{p}" for p in parts) or "1"
            pieces.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(pieces)

    __repr__ = __str__

    def to_json(self) -> list[dict]:
        return [
            {"parts": [str(p) for p in parts], "numerator": c.numerator, "denominator": c.denominator}
            for parts, c in sorted(self.terms.items())
        ]


def _partitions_of(S: Multiset) -> list[MultisetPartition]:
    return enumerate_multiset_partitions(MultisetPartition((S,)).content(), super_only=True)


def p_coefficient(S: Multiset) -> PExpr:
    """Coefficient of ``q^a z_S`` in ``P(q, z)``: ``c(S) / |S| * p_S``."""
    return PExpr.generator(S) * Fraction(c_of_S(S), len(S))


@cache
def e_coefficient(S: Multiset) -> PExpr:
    """Coefficient of ``q^a z_S`` in ``E(q, z)`` over the power sums.

    ``sum_{pi} (-1)^{|S| + l(pi)} a_pi eps(pi) p_pi``, where ``eps(pi)`` is the
    sign of merging the barred letters of the parts back into sorted order.
    """
    terms = {}
    for pi in _partitions_of(S):
        sign = (-1) ** (len(S) + len(pi)) * shuffle_sign(pi.parts)
        terms[pi.parts] = sign * a_of_pi(pi)
    return PExpr(terms)


def expand_P(degree_bound: int, n: Optional[int], m: int, mb: int) -> dict[Multiset, PExpr]:
    """Coefficients of ``P(q, z)`` for every ``S`` of size at most ``degree_bound``.

    The coefficients are expressions in the ``p_S`` and do not depend on ``n``;
    realize them with ``PExpr.realize(n)``.  ``n`` is accepted to mirror
    ``generating_P``.
    """
    return {S: p_coefficient(S) for S in all_multisets(m, mb, degree_bound)}


def expand_E(degree_bound: int, n: Optional[int], m: int, mb: int) -> dict[Multiset, PExpr]:
    """Coefficients of ``E(q, z)``; see ``expand_P`` for the role of ``n``."""
    return {S: e_coefficient(S) for S in all_multisets(m, mb, degree_bound)}


@cache
def relation(S: Multiset) -> PExpr:
    """``p_S`` as a combination of products of strictly smaller power sums.

    Valid whenever ``|S| > n``, because the E-coefficient of ``S`` then vanishes.
    """
    terms = {}
    for pi in _partitions_of(S):
        if len(pi) == 1:
            continue
        terms[pi.parts] = (-1) ** len(pi) * shuffle_sign(pi.parts) * a_of_pi(pi)
    return PExpr(terms) * Fraction(len(S), c_of_S(S))


@cache
def reduce_generator(S: Multiset, n: int) -> PExpr:
    """``p_S`` rewritten with generators of size at most ``n`` only."""
    if len(S) <= n:
        return PExpr.generator(S)
    return normal_form(relation(S), n)


def normal_form(expr: PExpr, n: int) -> PExpr:
    """Replace every ``p_S`` with ``|S| > n`` by its reduction, recursively."""
    total = PExpr()
    for parts, c in expr.terms.items():
        term = PExpr({(): c})
        for part in parts:
            term = term * reduce_generator(part, n)
        total = total + term
    return total


def reduce_pS(S: Multiset, n: int) -> PExpr:
    if len(S) <= n:
        raise ValueError(f"|S| = {len(S)} <= n = {n}: no relation applies")
    return reduce_generator(S, n)


# generating functions computed directly in the polynomial ring

def _formal_degree(mono: Mono) -> int:
    return sum(k for i, _, k in mono[0] if i == 0) + sum(1 for i, _ in mono[1] if i == 0)


def _truncate(f: SuperPoly, bound: int) -> SuperPoly:
    return SuperPoly(f.n, {k: v for k, v in f.terms.items() if _formal_degree(k) <= bound})


def _row_sum(n: int, i: int, m: int, mb: int) -> SuperPoly:
    # sum_j q_j x_ij + sum_j z_j theta_ij
    terms = {(((0, j, 1), (i, j, 1)), ()): 1 for j in range(1, m + 1)}
    terms.update({((), ((0, j), (i, j))): 1 for j in range(1, mb + 1)})
    return SuperPoly(n, terms)


def generating_E(degree_bound: int, n: int, m: int, mb: int) -> SuperPoly:
    """``prod_i (1 + sum_j q_j x_ij + sum_j z_j theta_ij)`` truncated in q, z degree."""
    out = SuperPoly(n, {ONE: 1})
    for i in range(1, n + 1):
        out = _truncate(out * (_row_sum(n, i, m, mb) + 1), degree_bound)
    return out


def generating_P(degree_bound: int, n: int, m: int, mb: int) -> SuperPoly:
    """``-sum_i log(1 - u_i)`` expanded as ``sum_i sum_k u_i^k / k`` up to the degree bound."""
    out = SuperPoly(n)
    for i in range(1, n + 1):
        u = _row_sum(n, i, m, mb)
        power = SuperPoly(n, {ONE: 1})
        for k in range(1, degree_bound + 1):
            power = power * u
            out = out + power * Fraction(1, k)
    return out


def exp_minus_P_negated(P: SuperPoly, degree_bound: int) -> SuperPoly:
    """``exp(-P(-q, -z))`` truncated at the degree bound."""
    arg = SuperPoly(P.n, {k: -v * (-1) ** _formal_degree(k) for k, v in P.terms.items()})
    out = SuperPoly(P.n, {ONE: 1})
    power = SuperPoly(P.n, {ONE: 1})
    for k in range(1, degree_bound + 1):
        power = _truncate(power * arg, degree_bound)
        out = out + power * Fraction(1, factorial(k))
    return out


def extract_coefficients(f: SuperPoly) -> dict[Multiset, SuperPoly]:
    """Split by formal monomial; key ``S`` collects the coefficient of ``q^a z_{s1} ... z_{sk}``.

    The coefficient is read against the pairing ``(z_{s1} theta_{. s1}) ... (z_{sk} theta_{. sk})``,
    i.e. it absorbs ``(-1)^{k(k-1)/2}`` relative to the sorted ``z_{s1} ... z_{sk} * rest`` form.
    """
    out: dict[Multiset, dict[Mono, Fraction]] = defaultdict(dict)
    for (xs, ths), c in f.terms.items():
        q = {j: k for i, j, k in xs if i == 0}
        zs = [j for i, j in ths if i == 0]
        rest = (tuple(t for t in xs if t[0] != 0), tuple(t for t in ths if t[0] != 0))
        m = max(q, default=0)
        S = Multiset.from_counts([q.get(j, 0) for j in range(1, m + 1)], zs)
        k = len(zs)
        out[S][rest] = c * (-1) ** (k * (k - 1) // 2)
    return {S: SuperPoly(f.n, t) for S, t in out.items()}


# reports

@dataclass
class SpanReport:
    n: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    dimension: int
    rank: int
    generator_rank: int
    generators_used: int
    reductions_applied: int
    ok: bool
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        d = asdict(self)
        return {
            "component": {"n": self.n, "alpha": list(self.alpha), "beta": list(self.beta)},
            "dimension": self.dimension,
            "rank": self.rank,
            "generator_rank": self.generator_rank,
            "generators_used": self.generators_used,
            "reductions_applied": self.reductions_applied,
            "ok": self.ok,
            "failures": d["failures"],
        }


def verify_spanning(n: int, alpha: Sequence[int], beta: Sequence[int]) -> SpanReport:
    """Check that the ``p_pi`` are a basis of the invariants and that generators of size at most ``n`` suffice."""
    alpha, beta = tuple(alpha), tuple(beta)
    content = DegreeVector(alpha, beta)
    dim = count_invariants(n, alpha, beta)
    failures = []

    basis = enumerate_multiset_partitions(content, n=n, super_only=True)
    realized = {pi: power_prod(pi, n) for pi in basis}
    r_basis = rank(q.terms for q in realized.values())
    if r_basis != dim:
        failures.append(f"p_pi with l(pi) <= n span rank {r_basis}, expected {dim}")
    for pi, q in realized.items():
        if any(q.act(g) != q for g in _generators(n)):
            failures.append(f"p_{pi} is not invariant")

    small = [pi for pi in enumerate_multiset_partitions(content, super_only=True) if all(len(S) <= n for S in pi)]
    r_small = rank(power_prod(pi, n).terms for pi in small)
    if r_small != dim:
        failures.append(f"products of generators with |S| <= n reach rank {r_small}, expected {dim}")
    used = {S for pi in small for S in pi}

    reductions = 0
    for pi, q in realized.items():
        if any(len(S) > n for S in pi):
            reductions += 1
            nf = normal_form(PExpr.product(pi.parts), n)
            if nf.max_part_size() > n or nf.realize(n) != q:
                failures.append(f"reduction of p_{pi} does not realize to p_{pi}")

    return SpanReport(n, alpha, beta, dim, r_basis, r_small, len(used), reductions, not failures, failures)


def _generators(n: int):
    from .superpoly import transposition_and_cycle

    return transposition_and_cycle(n)


@dataclass
class RelationsReport:
    n: int
    checked: int
    ok: bool
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def check_relations(n: int, m: int, mb: int, samples: Optional[Iterable[Multiset]] = None, max_size: int = 3) -> RelationsReport:
    """``p_S p_S' = (-1)^{|T'| |T''|} p_S' p_S`` and ``p_S^2 = 0`` for odd ``S``, on realized power sums."""
    samples = list(all_multisets(m, mb, max_size) if samples is None else samples)
    realized = {S: power_sum(S, n) for S in samples}
    failures = []
    checked = 0
    for S in samples:
        for T in samples:
            sign = (-1) ** (len(S.barred) * len(T.barred))
            checked += 1
            lhs = realized[S] * realized[T]
            if S == T and S.odd:
                if lhs:
                    failures.append(f"p_{S}^2 != 0")
            elif lhs != realized[T] * realized[S] * sign:
                failures.append(f"p_{S} p_{T} != {sign} p_{T} p_{S}")
    return RelationsReport(n, checked, not failures, failures)
