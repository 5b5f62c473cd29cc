"""Grid runners for the identities tying the three decomposition methods together."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .combinat import all_multisets, compositions, degree_vectors, partitions
from .fillings import count_T, evalhet_sum, signed_sum_Tbar
from .invariants import reduce_pS, verify_spanning
from .superpoly import DEFAULT_CAP, brute_multiplicity, component_size, power_sum, trace_character
from .symfunc import e, eval_xi, h, hall_inner, module_frobenius, newton_convert
from .tableaux import multiplicity


@dataclass(frozen=True)
class Grid:
    max_n: int = 5
    max_degree: int = 4
    max_m: int = 2
    max_k: int = 6  # partitions mu |- k for the filling identities
    invariants_max_n: int = 3
    cap: int = DEFAULT_CAP


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "failed": len(self.failures), "failures": self.failures[:20]}


def _components(grid: Grid, n: int) -> Iterator[tuple[int, int, tuple, tuple]]:
    for m in range(grid.max_m + 1):
        for mb in range(grid.max_m + 1):
            for dv in degree_vectors(m, mb, grid.max_degree):
                yield m, mb, dv.alpha, dv.beta


def _multiplicities_for_n(args: tuple[Grid, int]) -> tuple[int, list[str]]:
    grid, n = args
    checked, failures = 0, []
    for m, mb, alpha, beta in _components(grid, n):
        frob = module_frobenius(n, alpha, beta)
        use_brute = component_size(n, alpha, beta) <= grid.cap
        for lam in partitions(n):
            checked += 1
            a = multiplicity(lam, alpha, beta, n)
            b = frob.coefficient(lam)
            c = brute_multiplicity(n, lam, alpha, beta, grid.cap) if use_brute else a
            if not a == b == c:
                failures.append(f"n={n} alpha={alpha} beta={beta} lambda={lam}: tableaux={a} symbolic={b} brute={c}")
    return checked, failures


def check_multiplicities(grid: Grid, jobs: int = 1) -> SuiteResult:
    """Tableau count = Schur coefficient of the Frobenius image = character inner product."""
    res = SuiteResult("multiset tableaux count multiplicities")
    tasks = [(grid, n) for n in range(1, grid.max_n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            outs = list(pool.map(_multiplicities_for_n, tasks))
    else:
        outs = [_multiplicities_for_n(t) for t in tasks]
    for checked, failures in outs:
        res.checked += checked
        res.failures.extend(failures)
    return res


def check_trace(grid: Grid) -> SuiteResult:
    """Trace on the component equals ``h_alpha e_beta`` at the eigenvalues."""
    res = SuiteResult("trace equals h_alpha e_beta at eigenvalues")
    for n in range(1, grid.max_n + 1):
        for m, mb, alpha, beta in _components(grid, n):
            if component_size(n, alpha, beta) > grid.cap:
                continue
            hp, ep = newton_convert(h(*alpha)), newton_convert(e(*beta))
            for mu in partitions(n):
                res.checked += 1
                t = trace_character(n, m, mb, alpha, beta, mu, grid.cap)
                v = eval_xi(hp, mu) * eval_xi(ep, mu)
                if t != v:
                    res.failures.append(f"n={n} alpha={alpha} beta={beta} mu={mu}: trace={t} eval={v}")
    return res


def _vectors(max_total: int, max_len: int) -> Iterator[tuple[int, ...]]:
    for length in range(max_len + 1):
        for total in range(max_total + 1):
            yield from (c for c in compositions(total, length) if length == 0 or c[-1] or total == 0)


def check_grouping(grid: Grid) -> SuiteResult:
    """Row-constant filling counts equal ``h_alpha[Xi_mu]`` and ``e_beta[Xi_mu]``."""
    res = SuiteResult("filling counts equal h and e character values")
    vecs = sorted(set(_vectors(grid.max_degree, grid.max_m)))
    for k in range(grid.max_k + 1):
        for mu in partitions(k):
            for vec in vecs:
                res.checked += 2
                hv, ev = eval_xi(h(*vec), mu), eval_xi(e(*vec), mu)
                if count_T(vec, mu) != hv:
                    res.failures.append(f"count_T({vec}, {mu}) = {count_T(vec, mu)} != {hv}")
                if signed_sum_Tbar(vec, mu) != ev:
                    res.failures.append(f"signed_sum_Tbar({vec}, {mu}) = {signed_sum_Tbar(vec, mu)} != {ev}")
    return res


def check_evalhet(grid: Grid) -> SuiteResult:
    """Signed row-constant fillings give ``< h_{|mu|-|lam|-|tau|} h_lam e_tau, p_mu >``."""
    from .symfunc import p

    res = SuiteResult("signed fillings give h h e pairings")
    for k in range(grid.max_k + 1):
        for a in range(k + 1):
            for b in range(k - a + 1):
                for lam in partitions(a):
                    for tau in partitions(b):
                        f = newton_convert(h(k - a - b, *lam)) * newton_convert(e(*tau))
                        for mu in partitions(k):
                            res.checked += 1
                            lhs = evalhet_sum(lam, tau, mu)
                            rhs = hall_inner(f, p(*mu))
                            if lhs != rhs:
                                res.failures.append(f"lam={lam} tau={tau} mu={mu}: fillings={lhs} pairing={rhs}")
    return res


def check_generators(grid: Grid) -> SuiteResult:
    """Reducing ``p_S`` with ``|S| > n`` realizes to ``p_S`` and uses only small parts."""
    res = SuiteResult("power sums of size > n reduce to smaller generators")
    m = mb = grid.max_m
    for n in range(1, grid.invariants_max_n + 1):
        for S in all_multisets(m, mb, n + 2, min_size=n + 1):
            res.checked += 1
            r = reduce_pS(S, n)
            if r.max_part_size() > n:
                res.failures.append(f"n={n} S={S}: reduction keeps a part of size {r.max_part_size()}")
            elif r.realize(n) != power_sum(S, n):
                res.failures.append(f"n={n} S={S}: reduction does not realize to p_S")
    return res


def check_spanning(grid: Grid) -> SuiteResult:
    res = SuiteResult("power sum products span the invariants")
    for n in range(1, grid.invariants_max_n + 1):
        for m, mb, alpha, beta in _components(grid, n):
            res.checked += 1
            rep = verify_spanning(n, alpha, beta)
            res.failures.extend(f"n={n} alpha={alpha} beta={beta}: {f}" for f in rep.failures)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "multiplicities": check_multiplicities,
    "trace": check_trace,
    "grouping": check_grouping,
    "evalhet": check_evalhet,
    "generators": check_generators,
    "spanning": check_spanning,
}


def run_all(grid: Grid, jobs: int = 1, only: tuple[str, ...] = ()) -> list[SuiteResult]:
    out = []
    for name, fn in SUITES.items():
        if only and name not in only:
            continue
        out.append(fn(grid, jobs) if name == "multiplicities" else fn(grid))
    return out
