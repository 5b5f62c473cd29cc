"""Command line front end.

Exit codes: 0 success, 1 verification failure or disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from typing import Optional, Sequence

from . import invariants, tableaux
from .combinat import DegreeVector, Multiset, MultisetPartition, all_multisets, partitions
from .superpoly import DEFAULT_CAP, brute_multiplicity, component_size
from .symfunc import module_frobenius
from .verify import Grid, run_all

log = logging.getLogger("supersym")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_vector(text: Optional[str]) -> tuple[int, ...]:
    if text is None:
        return ()
    body = text.strip().strip("()[]")
    try:
        return tuple(int(t) for t in re.split(r"[,\s]+", body) if t)
    except ValueError:
        raise UsageError(f"not an integer vector: {text!r}") from None


def read_config(path: str) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            k, v = line.split("=", 1)
            out[k.strip().replace("-", "_")] = v.strip()
    return out


DEFAULTS = {"format": "text", "cap": str(DEFAULT_CAP), "method": "tableaux", "jobs": "1"}


def resolve(args: argparse.Namespace) -> argparse.Namespace:
    """Fill unset options from the config file, then from the built-in defaults."""
    config = read_config(args.config) if getattr(args, "config", None) else {}
    for key, value in {**DEFAULTS, **config}.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    return args


def component(args: argparse.Namespace) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    if args.n is None:
        raise UsageError("--n is required")
    n = int(args.n)
    alpha, beta = parse_vector(args.alpha), parse_vector(args.beta)
    if args.m is not None:
        m = int(args.m)
        if args.alpha is None:
            alpha = (0,) * m
        elif len(alpha) != m:
            raise UsageError(f"alpha has length {len(alpha)} but m = {m}")
    if args.m_bar is not None:
        mb = int(args.m_bar)
        if args.beta is None:
            beta = (0,) * mb
        elif len(beta) != mb:
            raise UsageError(f"beta has length {len(beta)} but m' = {mb}")
    if n < 0 or any(x < 0 for x in alpha + beta):
        raise UsageError("degrees must be non-negative")
    return n, alpha, beta


def emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_decompose(args) -> int:
    n, alpha, beta = component(args)
    cap = int(args.cap)
    if args.shape is not None:
        lam = parse_vector(args.shape)
        if sum(lam) != n:
            raise UsageError("shape must be a partition of n")
        if args.entries:
            pi = MultisetPartition.parse(args.entries)
            count = tableaux.count_with_entry_multiset(lam, pi, n)
            emit(args, {"shape": list(lam), "entries": str(pi), "count": count}, str(count))
            return EXIT_OK
        shapes = [lam]
    else:
        shapes = partitions(n)

    methods = ["tableaux", "symbolic", "brute"] if args.check else [args.method]
    if "brute" in methods and component_size(n, alpha, beta) > cap:
        log.warning("component dimension %d exceeds cap %d; brute force disabled", component_size(n, alpha, beta), cap)
        if not args.check:
            raise UsageError("brute-force component exceeds --cap")
        methods.remove("brute")

    results: dict[str, dict] = {}
    for method in methods:
        if method == "tableaux":
            results[method] = {lam: tableaux.multiplicity(lam, alpha, beta, n) for lam in shapes}
        elif method == "symbolic":
            frob = module_frobenius(n, alpha, beta)
            results[method] = {lam: int(frob.coefficient(lam)) for lam in shapes}
        elif method == "brute":
            results[method] = {lam: brute_multiplicity(n, lam, alpha, beta, cap) for lam in shapes}
        else:
            raise UsageError(f"unknown method {method!r}")

    first = results[methods[0]]
    diffs = [
        {"shape": list(lam), **{meth: results[meth][lam] for meth in methods}}
        for lam in shapes
        if len({results[meth][lam] for meth in methods}) > 1
    ]
    payload = {
        "n": n,
        "alpha": list(alpha),
        "beta": list(beta),
        "methods": methods,
        "multiplicities": [{"shape": list(lam), "multiplicity": first[lam]} for lam in shapes],
        "disagreements": diffs,
    }
    lines = [f"{list(lam)}: {first[lam]}" for lam in shapes]
    if args.check:
        lines.append("check: " + ("all methods agree" if not diffs else f"{len(diffs)} disagreement(s)"))
        lines += [f"  {d}" for d in diffs]
    emit(args, payload, "\n".join(lines))
    return EXIT_FAIL if diffs else EXIT_OK


def cmd_tableaux(args) -> int:
    if args.validate:
        with open(args.validate) as fh:
            data = json.load(fh)
        t = tableaux.MultisetTableau.from_json(data)
        problem = tableaux.validate(t)
        payload = {"ok": problem is None, "violation": None if problem is None else str(problem)}
        emit(args, payload, "ok" if problem is None else str(problem))
        return EXIT_OK if problem is None else EXIT_FAIL
    if args.shape is None:
        raise UsageError("--shape is required")
    lam = parse_vector(args.shape)
    if args.n is None:
        args.n = str(sum(lam))
    n, alpha, beta = component(args)
    if sum(lam) != n:
        raise UsageError("shape must be a partition of n")
    if args.count_only:
        count = tableaux.multiplicity(lam, alpha, beta, n)
        emit(args, {"shape": list(lam), "count": count}, str(count))
        return EXIT_OK
    found = tableaux.enumerate_tableaux(lam, DegreeVector(alpha, beta))
    payload = {"shape": list(lam), "count": len(found), "tableaux": [t.to_json() for t in found]}
    emit(args, payload, "\n\n".join(t.render() for t in found) + f"\n({len(found)} tableaux)")
    return EXIT_OK


def cmd_verify(args) -> int:
    grid = Grid(
        max_n=int(args.max_n or 5),
        max_degree=int(args.max_degree or 4),
        max_m=int(args.max_m or 2),
        max_k=int(args.max_k or 6),
        invariants_max_n=min(3, int(args.max_n or 5)),
        cap=int(args.cap),
    )
    only = tuple(args.suite or ())
    results = run_all(grid, jobs=int(args.jobs), only=only)
    failed = sum(len(r.failures) for r in results)
    payload = {"grid": grid.__dict__, "suites": [r.to_json() for r in results], "failed": failed}
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.checked} checked, {len(r.failures)} failed" for r in results]
    for r in results:
        lines += [f"  {f}" for f in r.failures[:10]]
    emit(args, payload, "\n".join(lines))
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_invariants(args) -> int:
    action = args.action
    if action == "reduce":
        if args.n is None or args.S is None:
            raise UsageError("reduce needs --n and --S")
        S, n = Multiset.parse(args.S), int(args.n)
        if len(S) <= n:
            raise UsageError(f"|S| = {len(S)} <= n = {n}: no relation applies")
        expr = invariants.reduce_pS(S, n)
        payload = {"S": str(S), "n": n, "expression": expr.to_json()}
        emit(args, payload, str(expr))
        return EXIT_OK
    if action == "relations":
        if args.n is None:
            raise UsageError("--n is required")
        m = int(args.m if args.m is not None else 2)
        mb = int(args.m_bar if args.m_bar is not None else 2)
        rep = invariants.check_relations(int(args.n), m, mb, all_multisets(m, mb, int(args.max_size or 3)))
        emit(args, rep.to_json(), f"{'all hold' if rep.ok else 'FAILED'}: {rep.checked} pairs checked")
        return EXIT_OK if rep.ok else EXIT_FAIL
    n, alpha, beta = component(args)
    if action == "count":
        count = invariants.count_invariants(n, alpha, beta)
        emit(args, {"component": {"n": n, "alpha": list(alpha), "beta": list(beta)}, "dimension": count}, str(count))
        return EXIT_OK
    if action == "span":
        if component_size(n, alpha, beta) > int(args.cap):
            raise UsageError("component exceeds --cap")
        rep = invariants.verify_spanning(n, alpha, beta)
        text = f"dimension {rep.dimension}, rank {rep.rank}, generator rank {rep.generator_rank}: " + (
            "ok" if rep.ok else "; ".join(rep.failures)
        )
        emit(args, rep.to_json(), text)
        return EXIT_OK if rep.ok else EXIT_FAIL
    raise UsageError(f"unknown action {action!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supersym", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, component_args=True):
        p.add_argument("--config", help="key = value file; flags override it")
        p.add_argument("--format", choices=["text", "json"])
        p.add_argument("--cap", help="largest component dimension for brute force")
        if component_args:
            p.add_argument("--n")
            p.add_argument("--m", help="number of commuting variable sets (defaults to len(alpha))")
            p.add_argument("--m-bar", dest="m_bar", help="number of Grassmann variable sets")
            p.add_argument("--alpha", help="degrees in the commuting sets, e.g. 2,1")
            p.add_argument("--beta", help="degrees in the Grassmann sets")

    d = sub.add_parser("decompose", help="multiplicity of each irreducible")
    common(d)
    d.add_argument("--shape")
    d.add_argument("--entries", help="multiset partition of non-blank labels, with --shape")
    d.add_argument("--method", choices=["tableaux", "symbolic", "brute"])
    d.add_argument("--check", action="store_true", help="run all three methods and compare")
    d.set_defaults(func=cmd_decompose)

    t = sub.add_parser("tableaux", help="list multiset tableaux")
    common(t)
    t.add_argument("--shape")
    t.add_argument("--count-only", action="store_true")
    t.add_argument("--validate", metavar="FILE", help="validate a tableau given as JSON")
    t.set_defaults(func=cmd_tableaux)

    v = sub.add_parser("verify", help="run the identity suites over a grid")
    common(v, component_args=False)
    v.add_argument("--max-n", dest="max_n")
    v.add_argument("--max-degree", dest="max_degree")
    v.add_argument("--max-m", dest="max_m")
    v.add_argument("--max-k", dest="max_k")
    v.add_argument("--suite", action="append", choices=["multiplicities", "trace", "grouping", "evalhet", "generators", "spanning"])
    v.add_argument("--jobs")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("invariants", help="invariant ring queries")
    common(i)
    i.add_argument("action", choices=["count", "span", "reduce", "relations"])
    i.add_argument("--S", help="multiset for reduce, e.g. {1,1,2'}")
    i.add_argument("--max-size", dest="max_size")
    i.set_defaults(func=cmd_invariants)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        resolve(args)
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
