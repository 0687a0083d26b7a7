"""Least-degree invariants and the containment verification suite.

All verdict arithmetic is exact: degrees are integers and ratio
comparisons use `fractions.Fraction`.  The containment check follows the
witness shape of the underlying inequality: a generator of the high
symbolic power is divided down by floor division, matched against a
minimal generator of the low power, and the degree slack is compared with
the required power of the maximal ideal.  An exhaustive product search
backs the fast path up on small instances.
"""

from __future__ import annotations

import csv
import io
import itertools
import os
import time
from fractions import Fraction
from functools import lru_cache

from .ideals import membership, power
from .monomials import from_exponents
from .star_config import (
    FoldParams,
    SettingError,
    fold_params,
    fold_symbolic,
    fold_symbolic_lambdas,
    sorted_prefix_member,
)

_EXHAUSTIVE_LIMIT = 400_000


class ContainmentQuery:
    """One instance of the symbolic-vs-ordinary containment statement."""

    __slots__ = ("params", "k", "l", "m")

    def __init__(self, params: FoldParams, k: int, l: int, m: int):
        if min(k, l, m) < 1:
            raise ValueError("k, l, m must be positive")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("ContainmentQuery is immutable")

    @property
    def lhs_order(self) -> int:
        p = self.params
        return self.l * (p.h + self.m - 1) - p.h + self.k

    @property
    def mm_power(self) -> int:
        p = self.params
        return p.form_degree * ((self.l - 1) * (p.h - 1) + self.k - 1) * p.mu_hat(p.h)

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "k": self.k,
            "l": self.l,
            "m": self.m,
            "lhs_order": self.lhs_order,
            "mm_power": self.mm_power,
        }


@lru_cache(maxsize=None)
def alpha_symbolic(params: FoldParams, n: int) -> int:
    """Least degree in the n-th symbolic power, by bounded integer search.

    Minimizes the total of an ascending tuple subject to the prefix-sum
    thresholds; entries beyond position h repeat the h-th entry.  A flat
    feasible tuple seeds the bound and the search prunes on the optimistic
    completion, independent of the generator enumeration.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    p = params
    thresholds = p.thresholds(n)
    cs = sorted(thresholds)
    h = p.h
    flat = max(-(-thresholds[c] // c) for c in cs)
    best = p.s * flat

    def rec(pos: int, prefix: int, last: int):
        nonlocal best
        if prefix + (p.s - pos + 1) * last >= best:
            return
        if pos > h:
            best = min(best, prefix + (p.s - h) * last)
            return
        vcap = last
        for c in cs:
            if c >= pos:
                need = thresholds[c] - prefix
                if need > 0:
                    vcap = max(vcap, -(-need // (c - pos + 1)))
        for x in range(last, vcap + 1):
            if pos in thresholds and prefix + x < thresholds[pos]:
                continue
            rec(pos + 1, prefix + x, x)

    rec(1, 0, 0)
    return best


def alpha_symbolic_by_generators(params: FoldParams, n: int) -> int:
    """Second route: least weight over the enumerated minimal generators."""
    return min(sum(lam) for lam in fold_symbolic_lambdas(params, n))


def _rhs_member_fast(params: FoldParams, lam, l: int, m: int, t: int):
    """Witness search: one low-power generator used l times.

    Returns (True, witness) when some generator of the m-th power divides
    the floor-divided tuple with degree slack at least t; (False, None)
    otherwise.
    """
    h = params.h
    reduced = [x // l for x in lam[:h]]
    reduced += [reduced[-1]] * (params.s - h)
    if not sorted_prefix_member(reduced, params.thresholds(m)):
        return False, None
    budget = (sum(lam) - t) // l
    best = None
    for cand in fold_symbolic_lambdas(params, m):
        w = sum(cand)
        if w <= budget and all(c <= r for c, r in zip(cand, reduced)):
            if best is None or w < best[0]:
                best = (w, cand)
    if best is None:
        return False, None
    return True, {"low_generator": list(best[1]), "slack": sum(lam) - l * best[0] - t}


def _rhs_member_exhaustive(params: FoldParams, lam, l: int, m: int, t: int) -> bool:
    """Exact membership of the monomial in m^t * (low power)^l, for small data."""
    low = fold_symbolic(params, m)
    if len(low) ** l > _EXHAUSTIVE_LIMIT:
        raise ValueError("exhaustive containment check too large")
    target = from_exponents(low.ring, lam)
    deg = sum(lam)
    ordinary = power(low, l)
    for g in ordinary.gens:
        if g.degree <= deg - t and g.divides(target):
            return True
    return False


def hh_containment_check(query: ContainmentQuery):
    """Verify that the high symbolic power sits in m^t times the l-th ordinary power.

    Checks every minimal generator of the left side, one representative per
    symmetric orbit (the right side is symmetric).  Returns (holds, report);
    a failing generator is reported with full diagnostics.
    """
    p = query.params
    if p.form_degree != 1:
        raise SettingError("containment checks run the monomial case, form degree 1")
    t = query.mm_power
    lhs = fold_symbolic_lambdas(p, query.lhs_order)
    failures = []
    witnesses = 0
    for lam in lhs:
        ok, _ = _rhs_member_fast(p, lam, query.l, query.m, t)
        if not ok:
            try:
                ok = _rhs_member_exhaustive(p, lam, query.l, query.m, t)
            except ValueError:
                ok = False
            if not ok:
                failures.append(list(lam))
                continue
        witnesses += 1
    report = {
        "query": query.to_json(),
        "generators_checked": len(lhs),
        "holds": not failures,
        "failures": failures,
    }
    return not failures, report


def lemma_inequalities(params: FoldParams, k: int, l: int, m: int) -> dict:
    """Pointwise checks of the two numeric bounds behind the containment.

    `mu_bound`: (h-1) * mu_hat(c) >= c for every c; `order_bound`:
    (l(h+m-1)-h+k) * mu_hat(c) - c(l-1) >= l*m*mu_hat(c).  Degenerate packs
    (c0 = h) are reported as vacuous.
    """
    p = params
    if p.degenerate:
        return {"mu_bound": True, "order_bound": True, "vacuous": True}
    lhs_order = l * (p.h + m - 1) - p.h + k
    mu_ok = all((p.h - 1) * p.mu_hat(c) >= c for c in range(p.c0, p.h + 1))
    order_ok = all(
        lhs_order * p.mu_hat(c) - c * (l - 1) >= l * m * p.mu_hat(c)
        for c in range(p.c0, p.h + 1)
    )
    return {"mu_bound": mu_ok, "order_bound": order_ok, "vacuous": False}


def demailly_check(params: FoldParams, l: int, m: int) -> bool:
    """Exact rational comparison alpha(l)/l >= (alpha(m) + h - 1)/(m + h - 1)."""
    if min(l, m) < 1:
        raise ValueError("need l, m >= 1")
    lhs = Fraction(alpha_symbolic(params, l), l)
    rhs = Fraction(alpha_symbolic(params, m) + params.h - 1, m + params.h - 1)
    return lhs >= rhs


class AlphaProfile:
    """Least-degree profile with the bracket around the limit ratio."""

    __slots__ = ("params", "alphas", "ratios", "upper", "demailly_lower")

    def __init__(self, params, alphas, ratios, upper, demailly_lower):
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "ratios", ratios)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "demailly_lower", demailly_lower)

    def __setattr__(self, name, value):
        raise AttributeError("AlphaProfile is immutable")

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "alphas": self.alphas,
            "ratios": [[r.numerator, r.denominator] for r in self.ratios],
            "upper": [self.upper.numerator, self.upper.denominator],
            "demailly_lower": [
                self.demailly_lower.numerator,
                self.demailly_lower.denominator,
            ],
        }


def waldschmidt_profile(params: FoldParams, n_max: int) -> AlphaProfile:
    """alpha values up to n_max with the min-ratio upper bound and the best lower bound."""
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    alphas = [alpha_symbolic(params, n) for n in range(1, n_max + 1)]
    ratios = [Fraction(a, n) for n, a in enumerate(alphas, start=1)]
    upper = min(ratios)
    lower = max(
        Fraction(a + params.h - 1, n + params.h - 1)
        for n, a in enumerate(alphas, start=1)
    )
    return AlphaProfile(params, alphas, ratios, upper, lower)


# ---------------------------------------------------------------------------
# sweeps


def valid_fold_params(s_values, b_values, strict_only: bool = False) -> list[FoldParams]:
    """All valid packs over the given ranges; strict_only keeps c0 < h."""
    out = []
    for s in s_values:
        for b in b_values:
            for a in range((b - 1) * s + 2, b * s + 1):
                p = fold_params(s, b, a)
                if strict_only and p.degenerate:
                    continue
                out.append(p)
    return out


def _sweep_one_params(p: FoldParams, l_max: int, m_max: int, timings: bool) -> list[dict]:
    rows = []
    for k in range(1, p.h + 1):
        for l in range(1, l_max + 1):
            for m in range(1, m_max + 1):
                query = ContainmentQuery(p, k, l, m)
                start = time.perf_counter()
                holds, _ = hh_containment_check(query)
                ineq = lemma_inequalities(p, k, l, m)
                elapsed_ms = (time.perf_counter() - start) * 1000.0
                rows.append(
                    {
                        "s": p.s,
                        "b": p.b,
                        "a": p.a,
                        "h": p.h,
                        "c0": p.c0,
                        "k": k,
                        "l": l,
                        "m": m,
                        "lhs_order": query.lhs_order,
                        "mm_power": query.mm_power,
                        "holds": holds and ineq["mu_bound"] and ineq["order_bound"],
                        "alpha_lhs": alpha_symbolic(p, query.lhs_order),
                        "runtime_ms": f"{elapsed_ms:.1f}" if timings else "",
                    }
                )
    return rows


def sweep_threads() -> int:
    try:
        return max(1, int(os.environ.get("STARCONFIG_THREADS", "1")))
    except ValueError:
        return 1


def containment_sweep(
    params_list, l_max: int = 3, m_max: int = 3, timings: bool = False, threads: int | None = None
) -> list[dict]:
    """Containment and inequality checks over a parameter grid.

    Grid points are independent; with threads > 1, parameter packs are
    distributed over worker processes and results are merged in the input
    order, so the output is deterministic either way.
    """
    params_list = list(params_list)
    threads = sweep_threads() if threads is None else max(1, threads)
    if threads > 1 and len(params_list) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = pool.map(
                _sweep_worker,
                [(p.s, p.b, p.a, l_max, m_max, timings) for p in params_list],
            )
            rows = [row for chunk in chunks for row in chunk]
    else:
        rows = []
        for p in params_list:
            rows.extend(_sweep_one_params(p, l_max, m_max, timings))
    return rows


def _sweep_worker(args) -> list[dict]:
    s, b, a, l_max, m_max, timings = args
    return _sweep_one_params(fold_params(s, b, a), l_max, m_max, timings)


SWEEP_COLUMNS = [
    "s", "b", "a", "h", "c0", "k", "l", "m",
    "lhs_order", "mm_power", "holds", "alpha_lhs", "runtime_ms",
]


def sweep_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row[k] for k in SWEEP_COLUMNS})
    return buf.getvalue()


def subadditivity_holds(params: FoldParams, n1: int, n2: int) -> bool:
    """Product of symbolic powers lands in the symbolic power of the sum.

    Checks every generator product; a common row permutation is free, so
    one factor stays ascending while the other runs over its whole orbit.
    """
    from .combinatorics import distinct_permutations

    low1 = fold_symbolic_lambdas(params, n1)
    low2 = fold_symbolic_lambdas(params, n2)
    thresholds = params.thresholds(n1 + n2)
    for lam1, lam2 in itertools.product(low1, low2):
        for perm in distinct_permutations(lam1):
            vec = [x + y for x, y in zip(perm, lam2)]
            if not sorted_prefix_member(vec, thresholds):
                return False
    return True
