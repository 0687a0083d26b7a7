"""Uniform fold ideals of monomial star configurations and their symbolic powers.

The parameter pack (s, b, a) fixes the fold ideal generated by all products
z_1^{n_1}...z_s^{n_s} with 0 <= n_i <= b and sum a.  Its m-th symbolic power
is an intersection of symbolic powers of star configuration ideals, which
makes membership a prefix-sum test on the ascending exponent tuple:
the c smallest exponents must sum to at least m * mu_hat(c) for every c in
[c0, h].  Minimal generators are enumerated directly from that criterion;
`symbolic_oracle` recomputes the same ideal from the definition (associated
primes, saturations of the ordinary power) as an independent cross-check.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .combinatorics import ascending_tuples_capped, distinct_permutations
from .decomposition import associated_primes
from .ideals import (
    MonomialIdeal,
    intersect_many,
    membership,
    power,
    saturate,
    unit_ideal,
)
from .monomials import Monomial, from_exponents
from .rings import plain_ring
from .sss import SSSIdeal, is_sss, verify_linear_quotients


class SettingError(ValueError):
    """Parameter pack violates the validity constraints."""


class FoldParams:
    """Arithmetic pack for the uniform fold ideal; all fields derived once."""

    __slots__ = ("s", "b", "a", "h", "c0", "mu_a0", "form_degree", "degenerate")

    def __init__(self, s, b, a, h, c0, mu_a0, form_degree, degenerate):
        for name, val in [
            ("s", s), ("b", b), ("a", a), ("h", h), ("c0", c0),
            ("mu_a0", mu_a0), ("form_degree", form_degree), ("degenerate", degenerate),
        ]:
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError("FoldParams is immutable")

    def __eq__(self, other):
        return isinstance(other, FoldParams) and (
            (self.s, self.b, self.a, self.form_degree)
            == (other.s, other.b, other.a, other.form_degree)
        )

    def __hash__(self):
        return hash((self.s, self.b, self.a, self.form_degree))

    def __repr__(self):
        return f"FoldParams(s={self.s}, b={self.b}, a={self.a}, h={self.h}, c0={self.c0})"

    def mu_hat(self, c: int) -> int:
        if not self.c0 <= c <= self.h:
            raise ValueError(f"mu_hat needs c0 <= c <= h, got c={c}")
        return self.mu_a0 + self.b * (c - self.c0)

    def thresholds(self, m: int) -> dict[int, int]:
        return {c: m * self.mu_hat(c) for c in range(self.c0, self.h + 1)}

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "b": self.b,
            "a": self.a,
            "h": self.h,
            "c0": self.c0,
            "mu_a0": self.mu_a0,
            "mu_hat": [self.mu_hat(c) for c in range(self.c0, self.h + 1)],
            "form_degree": self.form_degree,
            "degenerate": self.degenerate,
        }


def fold_params(s: int, b: int, a: int, form_degree: int = 1) -> FoldParams:
    """Validate (s, b, a) and derive h, c0, mu_a0.

    Degenerate packs (b = 1 or a = b*s, equivalently c0 = h) are accepted
    and flagged; everything downstream still applies to them.
    """
    if s < 2:
        raise SettingError(f"need s >= 2, got s={s}")
    if b < 1:
        raise SettingError(f"need b >= 1, got b={b}")
    if form_degree < 1:
        raise SettingError(f"need form degree >= 1, got {form_degree}")
    if not (b - 1) * s + 1 < a <= b * s:
        raise SettingError(
            f"need (b-1)*s+1 < a <= b*s, i.e. {(b - 1) * s + 1} < a <= {b * s}, got a={a}"
        )
    h = b * s - a + 1
    c0 = s - (a - 1) // b
    mu_a0 = a - b * (s - c0)
    if not (1 <= c0 <= h <= s and 1 <= mu_a0 <= b):
        raise SettingError(f"derived constants out of range for (s,b,a)=({s},{b},{a})")
    assert mu_a0 + b * (h - c0) == b * h - (b * s - a)
    return FoldParams(s, b, a, h, c0, mu_a0, form_degree, degenerate=(c0 == h))


def fold_ideal(params: FoldParams) -> MonomialIdeal:
    """All exponent vectors with entries <= b summing to a (an antichain)."""
    ring = plain_ring(params.s)
    gens = []

    def rec(prefix, remaining):
        pos = len(prefix)
        if pos == params.s:
            if remaining == 0:
                gens.append(from_exponents(ring, prefix))
            return
        left = params.s - pos - 1
        lo = max(0, remaining - left * params.b)
        hi = min(params.b, remaining)
        for v in range(lo, hi + 1):
            rec(prefix + [v], remaining - v)

    rec([], params.a)
    variables = ring.variables()
    gens.sort(key=lambda m: m.sort_key(variables))
    return MonomialIdeal(ring, tuple(gens), _minimal=True)


# ---------------------------------------------------------------------------
# prefix-sum membership and minimal generators


def sorted_prefix_member(exponents, thresholds: dict[int, int]) -> bool:
    """Membership test: ascending prefix sums meet every threshold."""
    lam = sorted(exponents)
    prefix = 0
    pos = 0
    for c in sorted(thresholds):
        while pos < c:
            prefix += lam[pos]
            pos += 1
        if prefix < thresholds[c]:
            return False
    return True


def minimal_threshold_partitions(s: int, thresholds: dict[int, int]) -> list[tuple[int, ...]]:
    """Minimal ascending s-tuples whose prefix sums meet the thresholds.

    Positions beyond the last constrained index stay at the last value; a
    position never exceeds the smallest level that lets flat continuation
    satisfy every remaining threshold, which bounds the search to a small
    superset of the minimal elements.  A final dominance filter makes the
    result exact.
    """
    cs = sorted(thresholds)
    h = cs[-1]
    if h > s:
        raise ValueError("threshold index exceeds the number of variables")
    candidates: list[tuple[int, ...]] = []
    cur: list[int] = []

    def rec(pos: int, prefix: int, last: int):
        if pos > h:
            candidates.append(tuple(cur) + (last,) * (s - h))
            return
        vcap = last
        for c in cs:
            if c >= pos:
                need = thresholds[c] - prefix
                if need > 0:
                    per = -(-need // (c - pos + 1))
                    if per > vcap:
                        vcap = per
        for x in range(last, vcap + 1):
            if pos in thresholds and prefix + x < thresholds[pos]:
                continue
            cur.append(x)
            rec(pos + 1, prefix + x, x)
            cur.pop()

    rec(1, 0, 0)
    candidates.sort(key=sum)
    kept: list[tuple[int, ...]] = []
    for cand in candidates:
        if not any(all(k[i] <= cand[i] for i in range(s)) for k in kept):
            kept.append(cand)
    kept.sort()
    return kept


def symmetric_ideal_from_partitions(s: int, partitions) -> MonomialIdeal:
    """Ideal generated by all coordinate permutations of the given tuples."""
    ring = plain_ring(s)
    gens = []
    for lam in partitions:
        for perm in distinct_permutations(lam):
            gens.append(from_exponents(ring, perm))
    variables = ring.variables()
    gens = sorted(set(gens), key=lambda m: m.sort_key(variables))
    return MonomialIdeal(ring, tuple(gens), _minimal=True)


def star_symbolic(c: int, m: int, s: int) -> MonomialIdeal:
    """m-th symbolic power of the codimension-c star configuration ideal.

    A monomial belongs iff its c smallest exponents sum to at least m,
    equivalently it lies in every <c variables>^m.
    """
    if not 1 <= c <= s:
        raise ValueError(f"need 1 <= c <= s, got c={c}")
    if m < 1:
        raise ValueError("need m >= 1")
    return symmetric_ideal_from_partitions(s, minimal_threshold_partitions(s, {c: m}))


@lru_cache(maxsize=None)
def fold_symbolic_lambdas(params: FoldParams, m: int) -> tuple[tuple[int, ...], ...]:
    if m < 1:
        raise ValueError("need m >= 1")
    return tuple(minimal_threshold_partitions(params.s, params.thresholds(m)))


def fold_symbolic(params: FoldParams, m: int) -> MonomialIdeal:
    """m-th symbolic power of the fold ideal, via the prefix-sum criterion."""
    return symmetric_ideal_from_partitions(params.s, fold_symbolic_lambdas(params, m))


def fold_symbolic_contains(params: FoldParams, m: int, f: Monomial) -> bool:
    """Prefix-sum membership of a plain-ring monomial in the m-th symbolic power."""
    vec = [f.exponent((i,)) for i in range(1, params.s + 1)]
    return sorted_prefix_member(vec, params.thresholds(m))


def star_symbolic_by_intersection(c: int, m: int, s: int) -> MonomialIdeal:
    """Definition-shaped route: intersect <c variables>^m over all c-subsets."""
    ring = plain_ring(s)
    pieces = []
    for subset in itertools.combinations(range(1, s + 1), c):
        prime = MonomialIdeal(ring, tuple(Monomial(ring, {(i,): 1}) for i in subset))
        pieces.append(power(prime, m))
    return intersect_many(pieces)


def symbolic_oracle(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """Symbolic power from the definition: localize the ordinary power.

    Associated primes come from the irredundant irreducible decomposition;
    for each, the power is saturated at the complementary variables, and
    the results are intersected.
    """
    if I.is_zero or I.is_unit:
        raise ValueError("symbolic power needs a proper nonzero ideal")
    if m < 1:
        raise ValueError("need m >= 1")
    primes = associated_primes(I)
    ordinary = power(I, m)
    all_vars = set(I.ring.variables())
    pieces = [saturate(ordinary, all_vars - set(p)) for p in primes]
    return intersect_many(pieces)


# ---------------------------------------------------------------------------
# the polarization-dual pipeline


def pol_dual_sss(params: FoldParams, m: int) -> SSSIdeal:
    """Dual of the polarized symbolic power, built directly as an SSS ideal.

    For each c in [c0, h] with level budget q = m * mu_hat(c), the stratum
    contributes all ascending level tuples in [1, q]^c with sum <= q + c - 1;
    the strata are drop-closed, so minimalization happens inside the class.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    levels = max(m * params.mu_hat(c) for c in range(params.c0, params.h + 1))
    lams = []
    for c in range(params.c0, params.h + 1):
        q = m * params.mu_hat(c)
        for tup in ascending_tuples_capped(c, q, q + c - 1):
            lams.append((0,) * (params.s - c) + tup)
    return SSSIdeal.from_lambdas(params.s, levels, lams, closed=True)


class SeqCMCertificate:
    """Bundle of checks certifying sequential Cohen-Macaulayness of a symbolic power.

    The conclusion holds iff the dual of the polarized ideal is sparse
    symmetric shifted and its linear-quotient certificate verifies, which
    chains into componentwise linearity of the dual.
    """

    __slots__ = ("params", "m", "dual", "sss_ok", "sss_witness", "quotients", "conclusion", "failed_stage")

    def __init__(self, params, m, dual, sss_ok, sss_witness, quotients, conclusion, failed_stage):
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "dual", dual)
        object.__setattr__(self, "sss_ok", sss_ok)
        object.__setattr__(self, "sss_witness", sss_witness)
        object.__setattr__(self, "quotients", quotients)
        object.__setattr__(self, "conclusion", conclusion)
        object.__setattr__(self, "failed_stage", failed_stage)

    def __setattr__(self, name, value):
        raise AttributeError("SeqCMCertificate is immutable")

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "m": self.m,
            "dual": self.dual.to_json(),
            "generator_count": len(self.dual.generators()),
            "is_sss": self.sss_ok,
            "sss_witness": self.sss_witness,
            "linear_quotients_valid": self.quotients.valid if self.quotients else None,
            "conclusion": self.conclusion,
            "failed_stage": self.failed_stage,
        }


def seqcm_certificate(params: FoldParams, m: int) -> SeqCMCertificate:
    dual = pol_dual_sss(params, m)
    sss_ok, witness = is_sss(dual.ideal())
    if not sss_ok:
        return SeqCMCertificate(params, m, dual, False, witness, None, False, "is_sss")
    cert = verify_linear_quotients(dual)
    if not cert.valid:
        return SeqCMCertificate(params, m, dual, True, None, cert, False, "linear_quotients")
    return SeqCMCertificate(params, m, dual, True, None, cert, True, None)


def filtration(params: FoldParams, m: int) -> list[MonomialIdeal]:
    """Chain K_0 <= K_1 <= ... <= unit, dropping the top star factor each step."""
    out = []
    for j in range(0, params.h - params.c0 + 1):
        thresholds = {
            c: m * params.mu_hat(c) for c in range(params.c0, params.h - j + 1)
        }
        out.append(
            symmetric_ideal_from_partitions(
                params.s, minimal_threshold_partitions(params.s, thresholds)
            )
        )
    out.append(unit_ideal(plain_ring(params.s)))
    return out


# ---------------------------------------------------------------------------
# export


def cas_snippet(I: MonomialIdeal, name: str = "I") -> str:
    """Input snippet in computer-algebra syntax for external cross-checking."""
    ring = I.ring
    if ring.kind == "plain":
        var_names = {v: f"z_{v[0]}" for v in ring.variables()}
    else:
        var_names = {v: f"z_({v[0]},{v[1]})" for v in ring.variables()}
    ring_line = f"R = QQ[{', '.join(var_names[v] for v in ring.variables())}];"
    terms = []
    for g in I.gens:
        if g.is_one:
            terms.append("1_R")
            continue
        factors = []
        for v, e in g.exps:
            factors.append(var_names[v] if e == 1 else f"{var_names[v]}^{e}")
        terms.append("*".join(factors))
    ideal_line = f"{name} = ideal({', '.join(terms) if terms else '0_R'});"
    return ring_line + "\n" + ideal_line + "\n"
