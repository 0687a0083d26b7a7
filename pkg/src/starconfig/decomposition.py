"""Irreducible decomposition, Alexander duality, and polarization.

Two exact decomposition routes are provided.  The splitting route
recursively factors a generator with at least two variables into a
coprime pair, memoized on the canonical generator set.  The corner route
enumerates candidate irreducible ideals whose exponents occur among the
generator exponents and keeps the inclusion-minimal ones; it vectorizes
well and is used automatically for large plain-ring inputs.  Both end
with the same irredundancy filter: a component survives iff bumping any
of its finite corner coordinates lands inside the ideal.
"""

from __future__ import annotations

import itertools

import numpy as np

from .ideals import MonomialIdeal, membership, minimalize, zero_ideal
from .monomials import Monomial, variable
from .rings import RingDescriptor, grid_ring, plain_ring

_CORNER_SPACE_LIMIT = 2_000_000
_SPLIT_GEN_LIMIT = 40


class IrreducibleComponent:
    """An irreducible monomial ideal <z_v^{e_v} : v>, stored as its exponent map."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring: RingDescriptor, entries):
        items = tuple(sorted((tuple(v), int(e)) for v, e in dict(entries).items()))
        if not items:
            raise ValueError("irreducible component needs at least one variable")
        if any(e < 1 for _, e in items):
            raise ValueError("component exponents must be positive")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "entries", items)

    def __setattr__(self, name, value):
        raise AttributeError("IrreducibleComponent is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, IrreducibleComponent)
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        inner = ", ".join(
            self.ring.var_name(v) + ("" if e == 1 else f"^{e}")
            for v, e in self.entries
        )
        return f"<{inner}>"

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self.entries)

    @property
    def is_prime(self) -> bool:
        return all(e == 1 for _, e in self.entries)

    def as_ideal(self) -> MonomialIdeal:
        gens = [Monomial(self.ring, {v: e}) for v, e in self.entries]
        return minimalize(gens)


def _split_leaves(I: MonomialIdeal) -> set[tuple]:
    """All leaves of the coprime-splitting recursion, as entries tuples."""
    ring = I.ring
    memo: dict[tuple, frozenset] = {}

    def rec(gens: tuple[Monomial, ...]) -> frozenset:
        cached = memo.get(gens)
        if cached is not None:
            return cached
        target = None
        for g in gens:
            if len(g.exps) >= 2:
                target = g
                break
        if target is None:
            # every generator is a pure power; minimality leaves one per variable
            comp = tuple((g.exps[0][0], g.exps[0][1]) for g in gens)
            result = frozenset({tuple(sorted(comp))})
        else:
            v, e = target.exps[0]
            left = MonomialIdeal(ring, gens + (Monomial(ring, {v: e}),))
            right = MonomialIdeal(ring, gens + (target.div(Monomial(ring, {v: e})),))
            result = rec(left.gens) | rec(right.gens)
        memo[gens] = result
        return result

    return set(rec(I.gens))


def _corner_candidates(I: MonomialIdeal) -> list[tuple]:
    """Entries tuples of all inclusion-minimal irreducible ideals containing I.

    Candidate exponents per variable are exactly the exponents occurring in
    the generators; a candidate (S, e) contains I iff the corner monomial
    with exponents e_v - 1 on S and "infinity" elsewhere lies outside I,
    and it is inclusion-minimal iff every finite corner bump re-enters I.
    """
    variables, mat = I.table()
    nv = len(variables)
    choices = []
    space = 1
    for col in range(nv):
        vals = sorted({int(x) for x in mat[:, col] if x > 0})
        choices.append([0] + vals)
        space *= 1 + len(vals)
        if space > _CORNER_SPACE_LIMIT:
            raise ValueError(
                f"corner decomposition space {space}+ too large; use the splitting method"
            )

    cand = np.array(list(itertools.product(*choices)), dtype=np.int32)
    keep_rows = []
    for lo in range(0, len(cand), 512):
        blk = cand[lo : lo + 512]
        active = blk > 0
        # ge[b, g, j]: generator g meets or exceeds the candidate exponent at j
        ge = (mat[None, :, :] >= blk[:, None, :]) & active[:, None, :]
        cnt = ge.sum(axis=2)
        standard = (cnt >= 1).all(axis=1)
        # a coordinate bump re-enters the ideal iff some generator sits at the
        # candidate exponent there and strictly below it everywhere else
        single = ge & (cnt == 1)[:, :, None] & (mat[None, :, :] == blk[:, None, :])
        bump_ok = single.any(axis=1) | ~active
        keep = standard & bump_ok.all(axis=1)
        keep_rows.extend(lo + int(i) for i in np.nonzero(keep)[0])

    out = []
    for idx in keep_rows:
        entries = tuple(
            (variables[col], int(cand[idx, col]))
            for col in range(nv)
            if cand[idx, col] > 0
        )
        if entries:
            out.append(entries)
    return out


def _irredundant(I: MonomialIdeal, leaves) -> list[tuple]:
    """Keep exactly the canonical components: every finite corner bump enters I."""
    variables, mat = I.table()
    big = int(mat.max()) + 1
    kept = []
    for entries in leaves:
        emap = dict(entries)
        base = {v: big for v in variables}
        base.update({v: e - 1 for v, e in entries})
        ok = True
        for v in emap:
            bump = dict(base)
            bump[v] += 1
            if not membership(Monomial(I.ring, bump), I):
                ok = False
                break
        if ok:
            kept.append(entries)
    return kept


def irreducible_decomposition(I: MonomialIdeal, method: str = "auto"):
    """Irredundant irreducible decomposition of a proper nonzero monomial ideal."""
    if I.is_zero or I.is_unit:
        raise ValueError("irreducible decomposition needs a proper nonzero ideal")
    cached = _decomposition_cache.get((I, method))
    if cached is not None:
        return cached
    if method == "auto":
        method = "split" if len(I) <= _SPLIT_GEN_LIMIT else "corner"
        if method == "corner":
            try:
                comps = _corner_candidates(I)
            except ValueError:
                comps = _irredundant(I, _split_leaves(I))
        else:
            comps = _irredundant(I, _split_leaves(I))
    elif method == "split":
        comps = _irredundant(I, _split_leaves(I))
    elif method == "corner":
        comps = _corner_candidates(I)
    else:
        raise ValueError(f"unknown method {method!r}")
    comps = sorted(set(comps), key=lambda c: (len(c), c))
    result = tuple(IrreducibleComponent(I.ring, dict(c)) for c in comps)
    if len(_decomposition_cache) > 256:
        _decomposition_cache.clear()
    _decomposition_cache[(I, method)] = result
    return result


_decomposition_cache: dict = {}


def associated_primes(I: MonomialIdeal, method: str = "auto") -> tuple[frozenset, ...]:
    """Supports of the irredundant irreducible components, deduplicated."""
    supports = {c.support for c in irreducible_decomposition(I, method)}
    return tuple(sorted(supports, key=lambda s: (len(s), sorted(s))))


def height(I: MonomialIdeal, method: str = "auto") -> int:
    return min(len(c.support) for c in irreducible_decomposition(I, method))


def big_height(I: MonomialIdeal, method: str = "auto") -> int:
    return max(len(c.support) for c in irreducible_decomposition(I, method))


def minimal_hitting_sets(edges) -> list[frozenset]:
    """All minimal transversals of a set system, each exactly once.

    Depth-first search branching on an uncovered edge with the fewest
    remaining candidate vertices; a branch is cut as soon as some chosen
    vertex loses its last private edge, so every leaf is minimal.
    """
    edges = [frozenset(e) for e in edges]
    if not edges:
        return []
    if any(not e for e in edges):
        return []
    vertices = sorted(set().union(*edges))
    vid = {v: i for i, v in enumerate(vertices)}
    masks = sorted({sum(1 << vid[v] for v in e) for e in edges})
    # an edge containing another is hit automatically; drop it
    masks = [
        m for m in masks
        if not any(m != n and m & n == n for n in masks)
    ]
    ne = len(masks)
    vertex_edges = [0] * len(vertices)
    for j, m in enumerate(masks):
        for i in range(len(vertices)):
            if m >> i & 1:
                vertex_edges[i] |= 1 << j
    edge_verts = masks
    all_edges = (1 << ne) - 1

    results = []
    S: list[int] = []
    crit: dict[int, int] = {}

    def rec(uncov: int, excluded: int):
        if uncov == 0:
            results.append(frozenset(vertices[i] for i in S))
            return
        best, best_cands, best_count = -1, 0, None
        probe = uncov
        while probe:
            j = (probe & -probe).bit_length() - 1
            probe &= probe - 1
            cands = edge_verts[j] & ~excluded
            cnt = bin(cands).count("1")
            if best_count is None or cnt < best_count:
                best, best_cands, best_count = j, cands, cnt
                if cnt <= 1:
                    break
        cands = best_cands
        local_excluded = excluded
        while cands:
            vbit = cands & -cands
            cands &= cands - 1
            v = vbit.bit_length() - 1
            ev = vertex_edges[v]
            saved = []
            ok = True
            for w in S:
                reduced = crit[w] & ~ev
                if reduced == 0:
                    ok = False
                    break
                saved.append((w, crit[w]))
                crit[w] = reduced
            if ok:
                crit[v] = uncov & ev
                S.append(v)
                rec(uncov & ~ev, local_excluded)
                S.pop()
                del crit[v]
            for w, old in saved:
                crit[w] = old
            local_excluded |= vbit

    rec(all_edges, 0)
    return sorted(results, key=lambda t: (len(t), sorted(t)))


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Dual of a squarefree ideal: products of the minimal transversals of supports."""
    if I.is_zero or I.is_unit:
        raise ValueError("alexander dual needs a proper nonzero ideal")
    if not I.is_squarefree:
        raise ValueError("alexander dual is defined for squarefree ideals only")
    transversals = minimal_hitting_sets([g.support for g in I.gens])
    gens = [Monomial(I.ring, {v: 1 for v in t}) for t in transversals]
    return minimalize(gens) if gens else zero_ideal(I.ring)


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Standard polarization z_i^e -> z_{i,1}...z_{i,e} into a grid ring."""
    if I.ring.kind != "plain":
        raise ValueError("polarize takes an ideal over a plain ring")
    if I.is_zero:
        raise ValueError("polarize needs a nonzero ideal")
    levels = max((max((e for _, e in g.exps), default=1) for g in I.gens), default=1)
    ring = grid_ring(I.ring.s, max(levels, 1))
    gens = []
    for g in I.gens:
        exps = {}
        for (i,), e in g.exps:
            for j in range(1, e + 1):
                exps[(i, j)] = 1
        gens.append(Monomial(ring, exps))
    return MonomialIdeal(ring, tuple(gens))


def depolarize(I: MonomialIdeal) -> MonomialIdeal:
    """Collapse a grid ideal back to the plain ring via z_{i,j} -> z_i."""
    if I.ring.kind != "grid":
        raise ValueError("depolarize takes a grid-ring ideal")
    ring = plain_ring(I.ring.s)
    gens = []
    for g in I.gens:
        exps: dict[tuple, int] = {}
        for (i, _), e in g.exps:
            exps[(i,)] = exps.get((i,), 0) + e
        gens.append(Monomial(ring, exps))
    return MonomialIdeal(ring, tuple(gens))


def same_ideal_any_levels(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Equality of grid ideals compared in a common ring (levels may differ)."""
    if I.ring.kind != "grid" or J.ring.kind != "grid" or I.ring.s != J.ring.s:
        return I == J
    a = {g.exps for g in I.gens}
    b = {g.exps for g in J.gens}
    return a == b


def variables_of(ring: RingDescriptor, vars_iter):
    return [variable(ring, v) for v in vars_iter]
