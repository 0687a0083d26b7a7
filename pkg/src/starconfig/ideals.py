"""Monomial ideals: minimal generating sets and exact ideal arithmetic.

A `MonomialIdeal` is stored as the divisibility antichain of its
generators, in a canonical order (total degree, then lexicographic on the
row-major exponent vector).  The zero ideal has no generators; the unit
ideal is generated by 1.  All operations are pure; grid-ring operands
with different level counts are embedded into the common larger ring.

Divisibility filtering switches to a vectorized numpy path once the
candidate-times-kept product gets large; results are identical either way.
"""

from __future__ import annotations

import numpy as np

from .monomials import Monomial, one
from .rings import RingDescriptor, common_ring

_VECTOR_THRESHOLD = 30_000
_CHUNK = 2048


def _divisible_any(kept_mat: np.ndarray, cand_mat: np.ndarray) -> np.ndarray:
    """Boolean mask over candidates: divisible by at least one kept row."""
    out = np.zeros(len(cand_mat), dtype=bool)
    for lo in range(0, len(cand_mat), _CHUNK):
        block = cand_mat[lo : lo + _CHUNK]
        hit = (kept_mat[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
        out[lo : lo + _CHUNK] = hit
    return out


def _antichain(ring: RingDescriptor, monomials) -> tuple[Monomial, ...]:
    """Divisibility antichain of a monomial set, in canonical order."""
    distinct = {m if m.ring == ring else m.in_ring(ring) for m in monomials}
    if any(m.is_one for m in distinct):
        return (one(ring),)
    if not distinct:
        return ()
    variables = ring.variables()
    ordered = sorted(distinct, key=lambda m: m.sort_key(variables))
    kept: list[Monomial] = []
    kept_vecs: list[tuple[int, ...]] = []
    kept_mat = None
    i = 0
    while i < len(ordered):
        j = i
        deg = ordered[i].degree
        while j < len(ordered) and ordered[j].degree == deg:
            j += 1
        group = ordered[i:j]
        if not kept:
            survivors = group
        elif len(kept) * len(group) >= _VECTOR_THRESHOLD:
            if kept_mat is None or len(kept_mat) != len(kept):
                kept_mat = np.array(kept_vecs, dtype=np.int32)
            cand_mat = np.array(
                [m.flat_vector(variables) for m in group], dtype=np.int32
            )
            mask = _divisible_any(kept_mat, cand_mat)
            survivors = [m for m, hit in zip(group, mask) if not hit]
        else:
            survivors = [
                m for m in group if not any(k.divides(m) for k in kept)
            ]
        kept.extend(survivors)
        if kept_mat is not None and survivors:
            kept_vecs.extend(m.flat_vector(variables) for m in survivors)
            kept_mat = None
        elif kept_mat is None:
            kept_vecs.extend(m.flat_vector(variables) for m in survivors)
        i = j
    return tuple(kept)


class MonomialIdeal:
    __slots__ = ("ring", "gens", "_table")

    def __init__(self, ring: RingDescriptor, gens: tuple[Monomial, ...], _minimal=False):
        if not _minimal:
            gens = _antichain(ring, gens)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "_table", None)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        if self.is_zero:
            return "MonomialIdeal(0)"
        return f"MonomialIdeal({', '.join(str(g) for g in self.gens)})"

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    def table(self):
        """(variable list, numpy exponent matrix) over the full ring, cached."""
        if self._table is None:
            variables = self.ring.variables()
            mat = np.array(
                [g.flat_vector(variables) for g in self.gens], dtype=np.int32
            ).reshape(len(self.gens), len(variables))
            object.__setattr__(self, "_table", (variables, mat))
        return self._table

    def in_ring(self, ring: RingDescriptor) -> "MonomialIdeal":
        if ring == self.ring:
            return self
        gens = tuple(g.in_ring(ring) for g in self.gens)
        variables = ring.variables()
        gens = tuple(sorted(gens, key=lambda m: m.sort_key(variables)))
        return MonomialIdeal(ring, gens, _minimal=True)

    def contains_monomial(self, f: Monomial) -> bool:
        return membership(f, self)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "generators": [g.to_json() for g in self.gens],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        ring = RingDescriptor.from_json(data["ring"])
        gens = [Monomial.from_json(ring, g) for g in data["generators"]]
        return ideal(ring, gens)


def ideal(ring: RingDescriptor, gens) -> MonomialIdeal:
    """The ideal generated by the given monomials, minimalized."""
    gens = list(gens)
    for g in gens:
        if g.ring != ring:
            common_ring(g.ring, ring)  # raises on true mismatch
    return MonomialIdeal(ring, tuple(gens))


def zero_ideal(ring: RingDescriptor) -> MonomialIdeal:
    return MonomialIdeal(ring, (), _minimal=True)


def unit_ideal(ring: RingDescriptor) -> MonomialIdeal:
    return MonomialIdeal(ring, (one(ring),), _minimal=True)


def minimalize(gens) -> MonomialIdeal:
    """Antichain of a nonempty monomial collection; rings must agree."""
    gens = list(gens)
    if not gens:
        raise ValueError("cannot infer the ring of an empty generator set; use zero_ideal")
    ring = gens[0].ring
    for g in gens[1:]:
        ring = common_ring(ring, g.ring)
    return MonomialIdeal(ring, tuple(gens))


def _coerce_pair(I: MonomialIdeal, J: MonomialIdeal):
    ring = common_ring(I.ring, J.ring)
    return I.in_ring(ring), J.in_ring(ring), ring


def colon(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """The colon ideal I : f, computed generator-wise as g / gcd(f, g)."""
    ring = common_ring(I.ring, f.ring)
    quotients = [g.in_ring(ring).div(g.in_ring(ring).gcd(f.in_ring(ring))) for g in I.gens]
    return MonomialIdeal(ring, tuple(quotients))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms of the generators."""
    I, J, ring = _coerce_pair(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(ring)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    if len(I) * len(J) < 4_000:
        cands = {g.lcm(h) for g in I.gens for h in J.gens}
        return MonomialIdeal(ring, tuple(cands))
    variables, amat = I.table()
    _, bmat = J.table()
    rows = []
    for lo in range(0, len(amat), 256):
        blk = amat[lo : lo + 256]
        lcm = np.maximum(blk[:, None, :], bmat[None, :, :])
        rows.append(lcm.reshape(-1, lcm.shape[-1]))
    cand = np.unique(np.vstack(rows), axis=0)
    gens = [
        Monomial(ring, {v: int(e) for v, e in zip(variables, row) if e})
        for row in cand
    ]
    return MonomialIdeal(ring, tuple(gens))


def intersect_many(ideals) -> MonomialIdeal:
    """n-ary intersection, folded smallest-first to bound intermediate growth."""
    ideals = list(ideals)
    if not ideals:
        raise ValueError("empty intersection is the unit ideal of an unknown ring")
    ideals.sort(key=len)
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = intersect(acc, nxt)
    return acc


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I, J, ring = _coerce_pair(I, J)
    if I.is_zero or J.is_zero:
        return zero_ideal(ring)
    cands = {g.mul(h) for g in I.gens for h in J.gens}
    return MonomialIdeal(ring, tuple(cands))


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """I^n for n >= 1; n = 0 returns the unit ideal by convention."""
    if n < 0:
        raise ValueError("negative ideal power")
    if n == 0:
        return unit_ideal(I.ring)
    acc = I
    for _ in range(n - 1):
        acc = product(acc, I)
    return acc


def sum_ideals(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I, J, ring = _coerce_pair(I, J)
    return MonomialIdeal(ring, I.gens + J.gens)


def membership(f: Monomial, I: MonomialIdeal) -> bool:
    """True iff some minimal generator divides f."""
    if I.is_zero:
        return False
    ring = common_ring(I.ring, f.ring)
    I = I.in_ring(ring)
    f = f.in_ring(ring)
    if len(I) > 64:
        variables, mat = I.table()
        vec = np.array(f.flat_vector(variables), dtype=np.int32)
        return bool((mat <= vec).all(axis=1).any())
    return any(g.divides(f) for g in I.gens)


def saturate(I: MonomialIdeal, variables) -> MonomialIdeal:
    """Saturation with respect to the product of the given variables.

    Erases the exponents on `variables` from every generator, which equals
    (I : u^infinity) for u the product of those variables.
    """
    kill = {tuple(v) for v in variables}
    for v in kill:
        I.ring.check_var(v)
    gens = [g.erase(kill) for g in I.gens]
    return MonomialIdeal(I.ring, tuple(gens))


def alpha(I: MonomialIdeal) -> int:
    """Least degree of a nonzero element = least generator degree."""
    if I.is_zero or I.is_unit:
        raise ValueError("alpha needs a proper nonzero ideal")
    return min(g.degree for g in I.gens)
