"""Graded Betti numbers of sparse symmetric shifted ideals, three ways.

`betti_closed` evaluates the per-partition closed formula, `betti_mapping_cone`
counts binomials of quotient-set sizes along the linear-quotient order, and
`betti_homology_oracle` recomputes everything from scratch through reduced
simplicial homology of induced subcomplexes over a prime field.  The three
must agree entrywise on the ideals in scope.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict

import numpy as np

from .combinatorics import binomial
from .ideals import MonomialIdeal
from .sss import SSSIdeal, QuotientCertificate, suppdeg, verify_linear_quotients, weight

_HOMOLOGY_VAR_LIMIT = 12


class LambdaStats:
    """Numeric profile of one partition stratum."""

    __slots__ = ("suppdeg", "weight", "top", "p", "r", "p_tri", "type_factorial")

    def __init__(self, suppdeg, weight, top, p, r, p_tri, type_factorial):
        object.__setattr__(self, "suppdeg", suppdeg)
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "p_tri", p_tri)
        object.__setattr__(self, "type_factorial", type_factorial)

    def __setattr__(self, name, value):
        raise AttributeError("LambdaStats is immutable")

    def __repr__(self):
        return (
            f"LambdaStats(d={self.suppdeg}, w={self.weight}, top={self.top}, "
            f"p={self.p}, r={self.r}, p_tri={self.p_tri}, type!={self.type_factorial})"
        )


def lambda_stats(lam) -> LambdaStats:
    """Stratum statistics of a nonzero partition.

    p counts the nonzero entries below the top value, r the entries equal
    to it; p_tri = weight + s*(top-1) - top*suppdeg counts the variables
    strictly under the non-top part of the staircase.
    """
    lam = tuple(lam)
    s = len(lam)
    if not any(lam):
        raise ValueError("the zero partition has no stats")
    top = lam[-1]
    d = suppdeg(lam)
    w = weight(lam)
    p = sum(1 for x in lam if 1 <= x < top)
    r = sum(1 for x in lam if x == top)
    p_tri = w + s * (top - 1) - top * d
    counts = Counter(x for x in lam if 1 <= x <= top - 1)
    type_factorial = 1
    for c in counts.values():
        type_factorial *= math.factorial(c)
    return LambdaStats(d, w, top, p, r, p_tri, type_factorial)


class BettiTable:
    """Sparse table (i, d) -> beta_{i, i+d}; d is the generator-degree stratum."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        object.__setattr__(self, "entries", {})
        if entries:
            for (i, d), v in dict(entries).items():
                self.add(i, d, v)

    def __setattr__(self, name, value):
        raise AttributeError("use add()")

    def add(self, i: int, d: int, value: int):
        if value:
            key = (i, d)
            self.entries[key] = self.entries.get(key, 0) + value
            if not self.entries[key]:
                del self.entries[key]

    def get(self, i: int, d: int) -> int:
        return self.entries.get((i, d), 0)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @property
    def projective_dimension(self) -> int:
        if self.is_zero:
            raise ValueError("zero table")
        return max(i for i, _ in self.entries)

    @property
    def regularity(self) -> int:
        if self.is_zero:
            raise ValueError("zero table")
        return max(d for _, d in self.entries)

    def strata(self) -> list[int]:
        return sorted({d for _, d in self.entries})

    def row(self, d: int) -> list[int]:
        width = self.projective_dimension + 1
        return [self.get(i, d) for i in range(width)]

    def total(self) -> list[int]:
        width = self.projective_dimension + 1
        return [sum(self.get(i, d) for d in self.strata()) for i in range(width)]

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __repr__(self):
        return f"BettiTable({self.entries})"

    def to_json(self) -> dict:
        return {
            "rows": {str(d): self.row(d) for d in self.strata()},
            "total": self.total(),
        }

    def render(self) -> str:
        """Aligned diagram; the row labelled r holds the d = r + 1 stratum."""
        if self.is_zero:
            return "(zero table)"
        width = self.projective_dimension + 1
        rows = [("total:", self.total())]
        for d in self.strata():
            rows.append((f"{d - 1}:", self.row(d)))
        header = [""] + [str(i) for i in range(width)]
        cols = [max(len(header[k + 1]), *(len(str(vals[k])) for _, vals in rows)) for k in range(width)]
        label_w = max(len(lbl) for lbl, _ in rows)
        lines = [
            " ".join([" " * label_w] + [str(i).rjust(cols[k]) for k, i in enumerate(range(width))])
        ]
        for lbl, vals in rows:
            cells = [str(v) if v else "." for v in vals]
            lines.append(" ".join([lbl.rjust(label_w)] + [c.rjust(cols[k]) for k, c in enumerate(cells)]))
        return "\n".join(lines)


def table_stats(table: BettiTable) -> dict:
    """Projective dimension and regularity read off a nonzero table."""
    return {
        "projective_dimension": table.projective_dimension,
        "regularity": table.regularity,
    }


def betti_closed(J: SSSIdeal) -> BettiTable:
    """Closed-formula table: per partition, a convolution of binomials."""
    s = J.s
    table = BettiTable()
    for lam in J.lambdas:
        st = lambda_stats(lam)
        multiplicity = math.factorial(st.p) // st.type_factorial
        base = binomial(s, st.p)
        max_i = st.p_tri + (s - st.p - st.r)
        for i in range(0, max_i + 1):
            total = 0
            for k in range(0, i + 1):
                ell = i - k
                total += (
                    binomial(st.p_tri, ell)
                    * binomial(s - st.p, st.r + k)
                    * binomial(st.r + k - 1, k)
                )
            table.add(i, st.suppdeg, multiplicity * base * total)
    return table


def betti_mapping_cone(J: SSSIdeal, certificate: QuotientCertificate | None = None) -> BettiTable:
    """Table from quotient-set sizes along the verified generator order."""
    cert = certificate if certificate is not None else verify_linear_quotients(J)
    if not cert.valid:
        raise ValueError(f"linear-quotient certificate failed at row {cert.failure_index}")
    table = BettiTable()
    for row in cert.rows:
        d = len(row["placement"])
        n = len(row["computed"])
        for i in range(0, n + 1):
            table.add(i, d, binomial(n, i))
    return table


# ---------------------------------------------------------------------------
# homology oracle


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    a = np.array(mat % p, dtype=np.int64)
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if len(nz) == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        col = a[rank + 1 :, c]
        nzr = np.nonzero(col)[0]
        if len(nzr):
            a[rank + 1 :][nzr] = (a[rank + 1 :][nzr] - np.outer(col[nzr], a[rank])) % p
        rank += 1
    return rank


def _reduced_homology_dims(face_masks: list[int], p: int) -> dict[int, int]:
    """Reduced homology dimensions over GF(p), keyed by homological degree."""
    by_size: dict[int, list[int]] = defaultdict(list)
    for m in face_masks:
        by_size[bin(m).count("1")].append(m)
    for group in by_size.values():
        group.sort()
    top = max(by_size)
    index = {t: {m: k for k, m in enumerate(by_size[t])} for t in by_size}
    ranks: dict[int, int] = {}
    for t in range(1, top + 1):
        dom = by_size.get(t, [])
        cod = index.get(t - 1, {})
        if not dom or not cod:
            ranks[t] = 0
            continue
        mat = np.zeros((len(cod), len(dom)), dtype=np.int64)
        for col, m in enumerate(dom):
            sign = 1
            probe = m
            while probe:
                bit = probe & -probe
                mat[cod[m ^ bit], col] = sign
                sign = -sign
                probe ^= bit
        ranks[t] = _rank_mod_p(mat, p)
    dims = {}
    for t in range(0, top + 1):
        n_t = len(by_size.get(t, []))
        dim = n_t - ranks.get(t, 0) - ranks.get(t + 1, 0)
        if dim:
            dims[t - 1] = dim
    return dims


def betti_homology_oracle(
    I: MonomialIdeal, char: int = 2, all_degrees: bool = False
) -> BettiTable:
    """Betti table of a squarefree ideal from induced-subcomplex homology.

    Works over GF(char).  Only degrees that are unions of generator
    supports can carry homology; `all_degrees=True` forces the full subset
    sweep (for cross-checking the optimization on small inputs).
    """
    if not I.is_squarefree:
        raise ValueError("homology oracle needs a squarefree ideal")
    if I.is_zero or I.is_unit:
        raise ValueError("homology oracle needs a proper nonzero ideal")
    variables = sorted(set().union(*(g.support for g in I.gens)))
    n = len(variables)
    if n > _HOMOLOGY_VAR_LIMIT:
        raise ValueError(f"{n} active variables exceed the oracle limit {_HOMOLOGY_VAR_LIMIT}")
    vid = {v: k for k, v in enumerate(variables)}
    gen_masks = sorted({sum(1 << vid[v] for v in g.support) for g in I.gens})

    size = 1 << n
    member = bytearray(size)
    for m in gen_masks:
        member[m] = 1
    for bit in range(n):
        step = 1 << bit
        for m in range(size):
            if m & step and member[m ^ step]:
                member[m] = 1

    if all_degrees:
        sigmas = list(range(1, size))
    else:
        closure = set(gen_masks)
        frontier = list(closure)
        while frontier:
            new = []
            for a in frontier:
                for g in gen_masks:
                    u = a | g
                    if u not in closure:
                        closure.add(u)
                        new.append(u)
            frontier = new
        sigmas = sorted(closure)

    table = BettiTable()
    for sigma in sigmas:
        faces = []
        sub = sigma
        while True:
            if not member[sub]:
                faces.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & sigma
        if not faces:
            continue
        j = bin(sigma).count("1")
        for q, dim in _reduced_homology_dims(faces, char).items():
            i = j - q - 2
            if i >= 0:
                table.add(i, j - i, dim)
    return table
