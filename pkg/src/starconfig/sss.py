"""Sparse symmetric shifted ideals over a grid ring.

A sparse squarefree monomial picks at most one level per row; it is stored
as a *placement*: a tuple of (row, level) pairs sorted by row.  The
associated partition is the nondecreasing tuple of its levels, padded with
zeros to length s.  An `SSSIdeal` is represented by the minimal partition
set of its generators; expanding each partition over all row placements
yields the minimal generating set.

The class is closed under two moves: lowering any level while keeping the
support (shiftiness) and permuting rows (symmetry).  `is_sss` checks the
three defining conditions and returns a witness on failure.
"""

from __future__ import annotations

from collections import defaultdict

from .combinatorics import distinct_permutations, is_submultiset, orbit_size
from .ideals import MonomialIdeal, colon
from .monomials import Monomial
from .rings import RingDescriptor, grid_ring

Placement = tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# partitions


def check_partition(lam, s: int | None = None, levels: int | None = None) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if s is not None and len(lam) != s:
        raise ValueError(f"partition {lam} should have length {s}")
    if any(x < 0 for x in lam):
        raise ValueError(f"partition {lam} has negative entries")
    if any(lam[i] > lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition {lam} is not nondecreasing")
    if levels is not None and lam and lam[-1] > levels:
        raise ValueError(f"partition {lam} exceeds level bound {levels}")
    return lam


def suppdeg(lam) -> int:
    return sum(1 for x in lam if x > 0)


def weight(lam) -> int:
    return sum(lam)


def partition_key(lam) -> tuple:
    """Sort key realizing the total order: support degree, weight, entries."""
    return (suppdeg(lam), weight(lam), tuple(lam))


def compare_partitions(a, b) -> int:
    """-1, 0, or 1; orders by support degree, then weight, then leftmost difference."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("partitions must have equal length")
    ka, kb = partition_key(a), partition_key(b)
    return -1 if ka < kb else (0 if ka == kb else 1)


# ---------------------------------------------------------------------------
# placements


def placement_partition(pl: Placement, s: int) -> tuple[int, ...]:
    levels = sorted(lvl for _, lvl in pl)
    return (0,) * (s - len(levels)) + tuple(levels)


def placement_monomial(ring: RingDescriptor, pl: Placement) -> Monomial:
    return Monomial(ring, {(row, lvl): 1 for row, lvl in pl})


def placement_of_monomial(m: Monomial) -> Placement:
    """Placement of a sparse squarefree grid monomial; raises if not sparse."""
    if m.ring.kind != "grid":
        raise ValueError("sparse monomials live in a grid ring")
    rows = {}
    for (i, j), e in m.exps:
        if e != 1:
            raise ValueError(f"{m} is not squarefree")
        if i in rows:
            raise ValueError(f"{m} uses two levels in row {i}")
        rows[i] = j
    return tuple(sorted(rows.items()))


def max_top_row(pl: Placement) -> int:
    """Largest row index carrying the top level; undefined for the empty placement."""
    if not pl:
        raise ValueError("max row of the identity monomial is undefined")
    top = max(lvl for _, lvl in pl)
    return max(row for row, lvl in pl if lvl == top)


def expand_orbit(lam, s: int | None = None) -> list[Placement]:
    """All placements whose level multiset is the given partition."""
    lam = tuple(lam)
    s = len(lam) if s is None else s
    if len(lam) != s:
        raise ValueError("partition length must equal the number of rows")
    out = []
    for perm in distinct_permutations(lam):
        out.append(tuple((i + 1, lvl) for i, lvl in enumerate(perm) if lvl > 0))
    return sorted(set(out))


def lex_vector(pl: Placement, s: int, levels: int) -> tuple[int, ...]:
    """Exponent vector listed from the lex-biggest variable down.

    Variables compare by level first (lower level is bigger), then by row
    (lower row is bigger), so the vector runs (1,1), (2,1), ..., (s,1),
    (1,2), ... and lex comparison of these vectors is the monomial order.
    """
    present = set(pl)
    return tuple(
        1 if (i, j) in present else 0
        for j in range(1, levels + 1)
        for i in range(1, s + 1)
    )


def generator_key(pl: Placement, s: int, levels: int) -> tuple:
    """Sort key for the linear-quotient order on sparse monomials.

    Partitions compare first; within one orbit the lex-bigger monomial
    comes earlier, hence the complemented lex vector.
    """
    lam = placement_partition(pl, s)
    inv = tuple(1 - x for x in lex_vector(pl, s, levels))
    return (suppdeg(lam), weight(lam), lam, inv)


def compare_generators(f: Placement, g: Placement, s: int, levels: int) -> int:
    kf, kg = generator_key(f, s, levels), generator_key(g, s, levels)
    return -1 if kf < kg else (0 if kf == kg else 1)


# ---------------------------------------------------------------------------
# the ideal class


class SSSIdeal:
    """A sparse symmetric shifted ideal, stored as its minimal partition set."""

    __slots__ = ("ring", "lambdas", "_generators", "_member_parts")

    def __init__(self, ring: RingDescriptor, lambdas: tuple, _trusted=False):
        if ring.kind != "grid":
            raise ValueError("SSS ideals live in a grid ring")
        if not _trusted:
            raise ValueError("use SSSIdeal.from_lambdas")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "_generators", None)
        object.__setattr__(self, "_member_parts", None)

    def __setattr__(self, name, value):
        raise AttributeError("SSSIdeal is immutable")

    @classmethod
    def from_lambdas(cls, s: int, levels: int, lambdas, closed: bool = False) -> "SSSIdeal":
        """Smallest SSS ideal whose generators include the given partitions.

        The input is closed under support-preserving level drops, then the
        partitions that survive divisibility (a proper level sub-multiset
        present in the closure) form the stored minimal set.  Inputs known
        to be drop-closed can skip the closure with `closed=True`.
        """
        parts_set: set[tuple[int, ...]] = set()
        for lam in lambdas:
            lam = check_partition(lam, None, levels)
            if len(lam) > s:
                raise ValueError(f"partition {lam} longer than s={s}")
            parts = tuple(x for x in lam if x > 0)
            if not parts:
                raise ValueError("the zero partition generates the unit ideal")
            if closed:
                parts_set.add(parts)
            else:
                stack = [parts]
                seen = {parts}
                while stack:
                    cur = stack.pop()
                    parts_set.add(cur)
                    for idx in range(len(cur)):
                        if cur[idx] > 1:
                            nxt = tuple(sorted(cur[:idx] + (cur[idx] - 1,) + cur[idx + 1 :]))
                            if nxt not in seen:
                                seen.add(nxt)
                                stack.append(nxt)
        minimal = []
        for parts in parts_set:
            if not _has_proper_submultiset(parts, parts_set):
                minimal.append(parts)
        lams = tuple(
            sorted(
                ((0,) * (s - len(p)) + p for p in minimal),
                key=partition_key,
            )
        )
        return cls(grid_ring(s, levels), lams, _trusted=True)

    @property
    def s(self) -> int:
        return self.ring.s

    @property
    def levels(self) -> int:
        return self.ring.levels

    def generators(self) -> tuple[Placement, ...]:
        """Minimal generators in the linear-quotient order."""
        if self._generators is None:
            gens: list[Placement] = []
            for lam in self.lambdas:
                gens.extend(expand_orbit(lam, self.s))
            gens.sort(key=lambda pl: generator_key(pl, self.s, self.levels))
            object.__setattr__(self, "_generators", tuple(gens))
        return self._generators

    def ideal(self) -> MonomialIdeal:
        gens = tuple(placement_monomial(self.ring, pl) for pl in self.generators())
        variables = self.ring.variables()
        gens = tuple(sorted(gens, key=lambda m: m.sort_key(variables)))
        return MonomialIdeal(self.ring, gens, _minimal=True)

    def _parts_list(self) -> tuple[tuple[int, ...], ...]:
        if self._member_parts is None:
            parts = tuple(tuple(x for x in lam if x > 0) for lam in self.lambdas)
            object.__setattr__(self, "_member_parts", parts)
        return self._member_parts

    def member_placement(self, pl: Placement) -> bool:
        """Membership of a sparse monomial: some generator orbit divides it."""
        levels = tuple(sorted(lvl for _, lvl in pl))
        return any(is_submultiset(p, levels) for p in self._parts_list())

    def __eq__(self, other):
        return (
            isinstance(other, SSSIdeal)
            and self.ring == other.ring
            and self.lambdas == other.lambdas
        )

    def __hash__(self):
        return hash((self.ring, self.lambdas))

    def __repr__(self):
        return f"SSSIdeal(s={self.s}, levels={self.levels}, lambdas={list(self.lambdas)})"

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "levels": self.levels,
            "lambdas": [list(lam) for lam in self.lambdas],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SSSIdeal":
        return cls.from_lambdas(data["s"], data["levels"], data["lambdas"])


def _has_proper_submultiset(parts, parts_set) -> bool:
    import itertools

    for r in range(1, len(parts)):
        for sub in set(itertools.combinations(parts, r)):
            if sub in parts_set:
                return True
    return False


def sss_generators(J: SSSIdeal) -> tuple[Placement, ...]:
    return J.generators()


def shift_closure_member(J: SSSIdeal, pl: Placement) -> bool:
    return J.member_placement(pl)


# ---------------------------------------------------------------------------
# the three defining conditions


def is_sss(I: MonomialIdeal):
    """Check sparseness, shift closure, and row symmetry of a squarefree ideal.

    Returns (True, None) or (False, witness).  Symmetry is verified by
    orbit completeness of each partition bucket, shiftiness by single-level
    drops of the minimal generators; both are equivalent to the defining
    conditions for a minimal generating set.
    """
    if I.ring.kind != "grid":
        return False, {"condition": "S-1", "reason": "not a grid-ring ideal"}
    if I.is_zero:
        return True, None
    if I.is_unit:
        return False, {"condition": "S-1", "reason": "unit ideal"}
    s = I.ring.s
    placements = []
    for g in I.gens:
        try:
            placements.append(placement_of_monomial(g))
        except ValueError as exc:
            return False, {"condition": "S-1", "generator": str(g), "reason": str(exc)}

    buckets: dict[tuple, set] = defaultdict(set)
    for pl in placements:
        buckets[placement_partition(pl, s)].add(pl)

    for lam, bucket in sorted(buckets.items()):
        expected = orbit_size(lam)
        if len(bucket) != expected:
            missing = next(pl for pl in expand_orbit(lam, s) if pl not in bucket)
            return False, {
                "condition": "S-3",
                "partition": list(lam),
                "missing": str(placement_monomial(I.ring, missing)),
            }

    keys = [tuple(x for x in lam if x > 0) for lam in buckets]
    for lam in sorted(buckets):
        parts = tuple(x for x in lam if x > 0)
        for idx in range(len(parts)):
            if parts[idx] > 1:
                dropped = tuple(sorted(parts[:idx] + (parts[idx] - 1,) + parts[idx + 1 :]))
                if not any(is_submultiset(k, dropped) for k in keys):
                    witness = tuple((i + 1, lvl) for i, lvl in enumerate(dropped))
                    return False, {
                        "condition": "S-2",
                        "partition": list(lam),
                        "missing": str(placement_monomial(I.ring, witness)),
                    }
    return True, None


# ---------------------------------------------------------------------------
# linear quotients


def predicted_quotient_set(J: SSSIdeal, pl: Placement) -> frozenset:
    """The variable set generating the colon by the predecessors of `pl`.

    Three disjoint parts: levels below the own level in occupied rows,
    levels below the top level in empty rows, and the top level in empty
    rows left of the last top-level row.
    """
    if pl not in set(J.generators()):
        raise ValueError(f"{pl} is not a minimal generator")
    lam = placement_partition(pl, J.s)
    top = lam[-1]
    occupied = dict(pl)
    absent = [i for i in range(1, J.s + 1) if i not in occupied]
    maxf = max_top_row(pl)
    out = set()
    for row, lvl in pl:
        for j in range(1, lvl):
            out.add((row, j))
    for row in absent:
        for j in range(1, top):
            out.add((row, j))
    for row in absent:
        if row < maxf:
            out.add((row, top))
    return frozenset(out)


class QuotientCertificate:
    """Per-generator comparison of predicted and computed colon ideals."""

    __slots__ = ("ring", "rows", "valid", "failure_index")

    def __init__(self, ring, rows, valid, failure_index=None):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "valid", valid)
        object.__setattr__(self, "failure_index", failure_index)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientCertificate is immutable")

    def quotient_sizes(self) -> list[int]:
        return [len(r["computed"]) for r in self.rows]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "failure_index": self.failure_index,
            "rows": [
                {
                    "index": r["index"],
                    "monomial": str(r["monomial"]),
                    "quotient": [list(v) for v in r["computed"]],
                    "predicted": [list(v) for v in r["predicted"]],
                    "max_row": r["max_row"],
                    "ok": r["ok"],
                }
                for r in self.rows
            ],
        }

    def render_table(self) -> str:
        """Text table: index, generator, quotient variables, top-level row."""
        ring = self.ring
        lines = []
        head = f"{'i':>3}  {'u_i':<24}  {'quotient':<58}  max"
        lines.append(head)
        lines.append("-" * len(head))
        for r in self.rows:
            quot = (
                "-"
                if not r["computed"]
                else ", ".join(ring.var_name(v) for v in r["computed"])
            )
            lines.append(
                f"{r['index']:>3}  {str(r['monomial']):<24}  {quot:<58}  {r['max_row']}"
            )
        return "\n".join(lines)


def quotient_var_order(vars_iter):
    """Variables from lex-smallest to lex-biggest (level descending, row descending)."""
    return tuple(sorted(vars_iter, key=lambda v: (-v[1], -v[0])))


def verify_linear_quotients(J: SSSIdeal) -> QuotientCertificate:
    """Certify the generator order by direct colon computation.

    For each generator in order, the colon of its predecessor ideal is
    computed with the generic colon routine, checked to be generated by
    variables, and compared with the predicted set.
    """
    ring = J.ring
    placements = J.generators()
    monomials = [placement_monomial(ring, pl) for pl in placements]
    variables = ring.variables()
    rows = []
    valid = True
    failure = None
    for i, (pl, f) in enumerate(zip(placements, monomials)):
        prefix = tuple(
            sorted(monomials[:i], key=lambda m: m.sort_key(variables))
        )
        partial = MonomialIdeal(ring, prefix, _minimal=True)
        quotient = colon(partial, f)
        linear = all(len(g.exps) == 1 and g.exps[0][1] == 1 for g in quotient.gens)
        computed = (
            quotient_var_order(g.exps[0][0] for g in quotient.gens) if linear else ()
        )
        predicted = quotient_var_order(predicted_quotient_set(J, pl))
        ok = linear and set(computed) == set(predicted)
        rows.append(
            {
                "index": i + 1,
                "monomial": f,
                "placement": pl,
                "computed": computed,
                "predicted": predicted,
                "max_row": max_top_row(pl),
                "ok": ok,
            }
        )
        if not ok and valid:
            valid = False
            failure = i + 1
    return QuotientCertificate(ring, rows, valid, failure)
