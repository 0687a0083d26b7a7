"""Exact monomials over a declared ring.

A monomial stores only its nonzero exponents, keyed by variable tuple.
Values are immutable and hashable, so they are safe to share and to use
as dictionary keys; every operation returns a fresh monomial.
"""

from __future__ import annotations

from .rings import RingDescriptor, common_ring


class Monomial:
    __slots__ = ("ring", "exps", "_map", "_hash")

    def __init__(self, ring: RingDescriptor, exponents):
        """Build a monomial from a {var: exponent} mapping; zero exponents are dropped."""
        items = []
        for var, e in dict(exponents).items():
            var = tuple(var)
            if e < 0:
                raise ValueError(f"negative exponent {e} on {var}")
            if e == 0:
                continue
            ring.check_var(var)
            items.append((var, int(e)))
        items.sort()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "exps", tuple(items))
        object.__setattr__(self, "_map", dict(items))
        object.__setattr__(self, "_hash", hash((ring, tuple(items))))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Monomial)
            and self.ring == other.ring
            and self.exps == other.exps
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        if not self.exps:
            return "1"
        parts = []
        for var, e in self.exps:
            name = self.ring.var_name(var)
            parts.append(name if e == 1 else f"{name}^{e}")
        return "".join(parts)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self.exps)

    @property
    def is_one(self) -> bool:
        return not self.exps

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def exponent(self, var) -> int:
        return self._map.get(tuple(var), 0)

    def divides(self, other: "Monomial") -> bool:
        om = other._map
        for var, e in self.exps:
            if om.get(var, 0) < e:
                return False
        return True

    def mul(self, other: "Monomial") -> "Monomial":
        out = dict(self._map)
        for var, e in other.exps:
            out[var] = out.get(var, 0) + e
        return Monomial(common_ring(self.ring, other.ring), out)

    def div(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if `other` does not divide self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        out = dict(self._map)
        for var, e in other.exps:
            out[var] -= e
        return Monomial(self.ring, out)

    def gcd(self, other: "Monomial") -> "Monomial":
        om = other._map
        out = {v: min(e, om[v]) for v, e in self.exps if v in om}
        return Monomial(common_ring(self.ring, other.ring), out)

    def lcm(self, other: "Monomial") -> "Monomial":
        out = dict(self._map)
        for var, e in other.exps:
            if out.get(var, 0) < e:
                out[var] = e
        return Monomial(common_ring(self.ring, other.ring), out)

    def power(self, n: int) -> "Monomial":
        if n < 0:
            raise ValueError("negative power")
        return Monomial(self.ring, {v: e * n for v, e in self.exps})

    def erase(self, vars_to_erase) -> "Monomial":
        """Drop the exponents on the given variables."""
        kill = {tuple(v) for v in vars_to_erase}
        return Monomial(self.ring, {v: e for v, e in self.exps if v not in kill})

    def in_ring(self, ring: RingDescriptor) -> "Monomial":
        """Reinterpret in a compatible (usually larger) ring."""
        if ring == self.ring:
            return self
        return Monomial(ring, self._map)

    def flat_vector(self, variables=None) -> tuple[int, ...]:
        """Exponent vector over the full variable list in row-major order."""
        if variables is None:
            variables = self.ring.variables()
        return tuple(self._map.get(v, 0) for v in variables)

    def sort_key(self, variables=None):
        """Canonical storage order: degree, then flattened exponent vector."""
        return (self.degree, self.flat_vector(variables))

    def to_json(self) -> list:
        return [[list(v), e] for v, e in self.exps]

    @classmethod
    def from_json(cls, ring: RingDescriptor, data: list) -> "Monomial":
        return cls(ring, {tuple(v): e for v, e in data})


def one(ring: RingDescriptor) -> Monomial:
    return Monomial(ring, {})


def variable(ring: RingDescriptor, var) -> Monomial:
    return Monomial(ring, {tuple(var): 1})


def from_exponents(ring: RingDescriptor, vector) -> Monomial:
    """Monomial from a dense exponent vector in row-major variable order."""
    variables = ring.variables()
    if len(vector) != len(variables):
        raise ValueError("exponent vector length does not match ring")
    return Monomial(ring, dict(zip(variables, vector)))
