"""Descriptors for the two ambient polynomial rings.

A *plain* ring has variables z_1, ..., z_s.  A *grid* ring has variables
z_{i,j} arranged in s rows and `levels` columns.  Variables are addressed
by tuples throughout: ``(i,)`` in a plain ring, ``(i, j)`` in a grid ring,
both 1-based.  Ring descriptors are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RingDescriptor:
    """Shape of the ambient ring: either plain K[z_1..z_s] or an s x levels grid."""

    kind: str
    s: int
    levels: int | None = None

    def __post_init__(self):
        if self.kind not in ("plain", "grid"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.s < 1:
            raise ValueError("ring needs s >= 1")
        if self.kind == "grid":
            if self.levels is None or self.levels < 1:
                raise ValueError("grid ring needs levels >= 1")
        elif self.levels is not None:
            raise ValueError("plain ring takes no levels")

    @property
    def nvars(self) -> int:
        return self.s if self.kind == "plain" else self.s * self.levels

    def variables(self) -> list[tuple[int, ...]]:
        """All variables in row-major order: (1,), (2,), ... or (1,1), (1,2), ..."""
        if self.kind == "plain":
            return [(i,) for i in range(1, self.s + 1)]
        return [(i, j) for i in range(1, self.s + 1) for j in range(1, self.levels + 1)]

    def check_var(self, var: tuple[int, ...]) -> None:
        if self.kind == "plain":
            ok = len(var) == 1 and 1 <= var[0] <= self.s
        else:
            ok = (
                len(var) == 2
                and 1 <= var[0] <= self.s
                and 1 <= var[1] <= self.levels
            )
        if not ok:
            raise ValueError(f"variable {var} not in {self}")

    def var_name(self, var: tuple[int, ...]) -> str:
        self.check_var(var)
        if self.kind == "plain":
            return f"z{var[0]}"
        return f"z_{{{var[0]},{var[1]}}}"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "s": self.s}
        if self.kind == "grid":
            out["levels"] = self.levels
        return out

    @classmethod
    def from_json(cls, data: dict) -> "RingDescriptor":
        return cls(data["kind"], data["s"], data.get("levels"))

    def __str__(self):
        if self.kind == "plain":
            return f"K[z_1..z_{self.s}]"
        return f"K[z_(i,j) : i<={self.s}, j<={self.levels}]"


def plain_ring(s: int) -> RingDescriptor:
    return RingDescriptor("plain", s)


def grid_ring(s: int, levels: int) -> RingDescriptor:
    return RingDescriptor("grid", s, levels)


def common_ring(a: RingDescriptor, b: RingDescriptor) -> RingDescriptor:
    """Smallest ring containing both; grid rings of equal s embed into max levels."""
    if a == b:
        return a
    if a.kind != b.kind or a.s != b.s:
        raise ValueError(f"incompatible rings {a} and {b}")
    return grid_ring(a.s, max(a.levels, b.levels))
