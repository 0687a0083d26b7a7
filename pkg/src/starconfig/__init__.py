"""Exact combinatorics of monomial star configurations.

Core layers:

- `rings`, `monomials`, `ideals`, `decomposition`: exact monomial-ideal
  arithmetic over plain and grid rings, irreducible decomposition,
  Alexander duality, polarization.
- `sss`: sparse symmetric shifted ideals, their linear-quotient order and
  certificates.
- `betti`: graded Betti numbers three ways (closed formula, quotient
  counts, simplicial homology oracle).
- `star_config`: uniform fold ideals, their symbolic powers, and the
  sequential Cohen-Macaulayness certificate pipeline.
- `containment`: alpha invariants and the containment / lower-bound
  verification suite.
- `service` / `cli`: FastAPI surface and its thin command-line client.
"""

from .rings import RingDescriptor, plain_ring, grid_ring, common_ring
from .monomials import Monomial, one, variable, from_exponents
from .ideals import (
    MonomialIdeal,
    ideal,
    zero_ideal,
    unit_ideal,
    minimalize,
    colon,
    intersect,
    intersect_many,
    power,
    product,
    sum_ideals,
    membership,
    saturate,
    alpha,
)
from .decomposition import (
    IrreducibleComponent,
    irreducible_decomposition,
    associated_primes,
    height,
    big_height,
    minimal_hitting_sets,
    alexander_dual,
    polarize,
    depolarize,
)

__version__ = "0.1.0"
