"""
Dimensions and weight multiplicities of irreducible highest-weight modules.

Freudenthal is the working algorithm; the Kostant alternating sum is an
independently coded oracle for cross-checks. Both use only integer arithmetic:
the invariant form enters Freudenthal as diag(d)·A, and the overall scale
cancels between the two sides of the recursion.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from lib.data_types import NonDominant, Weight
from lib.rootsystem import RootSystem, in_root_lattice, to_root_coords
from lib.weyl import dominant_conjugate, length, weyl_group_elements, weyl_orbit

log = logging.getLogger(__file__)


def _require_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = Weight(lam)
    if len(lam) != rs.rank or not lam.is_dominant:
        raise NonDominant({"root_system": rs.label, "weight": list(lam)})
    return lam


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """∏_{α>0} ⟨λ+ρ, α̌⟩ / ⟨ρ, α̌⟩"""
    lam = _require_dominant(rs, lam)
    d = rs.symmetrizers
    result = Fraction(1)
    for root in rs.positive_roots:
        # ⟨ν, α̌⟩ is proportional to Σ_j c_j d_j ν_j; the proportionality cancels
        numerator = sum(c * dj * (x + 1) for c, dj, x in zip(root, d, lam))
        denominator = sum(c * dj for c, dj in zip(root, d))
        result *= Fraction(numerator, denominator)
    if result.denominator != 1:
        raise ArithmeticError(f"{rs.label}: Weyl dimension of {list(lam)} is not integral: {result}")
    return result.numerator


@dataclass(frozen=True)
class WeightMultiplicityTable:
    """
    Multiplicities of V(λ), stored on dominant weights and extended by W-invariance.

    Tables are shared process-wide through the cache below, so `entries` is a
    read-only view.
    """

    rs: RootSystem
    highest_weight: Weight
    entries: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def multiplicity(self, mu: Sequence[int]) -> int:
        return self.entries.get(dominant_conjugate(self.rs, mu), 0)

    def dominant_weights(self) -> List[Weight]:
        return sorted(self.entries)

    def full(self) -> Dict[Weight, int]:
        weights = {}
        for mu, m in self.entries.items():
            for nu in weyl_orbit(self.rs, mu):
                weights[nu] = m
        return weights

    def dimension(self) -> int:
        return sum(m * len(weyl_orbit(self.rs, mu)) for mu, m in self.entries.items())


def _dominant_weights(rs: RootSystem, lam: Weight) -> List[Tuple[Weight, Tuple[int, ...]]]:
    """
    Dominant weights μ ≤ λ with the root coordinates of λ − μ, shallowest first.

    Every such μ is reached from λ through a chain of dominant weights that
    differ by positive roots, so the search never leaves the dominant chamber.
    """
    depth = {lam: tuple([0] * rs.rank)}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for root_w, root_c in zip(rs.positive_root_weights, rs.positive_roots):
            nu = Weight(x - a for x, a in zip(mu, root_w))
            if nu.is_dominant and nu not in depth:
                depth[nu] = tuple(x + c for x, c in zip(depth[mu], root_c))
                queue.append(nu)
    return sorted(depth.items(), key=lambda item: (sum(item[1]), item[1]))


def weight_multiplicities(rs: RootSystem, lam: Sequence[int]) -> WeightMultiplicityTable:
    """
    Freudenthal's recursion on the dominant weights of V(λ):

        (‖λ+ρ‖² − ‖μ+ρ‖²)·m(μ) = 2·Σ_{α>0} Σ_{k≥1} m(μ+kα)·(μ+kα, α)

    m(μ+kα) is read from the dominant conjugate, which is always shallower
    than μ and therefore already known.
    """
    return _multiplicity_table(rs, _require_dominant(rs, lam))


@cache
def _multiplicity_table(rs: RootSystem, lam: Weight) -> WeightMultiplicityTable:
    d = rs.symmetrizers
    entries: Dict[Weight, int] = {}
    for mu, coords in _dominant_weights(rs, lam):
        if not entries:
            entries[mu] = 1
            continue
        total = 0
        for root_w, root_c in zip(rs.positive_root_weights, rs.positive_roots):
            # (ν, α) scaled by max(d) is Σ_j ν_j d_j c_j
            weights = [dj * c for dj, c in zip(d, root_c)]
            nu = list(mu)
            while True:
                nu = [x + a for x, a in zip(nu, root_w)]
                m = entries.get(dominant_conjugate(rs, nu), 0)
                if not m:
                    break
                total += m * sum(x * w for x, w in zip(nu, weights))
        gap = sum(c * dj * (a + b + 2) for c, dj, a, b in zip(coords, d, lam, mu))
        value, remainder = divmod(2 * total, gap)
        if remainder:
            raise ArithmeticError(f"{rs.label}: Freudenthal step at {list(mu)} in V({list(lam)}) is not integral")
        entries[mu] = value
    table = WeightMultiplicityTable(rs=rs, highest_weight=lam, entries=entries)
    log.debug(f"{rs.label}: V({list(lam)}) has {len(entries)} dominant weights")
    return table


def weight_multiplicity(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    return weight_multiplicities(rs, lam).multiplicity(mu)


class KostantPartitionFunction:
    """
    P(v): the number of ways to write v as a sum of positive roots.

    Dynamic programming over the positive roots in a fixed order, memoised on
    (remaining vector, first root still allowed).
    """

    def __init__(self, rs: RootSystem):
        self.roots = rs.positive_roots
        self._memo: Dict[Tuple[Tuple[int, ...], int], int] = {}

    def __call__(self, v: Sequence[int]) -> int:
        v = tuple(v)
        if any(x < 0 for x in v):
            return 0
        return self._count(v, 0)

    def _count(self, v: Tuple[int, ...], k: int) -> int:
        if not any(v):
            return 1
        if k == len(self.roots):
            return 0
        key = (v, k)
        if key in self._memo:
            return self._memo[key]
        root = self.roots[k]
        total = 0
        rest = v
        while all(x >= 0 for x in rest):
            total += self._count(rest, k + 1)
            rest = tuple(x - r for x, r in zip(rest, root))
        self._memo[key] = total
        return total


@cache
def partition_function(rs: RootSystem) -> KostantPartitionFunction:
    return KostantPartitionFunction(rs)


def kostant_multiplicity_oracle(
    rs: RootSystem, lam: Sequence[int], mu: Sequence[int], weyl_cap: Optional[int] = None
) -> int:
    """Σ_{w∈W} (−1)^ℓ(w) · P(w(λ+ρ) − (μ+ρ))"""
    lam = _require_dominant(rs, lam)
    elements = weyl_group_elements(rs, weyl_cap)
    count = partition_function(rs)
    lam_rho = [x + 1 for x in lam]
    mu_rho = [x + 1 for x in mu]
    total = 0
    for w in elements:
        shifted = [a - b for a, b in zip(w.act(lam_rho), mu_rho)]
        coords = to_root_coords(rs, shifted)
        if not coords.is_integral:
            continue
        value = count(coords.as_ints())
        if value:
            total += -value if length(w) % 2 else value
    return total


def invariant_dim(rs: RootSystem, chi: Sequence[int], d: int = 1) -> int:
    """dim H⁰(G/B, L_χ^⊗d)ᵀ, the zero-weight multiplicity of V(dχ)"""
    chi = _require_dominant(rs, chi)
    if not in_root_lattice(rs, chi.scaled(d)):
        return 0
    return weight_multiplicity(rs, chi.scaled(d), [0] * rs.rank)
