"""
Numerical shadow of the graded ring ⊕_d H⁰(G/B, L_χ^⊗d)ᵀ.

Environment:
    COXINV_DEGREE_BOUND: default length D of Hilbert prefixes (h(0) … h(D))
"""
import os
import logging
from dataclasses import dataclass, field
from math import comb
from typing import FrozenSet, Iterable, List, Optional, Sequence, Union

from lib.characters import find_semistable_coxeter, is_indecomposable, make_character
from lib.data_types import (
    CharacterReport,
    DominantCharacter,
    EmptySupport,
    InvalidParameter,
    NotApplicable,
    ZeroCharacter,
)
from lib.multiplicity import invariant_dim
from lib.rootsystem import RootSystem
from lib.weyl import RANK_CAP

DEGREE_BOUND = int(os.environ.get("COXINV_DEGREE_BOUND", "4"))

log = logging.getLogger(__file__)


def parabolic_support(rs: RootSystem, chi: Sequence[int]) -> FrozenSet[int]:
    """J = {i : ⟨χ, α̌_i⟩ ≥ 1}, 1-based"""
    return frozenset(i + 1 for i, c in enumerate(chi) if c >= 1)


def dim_G_mod_P(rs: RootSystem, support: Iterable[int]) -> int:
    """Number of positive roots with a nonzero coefficient on some α_j, j ∈ J"""
    indices = [rs.check_index(j) for j in support]
    if not indices:
        raise EmptySupport({"root_system": rs.label})
    return sum(1 for root in rs.positive_roots if any(root[k] for k in indices))


def krull_dim_invariant_ring(rs: RootSystem, chi: DominantCharacter) -> int:
    """dim(G/P_J) + 1 − rank, with J the support of χ"""
    if chi.is_zero:
        raise ZeroCharacter({"root_system": rs.label})
    return dim_G_mod_P(rs, parabolic_support(rs, chi.weight)) + 1 - rs.rank


@dataclass
class HilbertPrefix:
    character: DominantCharacter
    values: List[int] = field(default_factory=list)

    @property
    def degree_bound(self) -> int:
        return len(self.values) - 1


def hilbert_prefix(rs: RootSystem, chi: DominantCharacter, degree_bound: int = DEGREE_BOUND) -> HilbertPrefix:
    if degree_bound < 1:
        raise InvalidParameter({"parameter": "degree_bound", "value": degree_bound, "minimum": 1})
    values = [1] + [invariant_dim(rs, chi.weight, d) for d in range(1, degree_bound + 1)]
    return HilbertPrefix(character=chi, values=values)


def polynomial_ring_prefix(generators: int, degree_bound: int) -> List[int]:
    """C(n+d−1, d): the Hilbert function of n variables in degree 1"""
    return [comb(generators + d - 1, d) for d in range(degree_bound + 1)]


def infer_free_generators(values: Union[HilbertPrefix, Sequence[int]]) -> Optional[List[int]]:
    """
    Degrees of free generators whose polynomial ring matches the prefix, or
    None when no such multiset exists.

    At each degree d the shortfall between h(d) and the series of the
    generators found so far is the number of new degree-d generators.
    """
    if isinstance(values, HilbertPrefix):
        values = values.values
    if not values or values[0] != 1:
        raise ValueError(f"a Hilbert prefix starts with 1, got {list(values)[:1]}")
    bound = len(values) - 1
    series = [1] + [0] * bound
    degrees: List[int] = []
    for d in range(1, bound + 1):
        shortfall = values[d] - series[d]
        if shortfall < 0:
            return None
        for _ in range(shortfall):
            degrees.append(d)
            # multiply the series by 1/(1 − t^d)
            for k in range(d, bound + 1):
                series[k] += series[k - d]
    return degrees


@dataclass
class RingVerdict:
    character: DominantCharacter
    witnesses: List[str]
    rank: int
    krull_dim: int
    hilbert: HilbertPrefix
    inferred_generator_degrees: Optional[List[int]]

    @property
    def zero_weight_dim(self) -> int:
        return self.hilbert.values[1]

    @property
    def polynomial_by_theorem(self) -> bool:
        return self.zero_weight_dim <= self.rank

    @property
    def hilbert_consistent(self) -> bool:
        degrees = self.inferred_generator_degrees
        return degrees is not None and len(degrees) == self.krull_dim

    @property
    def coherent(self) -> bool:
        """The inequality verdict and the Hilbert data tell the same story"""
        if self.polynomial_by_theorem:
            return self.hilbert_consistent
        return refutation_pattern(self) is not None

    def to_report(self) -> CharacterReport:
        chi = self.character
        return CharacterReport(
            weight=list(chi.weight),
            root_coords=list(chi.root_coords),
            height=chi.height,
            indecomposable=True,
            witnesses=list(self.witnesses),
            zero_weight_dim=self.zero_weight_dim,
            rank=self.rank,
            krull_dim=self.krull_dim,
            hilbert_prefix=list(self.hilbert.values),
            inferred_generator_degrees=self.inferred_generator_degrees,
            polynomial_by_theorem=self.polynomial_by_theorem,
            hilbert_consistent=self.hilbert_consistent,
        )


def refutation_pattern(v: RingVerdict) -> Optional[str]:
    """Which of the two obstructions to polynomiality the data shows, if any"""
    if v.zero_weight_dim > v.krull_dim:
        return "zero_weight_dim_exceeds_krull_dim"
    degrees = v.inferred_generator_degrees
    if degrees is None or len(degrees) != v.krull_dim:
        return "generator_count_mismatch"
    return None


def verdict(
    rs: RootSystem, chi: Sequence[int], degree_bound: int = DEGREE_BOUND, rank_cap: int = RANK_CAP
) -> RingVerdict:
    character = chi if isinstance(chi, DominantCharacter) else make_character(rs, chi)
    witness = find_semistable_coxeter(rs, character, rank_cap)
    if not witness.exists:
        raise NotApplicable({"root_system": rs.label, "weight": list(character.weight), "reason": "no Coxeter witness"})
    if not is_indecomposable(rs, character):
        raise NotApplicable({"root_system": rs.label, "weight": list(character.weight), "reason": "decomposable"})
    hilbert = hilbert_prefix(rs, character, degree_bound)
    result = RingVerdict(
        character=character,
        witnesses=witness.names,
        rank=rs.rank,
        krull_dim=krull_dim_invariant_ring(rs, character),
        hilbert=hilbert,
        inferred_generator_degrees=infer_free_generators(hilbert),
    )
    if not result.coherent:
        log.warning(
            f"{rs.label}: {list(character.weight)} has h={hilbert.values}, krull {result.krull_dim}, "
            f"polynomial_by_theorem={result.polynomial_by_theorem} but the Hilbert data disagrees"
        )
    return result
