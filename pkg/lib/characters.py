"""
The monoid of dominant characters of the adjoint torus, indecomposability and
the Coxeter semistability predicate.

For a Coxeter element w, the Schubert variety X(w) has torus-semistable points
for L_χ exactly when w(χ) ≤ 0, i.e. every simple-root coefficient of w(χ) is
nonpositive. That inequality is the contract used throughout.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from lib.data_types import (
    DominantCharacter,
    NonDominant,
    NotInRootLattice,
    Weight,
    WrongType,
    ZeroCharacter,
)
from lib.rootsystem import RootSystem, to_root_coords, to_weight
from lib.weyl import (
    RANK_CAP,
    CoxeterElement,
    enumerate_coxeter_elements,
    from_word,
    right_descents,
)

log = logging.getLogger(__file__)


@dataclass
class SemistabilityWitness:
    character: DominantCharacter
    witnesses: List[CoxeterElement] = field(default_factory=list)

    @property
    def exists(self) -> bool:
        return bool(self.witnesses)

    @property
    def names(self) -> List[str]:
        return [w.name for w in self.witnesses]


def is_dominant_root_lattice(rs: RootSystem, chi: Sequence[int]) -> bool:
    chi = Weight(chi)
    return chi.is_dominant and to_root_coords(rs, chi).is_integral


def make_character(rs: RootSystem, chi: Sequence[int]) -> DominantCharacter:
    chi = Weight(chi)
    if len(chi) != rs.rank or not chi.is_dominant:
        raise NonDominant({"root_system": rs.label, "weight": list(chi)})
    coords = to_root_coords(rs, chi)
    if not coords.is_integral:
        raise NotInRootLattice({"root_system": rs.label, "weight": list(chi), "root_coords": [str(c) for c in coords]})
    return DominantCharacter(weight=chi, root_coords=coords.as_ints())


def character_from_root_coords(rs: RootSystem, coords: Sequence[int]) -> DominantCharacter:
    return make_character(rs, to_weight(rs, coords))


def coxeter_semistable(rs: RootSystem, w: CoxeterElement, chi: DominantCharacter) -> bool:
    """w(χ) ≤ 0 coefficientwise on the simple roots"""
    return bool(np.all(w.element.act_root_int(chi.root_coords) <= 0))


def find_semistable_coxeter(rs: RootSystem, chi: DominantCharacter, rank_cap: int = RANK_CAP) -> SemistabilityWitness:
    elements = enumerate_coxeter_elements(rs, rank_cap)
    return SemistabilityWitness(
        character=chi,
        witnesses=[w for w in elements if coxeter_semistable(rs, w, chi)],
    )


def is_indecomposable(rs: RootSystem, chi: DominantCharacter) -> bool:
    """
    True when χ is not a sum of two nonzero dominant root-lattice characters.

    Nonzero dominant root-lattice characters have every root coordinate ≥ 1,
    so a summand χ₁ lies in the box 1 ≤ χ₁[j] ≤ χ[j] − 1.
    """
    if chi.is_zero:
        raise ZeroCharacter({"root_system": rs.label})
    cartan = rs.cartan
    target = np.array(chi.weight, dtype=np.int64)
    for candidate in product(*(range(1, c) for c in chi.root_coords)):
        part = cartan @ np.array(candidate, dtype=np.int64)
        if np.all(part >= 0) and np.all(target - part >= 0):
            return False
    return True


def dominant_root_lattice_characters(rs: RootSystem, height_bound: int) -> Iterator[DominantCharacter]:
    """Nonzero dominant root-lattice characters of height ≤ bound, by height then coordinates"""
    n = rs.rank

    def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
        if parts == 1:
            yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for height in range(n, height_bound + 1):
        for coords in compositions(height, n):
            weight = rs.cartan @ np.array(coords, dtype=np.int64)
            if np.all(weight >= 0):
                yield DominantCharacter(weight=Weight(weight), root_coords=coords)


def enumerate_semistable_indecomposables(
    rs: RootSystem, height_bound: int, rank_cap: int = RANK_CAP
) -> List[SemistabilityWitness]:
    """
    All indecomposable dominant root-lattice characters of height ≤ bound that
    admit a Coxeter witness, each with its full witness list.
    """
    elements = enumerate_coxeter_elements(rs, rank_cap)
    found = []
    for chi in dominant_root_lattice_characters(rs, height_bound):
        witnesses = [w for w in elements if coxeter_semistable(rs, w, chi)]
        if witnesses and is_indecomposable(rs, chi):
            found.append(SemistabilityWitness(character=chi, witnesses=witnesses))
    log.debug(f"{rs.label}: {len(found)} semistable indecomposables up to height {height_bound}")
    return found


@dataclass(frozen=True)
class DescentViolation:
    character: DominantCharacter
    witness: str
    descents: Tuple[int, ...]


def descent_violations(rs: RootSystem, height_bound: int, rank_cap: int = RANK_CAP) -> List[DescentViolation]:
    """Semistable pairs (χ, w) in type A whose right descents leave {1, rank}"""
    if rs.spec.family != "A":
        raise WrongType({"root_system": rs.label, "expected": "A"})
    allowed = {1, rs.rank}
    violations = []
    for entry in enumerate_semistable_indecomposables(rs, height_bound, rank_cap):
        for w in entry.witnesses:
            descents = right_descents(w.element)
            if not descents <= allowed:
                violations.append(DescentViolation(entry.character, w.name, tuple(sorted(descents))))
    return violations


def verify_descent_lemma(rs: RootSystem, height_bound: int, rank_cap: int = RANK_CAP) -> bool:
    """Right descents of every semistable Coxeter witness lie in {1, n−1} (A_{n−1}, n ≠ 4)"""
    if rs.spec.family != "A":
        raise WrongType({"root_system": rs.label, "expected": "A"})
    if rs.rank == 3:
        log.warning("A3 is outside the descent bound; expect the 2w2 / s1s3s2 exception")
    violations = descent_violations(rs, height_bound, rank_cap)
    for v in violations:
        log.info(f"{rs.label}: {list(v.character.weight)} with {v.witness} has descents {list(v.descents)}")
    return not violations


def _witnessed_by(rs: RootSystem, entries: List[SemistabilityWitness], word: Sequence[int]) -> List[SemistabilityWitness]:
    # witnesses are stored under one canonical word, so match on the group element
    key = from_word(rs, word).key
    return [entry for entry in entries if any(w.key == key for w in entry.witnesses)]


def coefficient_law_violations(rs: RootSystem, entries: List[SemistabilityWitness]) -> List[DominantCharacter]:
    """
    Type A_{n−1}, witness s_{n−1}⋯s_1 and ⟨χ, α̌_{n−1}⟩ = 0 force
    a_1 ≥ a_2 ≥ … ≥ a_{n−2} = 2 and a_{n−1} = 1.
    """
    if rs.spec.family != "A":
        raise WrongType({"root_system": rs.label, "expected": "A"})
    r = rs.rank
    word = tuple(range(r, 0, -1))
    bad = []
    for entry in _witnessed_by(rs, entries, word):
        chi = entry.character
        if chi.weight[r - 1] != 0:
            continue
        a = chi.root_coords
        ok = a[r - 1] == 1 and (r < 2 or a[r - 2] == 2) and all(a[j] >= a[j + 1] for j in range(r - 2))
        if not ok:
            bad.append(chi)
    return bad


def mirror_coefficient_law_violations(rs: RootSystem, entries: List[SemistabilityWitness]) -> List[DominantCharacter]:
    """
    Witness s_1⋯s_{n−1} and ⟨χ, α̌_1⟩ = 0 force
    a_{n−1} ≥ … ≥ a_2 = 2 and a_1 = 1.
    """
    if rs.spec.family != "A":
        raise WrongType({"root_system": rs.label, "expected": "A"})
    r = rs.rank
    word = tuple(range(1, r + 1))
    bad = []
    for entry in _witnessed_by(rs, entries, word):
        chi = entry.character
        if chi.weight[0] != 0:
            continue
        a = chi.root_coords
        ok = a[0] == 1 and (r < 2 or a[1] == 2) and all(a[j] <= a[j + 1] for j in range(1, r - 1))
        if not ok:
            bad.append(chi)
    return bad


def middle_coxeter_words(rs: RootSystem) -> List[Tuple[int, ...]]:
    """s_{i+1}⋯s_{n−1} s_i⋯s_1 for 2 ≤ i ≤ n−3, where n − 1 is the rank"""
    r = rs.rank
    return [tuple(range(i + 1, r + 1)) + tuple(range(i, 0, -1)) for i in range(2, r - 1)]


def middle_coxeter_law(rs: RootSystem, entries: List[SemistabilityWitness]) -> Dict[str, List[List[int]]]:
    """Characters witnessed by each middle Coxeter word; only α_1+…+α_{n−1} should appear"""
    if rs.spec.family != "A":
        raise WrongType({"root_system": rs.label, "expected": "A"})
    seen = {}
    for word in middle_coxeter_words(rs):
        name = "".join(f"s{i}" for i in word)
        seen[name] = [list(e.character.root_coords) for e in _witnessed_by(rs, entries, word)]
    return seen


def hook_character(rs: RootSystem, i: int) -> Weight:
    """iϖ_1 + ϖ_{n−i} in A_{n−1}"""
    if rs.spec.family != "A":
        raise WrongType({"root_system": rs.label, "expected": "A"})
    n = rs.rank + 1
    weight = [0] * rs.rank
    weight[0] += i
    weight[n - i - 1] += 1
    return Weight(weight)
