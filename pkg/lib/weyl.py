"""
Weyl group elements as exact integer matrices.

A WeylElement carries its action on weight coordinates and on RootCoords.
A word (i_1, …, i_k) denotes s_{i_1}⋯s_{i_k}, so s_{i_k} is applied first.
"""
import os
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, reduce
from itertools import permutations
from math import factorial
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from lib.data_types import (
    MixedRootSystem,
    RankCapExceeded,
    RootCoords,
    RootSystemSpec,
    Weight,
    WeylGroupCapExceeded,
)
from lib.rootsystem import RootSystem, dynkin_edges

RANK_CAP = int(os.environ.get("COXINV_RANK_CAP", "9"))
WEYL_CAP = int(os.environ.get("COXINV_WEYL_CAP", "2000"))

log = logging.getLogger(__file__)


@dataclass(frozen=True, eq=False)
class WeylElement:
    rs: RootSystem
    matrix: np.ndarray
    root_matrix: np.ndarray
    word: Tuple[int, ...] = ()

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.matrix.flat)

    @property
    def name(self) -> str:
        return "".join(f"s{i}" for i in self.word) or "e"

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs.spec == other.rs.spec and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.rs.spec, self.key))

    def act(self, weight: Sequence[int]) -> Weight:
        return Weight(self.matrix @ np.array(weight, dtype=np.int64))

    def act_root(self, coords: Sequence) -> RootCoords:
        return RootCoords(
            sum((int(self.root_matrix[i, j]) * Fraction(coords[j]) for j in range(len(coords))), Fraction(0))
            for i in range(len(coords))
        )

    def act_root_int(self, coords: Sequence[int]) -> np.ndarray:
        return self.root_matrix @ np.array(coords, dtype=np.int64)


@dataclass(frozen=True)
class CoxeterElement:
    """A product of all simple reflections, each exactly once"""

    element: WeylElement

    @property
    def word(self) -> Tuple[int, ...]:
        return self.element.word

    @property
    def name(self) -> str:
        return self.element.name

    @property
    def key(self) -> Tuple[int, ...]:
        return self.element.key


def identity(rs: RootSystem) -> WeylElement:
    eye = np.eye(rs.rank, dtype=np.int64)
    return WeylElement(rs=rs, matrix=eye, root_matrix=eye.copy())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """s_i(λ) = λ − ⟨λ, α̌_i⟩α_i, on weights and on RootCoords"""
    k = rs.check_index(i)
    matrix = np.eye(rs.rank, dtype=np.int64)
    matrix[:, k] -= rs.cartan[:, k]
    root_matrix = np.eye(rs.rank, dtype=np.int64)
    root_matrix[k, :] -= rs.cartan[k, :]
    return WeylElement(rs=rs, matrix=matrix, root_matrix=root_matrix, word=(i,))


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.rs.spec != b.rs.spec:
        raise MixedRootSystem({"left": a.rs.label, "right": b.rs.label})
    return WeylElement(
        rs=a.rs,
        matrix=a.matrix @ b.matrix,
        root_matrix=a.root_matrix @ b.root_matrix,
        word=a.word + b.word,
    )


def from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    return reduce(compose, (simple_reflection(rs, i) for i in word), identity(rs))


def _negative_columns(matrix: np.ndarray) -> np.ndarray:
    # images of roots are roots, so "all entries ≤ 0" already excludes zero
    return np.all(matrix <= 0, axis=0)


def length(w: WeylElement) -> int:
    """Number of positive roots sent to negative roots"""
    images = w.root_matrix @ w.rs.positive_roots_array.T
    return int(np.count_nonzero(_negative_columns(images)))


def right_descents(w: WeylElement) -> FrozenSet[int]:
    """{i : w(α_i) < 0}, equivalently {i : ℓ(w s_i) = ℓ(w) − 1}"""
    return frozenset(int(i) + 1 for i in np.flatnonzero(_negative_columns(w.root_matrix)))


def order(w: WeylElement, limit: int = 1000) -> int:
    power = w.matrix
    eye = np.eye(w.rs.rank, dtype=np.int64)
    for k in range(1, limit + 1):
        if np.array_equal(power, eye):
            return k
        power = power @ w.matrix
    raise ValueError(f"{w.name} has order above {limit}")


def _check_rank_cap(rs: RootSystem, rank_cap: int) -> None:
    if rs.rank > rank_cap:
        raise RankCapExceeded({"root_system": rs.label, "rank": rs.rank, "rank_cap": rank_cap})


def enumerate_coxeter_elements(rs: RootSystem, rank_cap: int = RANK_CAP) -> List[CoxeterElement]:
    """
    One representative per distinct Coxeter element, sorted by matrix.

    Every ordering of the simple reflections is multiplied out and the products
    deduplicated by matrix; the first word in lexicographic order is kept.
    """
    _check_rank_cap(rs, rank_cap)
    return list(_coxeter_elements(rs))


@cache
def _coxeter_elements(rs: RootSystem) -> Tuple[CoxeterElement, ...]:
    reflections = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    seen = {}
    for word in permutations(range(1, rs.rank + 1)):
        matrix = reduce(np.matmul, (reflections[i - 1].matrix for i in word))
        key = matrix.tobytes()
        if key not in seen:
            seen[key] = word
    elements = [CoxeterElement(from_word(rs, word)) for word in seen.values()]
    elements.sort(key=lambda c: c.key)
    log.debug(f"{rs.label}: {len(elements)} Coxeter elements from {factorial(rs.rank)} words")
    return tuple(elements)


def expected_coxeter_count(spec: RootSystemSpec) -> int:
    """2^(number of Dynkin edges)"""
    return 2 ** len(dynkin_edges(spec))


def longest_element(rs: RootSystem, rank_cap: int = RANK_CAP) -> WeylElement:
    _check_rank_cap(rs, rank_cap)
    return _longest_element(rs)


@cache
def _longest_element(rs: RootSystem) -> WeylElement:
    reflections = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    w = identity(rs)
    while True:
        descents = right_descents(w)
        ascent = next((i for i in range(1, rs.rank + 1) if i not in descents), None)
        if ascent is None:
            return w
        w = compose(w, reflections[ascent - 1])


def dual_character(rs: RootSystem, chi: Sequence[int]) -> Weight:
    """−w₀(χ)"""
    return Weight(-x for x in _longest_element(rs).act(chi))


def dominant_conjugate(rs: RootSystem, weight: Sequence[int]) -> Weight:
    """The unique dominant weight in the W-orbit of `weight`"""
    columns = rs.simple_root_weights
    current = list(weight)
    while True:
        k = next((i for i, c in enumerate(current) if c < 0), None)
        if k is None:
            return Weight(current)
        c = current[k]
        current = [x - c * a for x, a in zip(current, columns[k])]


def weyl_orbit(rs: RootSystem, weight: Sequence[int]) -> List[Weight]:
    start = Weight(weight)
    seen = {start}
    queue = deque([start])
    columns = rs.simple_root_weights
    while queue:
        mu = queue.popleft()
        for k in range(rs.rank):
            if mu[k]:
                image = Weight(x - mu[k] * a for x, a in zip(mu, columns[k]))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
    return sorted(seen)


def weyl_group_order(spec: RootSystemSpec) -> int:
    n = spec.rank
    if spec.family == "A":
        return factorial(n + 1)
    if spec.family in "BC":
        return 2 ** n * factorial(n)
    if spec.family == "D":
        return 2 ** (n - 1) * factorial(n)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[spec.label]


def weyl_group_elements(rs: RootSystem, cap: Optional[int] = None) -> List[WeylElement]:
    """All of W, breadth first under right multiplication, so words are reduced"""
    cap = WEYL_CAP if cap is None else cap
    size = weyl_group_order(rs.spec)
    if size > cap:
        raise WeylGroupCapExceeded({"root_system": rs.label, "order": size, "weyl_cap": cap})
    return list(_weyl_group_elements(rs))


@cache
def _weyl_group_elements(rs: RootSystem) -> Tuple[WeylElement, ...]:
    reflections = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    start = identity(rs)
    seen = {start.key: start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in reflections:
            ws = compose(w, s)
            if ws.key not in seen:
                seen[ws.key] = ws
                queue.append(ws)
    return tuple(seen.values())
