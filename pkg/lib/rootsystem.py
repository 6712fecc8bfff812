"""
Exact root data for the simple types A_n, B_n, C_n, D_n, E_6, E_7, E_8, F_4, G_2.

Nodes follow Bourbaki numbering. Public indices (coroots, reflections, parabolic
supports) are 1-based; arrays are 0-based internally.

Conventions:
- cartan[i][j] = ⟨α_j, α̌_i⟩, so the simple root α_j in weight coordinates is
  column j of the Cartan matrix.
- Weights are integer vectors in the fundamental-weight basis; RootCoords are
  exact rationals on the simple roots, obtained through the adjugate of the
  Cartan matrix so no floating point is ever involved.
- The invariant form is Σ x_i y_j d_i A[i][j] / max(d), which gives long roots
  squared length 2.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from itertools import permutations
from math import gcd, lcm
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
import sympy as sp

from lib.data_types import (
    IndexOutOfRange,
    NotInWeightLattice,
    RootCoords,
    RootSystemSpec,
    Weight,
)

log = logging.getLogger(__file__)


def dynkin_edges(spec: RootSystemSpec) -> List[Tuple[int, int]]:
    """Edges of the Dynkin diagram as 0-based node pairs"""
    n = spec.rank
    if spec.family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if spec.family == "E":
        return [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)] + [(1, 3)]
    return [(i, i + 1) for i in range(n - 1)]


def cartan_matrix(spec: RootSystemSpec) -> np.ndarray:
    spec.validate()
    n = spec.rank
    cartan = 2 * np.eye(n, dtype=np.int64)
    for i, j in dynkin_edges(spec):
        cartan[i, j] = cartan[j, i] = -1
    # the row of the short root carries the multiple bond
    if spec.family == "B":
        cartan[n - 1, n - 2] = -2
    elif spec.family == "C":
        cartan[n - 2, n - 1] = -2
    elif spec.family == "F":
        cartan[2, 1] = -2
    elif spec.family == "G":
        cartan[0, 1] = -3
    return cartan


def symmetrize(cartan: np.ndarray) -> Tuple[int, ...]:
    """
    Smallest positive integers d with d_i·A[i][j] = d_j·A[j][i].

    d_i is proportional to the squared length of α_i.
    """
    n = cartan.shape[0]
    d = [None] * n
    d[0] = sp.Integer(1)
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for y in range(n):
            if y != x and cartan[x, y] != 0 and d[y] is None:
                d[y] = d[x] * sp.Integer(int(cartan[x, y])) / sp.Integer(int(cartan[y, x]))
                frontier.append(y)
    scale = lcm(*[int(value.q) for value in d])
    ints = [int(value * scale) for value in d]
    common = gcd(*ints)
    return tuple(value // common for value in ints)


def _close_positive_roots(cartan: np.ndarray) -> List[Tuple[int, ...]]:
    """
    Generate R⁺ by closure from the simple roots.

    For a root β of height h and a simple root α_i, the α_i-string through β
    is β − pα_i, …, β + qα_i with p − q = ⟨β, α̌_i⟩. Roots of smaller height
    are complete when β is processed, so p is read off the set found so far.
    """
    n = cartan.shape[0]
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = simple
    while layer:
        next_layer = set()
        for beta in layer:
            for i in range(n):
                pairing = sum(int(cartan[i, j]) * beta[j] for j in range(n))
                down = list(beta)
                p = 0
                while True:
                    down[i] -= 1
                    if tuple(down) not in roots:
                        break
                    p += 1
                if p - pairing > 0:
                    up = tuple(b + int(j == i) for j, b in enumerate(beta))
                    if up not in roots:
                        next_layer.add(up)
        roots.update(next_layer)
        layer = sorted(next_layer)
    return sorted(roots, key=lambda root: (sum(root), root))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """
    Immutable root data for one simple type.

    Built once per spec by `build` and shared freely between threads.
    """

    spec: RootSystemSpec
    cartan: np.ndarray
    symmetrizers: Tuple[int, ...]
    positive_roots: Tuple[Tuple[int, ...], ...]
    cartan_det: int
    cartan_adjugate: np.ndarray

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def label(self) -> str:
        return self.spec.label

    @cached_property
    def form_scale(self) -> int:
        return max(self.symmetrizers)

    @cached_property
    def symmetric_form(self) -> np.ndarray:
        """diag(d)·A, the invariant form scaled by max(d) so it stays integral"""
        return np.diag(np.array(self.symmetrizers, dtype=np.int64)) @ self.cartan

    @cached_property
    def positive_roots_array(self) -> np.ndarray:
        return np.array(self.positive_roots, dtype=np.int64)

    @cached_property
    def positive_root_weights(self) -> Tuple[Weight, ...]:
        return tuple(Weight(self.cartan @ np.array(root)) for root in self.positive_roots)

    @cached_property
    def simple_root_weights(self) -> Tuple[Weight, ...]:
        return tuple(Weight(self.cartan[:, i]) for i in range(self.rank))

    @cached_property
    def fundamental_weights(self) -> Tuple[RootCoords, ...]:
        return tuple(
            RootCoords(Fraction(int(self.cartan_adjugate[i, j]), self.cartan_det) for i in range(self.rank))
            for j in range(self.rank)
        )

    @property
    def rho(self) -> Weight:
        return Weight([1] * self.rank)

    @cached_property
    def highest_long_root_coords(self) -> Tuple[int, ...]:
        top = self.positive_roots[-1]
        if len(self.positive_roots) > 1 and sum(top) == sum(self.positive_roots[-2]):
            raise ValueError(f"{self.label}: highest root is not unique")
        return top

    @cached_property
    def highest_long_root(self) -> Weight:
        return Weight(self.cartan @ np.array(self.highest_long_root_coords))

    def check_index(self, i: int) -> int:
        """Validate a 1-based node index and return it 0-based"""
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange({"index": i, "rank": self.rank, "root_system": self.label})
        return i - 1


@cache
def build(spec: RootSystemSpec) -> RootSystem:
    cartan = cartan_matrix(spec)
    matrix = sp.Matrix(cartan.tolist())
    det = int(matrix.det())
    adjugate = np.array(matrix.adjugate().tolist(), dtype=np.int64)
    roots = _close_positive_roots(cartan)
    rs = RootSystem(
        spec=spec,
        cartan=cartan,
        symmetrizers=symmetrize(cartan),
        positive_roots=tuple(roots),
        cartan_det=det,
        cartan_adjugate=adjugate,
    )
    log.debug(f"built {spec.label}: {len(roots)} positive roots, det {det}, d={rs.symmetrizers}")
    return rs


def to_root_coords(rs: RootSystem, weight: Sequence[int]) -> RootCoords:
    numerators = rs.cartan_adjugate @ np.array(weight, dtype=np.int64)
    return RootCoords(Fraction(int(x), rs.cartan_det) for x in numerators)


def to_weight(rs: RootSystem, coords: Sequence[Union[int, Fraction]]) -> Weight:
    values = [sum((int(rs.cartan[i, j]) * Fraction(coords[j]) for j in range(rs.rank)), Fraction(0)) for i in range(rs.rank)]
    if any(v.denominator != 1 for v in values):
        raise NotInWeightLattice({"root_system": rs.label, "root_coords": [str(Fraction(c)) for c in coords]})
    return Weight(v.numerator for v in values)


def in_root_lattice(rs: RootSystem, weight: Sequence[int]) -> bool:
    numerators = rs.cartan_adjugate @ np.array(weight, dtype=np.int64)
    return bool(np.all(numerators % rs.cartan_det == 0))


def pairing(rs: RootSystem, value: Union[Weight, RootCoords], i: int) -> Fraction:
    """⟨λ, α̌_i⟩ for a Weight or a RootCoords vector"""
    row = rs.check_index(i)
    if isinstance(value, RootCoords):
        return sum((int(rs.cartan[row, j]) * value[j] for j in range(rs.rank)), Fraction(0))
    return Fraction(value[row])


def bilinear_form(rs: RootSystem, x: Sequence[Union[int, Fraction]], y: Sequence[Union[int, Fraction]]) -> Fraction:
    total = Fraction(0)
    for i in range(rs.rank):
        for j in range(rs.rank):
            if rs.symmetric_form[i, j]:
                total += Fraction(x[i]) * Fraction(y[j]) * int(rs.symmetric_form[i, j])
    return total / rs.form_scale


def diagram_automorphisms(rs: RootSystem) -> List[Tuple[int, ...]]:
    """Node permutations σ (0-based) with A[σi][σj] = A[i][j], identity first"""
    n = rs.rank
    found = []
    for sigma in permutations(range(n)):
        if all(rs.cartan[sigma[i], sigma[j]] == rs.cartan[i, j] for i in range(n) for j in range(n)):
            found.append(sigma)
    return found


def permute_weight(sigma: Sequence[int], weight: Sequence[int]) -> Weight:
    """Move coordinate i of the weight to node σ(i)"""
    image = [0] * len(weight)
    for i, value in enumerate(weight):
        image[sigma[i]] = value
    return Weight(image)


def classical_root_count(spec: RootSystemSpec) -> int:
    n = spec.rank
    counts: Dict[str, int] = {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }
    return counts[spec.family]
