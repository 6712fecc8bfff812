import json
import logging
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

log = logging.getLogger(__file__)

VERSION = "1.0.0"

# admissible ranks per family; None means unbounded above
FAMILY_RANKS: Dict[str, Tuple[int, Optional[int]]] = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class CoxinvException(Exception):
    """Base for every domain error; `message` is the JSON payload shown to the caller."""

    def __init__(self, json_msg: Dict[str, Any]):
        self.message = {"error": type(self).__name__, **json_msg}
        super().__init__(self.message)

    def __str__(self) -> str:
        return json.dumps(self.message, sort_keys=True, default=str)


class InvalidRank(CoxinvException):
    pass


class IndexOutOfRange(CoxinvException):
    pass


class MixedRootSystem(CoxinvException):
    pass


class RankCapExceeded(CoxinvException):
    pass


class WeylGroupCapExceeded(CoxinvException):
    pass


class NonDominant(CoxinvException):
    pass


class NotInRootLattice(CoxinvException):
    pass


class ZeroCharacter(CoxinvException):
    pass


class WrongType(CoxinvException):
    pass


class EmptySupport(CoxinvException):
    pass


class NotApplicable(CoxinvException):
    pass


# bad numeric input; both are also ValueErrors
class InvalidParameter(CoxinvException, ValueError):
    pass


class NotInWeightLattice(CoxinvException, ValueError):
    pass


class Weight(tuple):
    """Integer coordinates λ_i = ⟨λ, α̌_i⟩ in the fundamental-weight basis."""

    __slots__ = ()

    def __new__(cls, coords: Iterable[Any] = ()):
        return super().__new__(cls, (int(c) for c in coords))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self)

    def scaled(self, d: int) -> "Weight":
        return Weight(d * c for c in self)


class RootCoords(tuple):
    """Exact rational coefficients on the simple roots α_1..α_n."""

    __slots__ = ()

    def __new__(cls, coeffs: Iterable[Any] = ()):
        return super().__new__(cls, (c if isinstance(c, Fraction) else Fraction(int(c)) for c in coeffs))

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self)

    @property
    def height(self) -> Fraction:
        return sum(self, Fraction(0))

    def as_ints(self) -> Tuple[int, ...]:
        if not self.is_integral:
            raise NotInRootLattice({"root_coords": [str(c) for c in self]})
        return tuple(c.numerator for c in self)


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int

    @classmethod
    def from_label(cls, label: str) -> "RootSystemSpec":
        """Parse labels such as "B3" or "e8"."""
        label = label.strip()
        try:
            return cls(family=label[0].upper(), rank=int(label[1:]))
        except (IndexError, ValueError):
            raise InvalidRank({"label": label})

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def validate(self) -> None:
        if self.family not in FAMILY_RANKS:
            raise InvalidRank({"family": self.family, "rank": self.rank, "reason": "unknown family"})
        low, high = FAMILY_RANKS[self.family]
        if self.rank < low or (high is not None and self.rank > high):
            allowed = f">= {low}" if high is None else (f"{low}" if low == high else f"{low}..{high}")
            raise InvalidRank({"family": self.family, "rank": self.rank, "allowed": allowed})

    def as_dict(self) -> Dict[str, Any]:
        return {"family": self.family, "rank": self.rank}


@dataclass(frozen=True)
class DominantCharacter:
    """A dominant character of the adjoint torus, i.e. a dominant weight in the root lattice"""

    weight: Weight
    root_coords: Tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.root_coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.weight)

    def as_dict(self) -> Dict[str, Any]:
        return {"weight": list(self.weight), "root_coords": list(self.root_coords)}


@dataclass
class CharacterReport:
    """One row of a classification report"""

    weight: List[int]
    root_coords: List[int]
    height: int
    indecomposable: bool
    witnesses: List[str]
    zero_weight_dim: int
    rank: int
    krull_dim: int
    hilbert_prefix: List[int]
    inferred_generator_degrees: Optional[List[int]]
    polynomial_by_theorem: bool
    hilbert_consistent: bool

    def as_row(self) -> Dict[str, Any]:
        row = asdict(self)
        if self.inferred_generator_degrees is None:
            row["inferred_generator_degrees"] = "Inconsistent"
        return row


@dataclass
class Check:
    """A named pass/fail comparison between an expected and a computed value"""

    name: str
    anchor: str
    expected: Any
    actual: Any
    passed: bool
    note: str = ""

    @classmethod
    def compare(cls, name: str, anchor: str, expected: Any, actual: Any, note: str = "") -> "Check":
        return cls(name=name, anchor=anchor, expected=expected, actual=actual, passed=expected == actual, note=note)


@dataclass
class Report:
    tool_version: str
    spec: Dict[str, Any]
    parameters: Dict[str, Any]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    checks: List[Check] = field(default_factory=list)
    generated_at: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def body(self) -> Dict[str, Any]:
        """Canonical body, without `generated_at`."""
        return {
            "tool_version": self.tool_version,
            "spec": self.spec,
            "parameters": self.parameters,
            "rows": self.rows,
            "checks": [asdict(check) for check in self.checks],
        }
