"""
Chain Model - finitely supported integer combinations of basis elements
"""
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, Tuple

from app.core.int_linalg import IntMatrix
from app.models.simplex import Simplex1, Simplex2


@dataclass(frozen=True)
class Chain:
    """
    Integer chain in a fixed dimension

    Keys are vertices (dimension 0), Simplex1 (dimension 1) or Simplex2
    (dimension 2). Zero coefficients are never stored.
    """
    dimension: int
    coefficients: Mapping[Hashable, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {k: int(v) for k, v in self.coefficients.items() if v}
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def zero(cls, dimension: int) -> "Chain":
        return cls(dimension, {})

    @classmethod
    def of(cls, dimension: int, terms: Iterable[Tuple[Hashable, int]]) -> "Chain":
        acc: Dict[Hashable, int] = {}
        for key, value in terms:
            acc[key] = acc.get(key, 0) + value
        return cls(dimension, acc)

    def __add__(self, other: "Chain") -> "Chain":
        self._same_dimension(other)
        acc = dict(self.coefficients)
        for key, value in other.coefficients.items():
            acc[key] = acc.get(key, 0) + value
        return Chain(self.dimension, acc)

    def __neg__(self) -> "Chain":
        return Chain(self.dimension, {k: -v for k, v in self.coefficients.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __mul__(self, scalar: int) -> "Chain":
        return Chain(self.dimension, {k: scalar * v for k, v in self.coefficients.items()})

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[Tuple[Hashable, int]]:
        return iter(sorted(self.coefficients.items()))

    def __len__(self) -> int:
        return len(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dimension == other.dimension and dict(self.coefficients) == dict(other.coefficients)

    def __hash__(self) -> int:
        return hash((self.dimension, frozenset(self.coefficients.items())))

    def coefficient(self, key: Hashable) -> int:
        return self.coefficients.get(key, 0)

    def _same_dimension(self, other: "Chain") -> None:
        if self.dimension != other.dimension:
            raise ValueError(f"Cannot combine chains of dimension {self.dimension} and {other.dimension}")

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for key, value in self:
            sign = "-" if value < 0 else "+"
            magnitude = abs(value)
            term = str(key) if magnitude == 1 else f"{magnitude}{key}"
            parts.append(f"{sign} {term}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass
class BoundaryMatrices:
    """
    Quotient differentials of a graph as sparse integer matrices

    d1 rows are vertices 1..n (row v - 1), columns the nondegenerate 1-simplices
    in ``basis_1`` order. d2 rows follow ``basis_1``; each column is one distinct
    nonzero reduced boundary, labeled by the first 2-simplex producing it.
    """
    d1: IntMatrix
    d2: IntMatrix
    basis_1: List[Simplex1]
    d2_labels: List[Simplex2]
    d2_multiplicity: List[int]
    simplices_2: int
    nondegenerate_2: int
    zero_boundaries: int
