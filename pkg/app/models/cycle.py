"""
Cycle Models - edge steps, perfect cycles and proper cycles
"""
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from app.core.exceptions import InvalidWalkError
from app.models.chain import Chain
from app.models.simplex import Simplex1


class EdgeStep(NamedTuple):
    """The (a zeta b) generator, canonically realized as (a, a, b)"""
    source: int
    target: int

    def simplex(self) -> Simplex1:
        return Simplex1(self.source, self.source, self.target)


@dataclass(frozen=True)
class PerfectCycle:
    """
    Closed vertex walk v1, ..., vm, v1 with consecutive vertices distinct

    Adjacency of consecutive vertices is checked against a graph by the
    services; this type only enforces the shape of the walk.
    """
    walk: Tuple[int, ...]

    def __post_init__(self) -> None:
        walk = tuple(self.walk)
        object.__setattr__(self, "walk", walk)
        if len(walk) < 3:
            raise InvalidWalkError("A perfect cycle needs at least two steps", details={"walk": list(walk)})
        if walk[0] != walk[-1]:
            raise InvalidWalkError("Walk is not closed", details={"walk": list(walk)})
        for x, y in zip(walk, walk[1:]):
            if x == y:
                raise InvalidWalkError(
                    "Walk repeats a vertex in consecutive positions",
                    details={"walk": list(walk), "vertex": x}
                )

    @property
    def length(self) -> int:
        return len(self.walk) - 1

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.walk[:-1]

    @property
    def steps(self) -> List[EdgeStep]:
        return [EdgeStep(x, y) for x, y in zip(self.walk, self.walk[1:])]

    @property
    def is_vertex_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def reverse(self) -> "PerfectCycle":
        return PerfectCycle(tuple(reversed(self.walk)))

    def rotated_to(self, index: int) -> "PerfectCycle":
        body = self.vertices
        rotated = body[index:] + body[:index]
        return PerfectCycle(rotated + (rotated[0],))

    def chain(self) -> Chain:
        """Sum of the canonical (a, a, b) generators along the walk"""
        return Chain.of(1, ((step.simplex(), 1) for step in self.steps))

    def notation(self) -> str:
        """Compressed notation: '13576421' for single-digit labels, else comma separated"""
        if all(0 <= v <= 9 for v in self.walk):
            return "".join(str(v) for v in self.walk)
        return ",".join(str(v) for v in self.walk)

    def __str__(self) -> str:
        return self.notation()


@dataclass(frozen=True)
class ProperCycle:
    """Plus-signed generators ordered so each ends where the next begins"""
    generators: Tuple[Simplex1, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise InvalidWalkError("A proper cycle needs at least one generator")
        for current, following in zip(gens, gens[1:] + gens[:1]):
            if current.c != following.a:
                raise InvalidWalkError(
                    "Generators are not endpoint-matched",
                    details={"left": list(current), "right": list(following)}
                )

    def chain(self) -> Chain:
        return Chain.of(1, ((g, 1) for g in self.generators))
