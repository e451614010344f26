"""
Singular Simplex Models - morphisms from the 3-vertex path and its square
"""
from typing import NamedTuple, Tuple


class Simplex1(NamedTuple):
    """Morphism sending 0, 1, 2 of the 3-vertex path to a, b, c"""
    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return f"({self.a} {self.b} {self.c})"


Row = Tuple[int, int, int]


class Simplex2(NamedTuple):
    """
    Morphism from the square of the 3-vertex path, written as a 3x3 matrix

    ``top`` is the first matrix row. Grid point (r, s) sits in row 3 - s,
    column r + 1, so the bottom row is s = 0 and the left column r = 0.
    """
    top: Row
    middle: Row
    bottom: Row

    @classmethod
    def from_rows(cls, rows) -> "Simplex2":
        top, middle, bottom = (tuple(row) for row in rows)
        return cls(top, middle, bottom)

    @classmethod
    def constant(cls, v: int) -> "Simplex2":
        return cls((v, v, v), (v, v, v), (v, v, v))

    @property
    def cells(self) -> Tuple[int, ...]:
        return self.top + self.middle + self.bottom

    def __str__(self) -> str:
        return "\n".join("[" + " ".join(str(x) for x in row) + "]" for row in self)


class FaceIndex(NamedTuple):
    """Face f^{j,k}: coordinate j in {1, 2} frozen at 2k, k in {0, 1}"""
    j: int
    k: int

    @property
    def sign(self) -> int:
        return -1 if (self.j + self.k) % 2 else 1


FACE_INDICES: Tuple[FaceIndex, ...] = (
    FaceIndex(1, 0), FaceIndex(1, 1), FaceIndex(2, 0), FaceIndex(2, 1)
)
