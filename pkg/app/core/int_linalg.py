"""
Exact Integer Linear Algebra - lattices, Hermite echelon bases and Smith forms

All arithmetic uses Python integers, so intermediate growth never overflows.
Matrices are stored sparsely by columns (``{row: value}`` dicts without zeros).
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp

from atams.logging import get_logger

from app.core.exceptions import DimensionMismatchError, LatticeContainmentError

logger = get_logger(__name__)

SparseVector = Dict[int, int]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) and g > 0"""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _axpy(target: SparseVector, scale: int, source: SparseVector) -> None:
    """target += scale * source, in place, dropping zeros"""
    if not scale:
        return
    for key, value in source.items():
        updated = target.get(key, 0) + scale * value
        if updated:
            target[key] = updated
        else:
            target.pop(key, None)


def _combine(scale_a: int, a: SparseVector, scale_b: int, b: SparseVector) -> SparseVector:
    """Return scale_a * a + scale_b * b as a new sparse vector"""
    result: SparseVector = {}
    _axpy(result, scale_a, a)
    _axpy(result, scale_b, b)
    return result


@dataclass
class IntMatrix:
    """Sparse integer matrix with explicit dimensions, stored by columns"""
    rows: int
    cols: int
    columns: List[SparseVector] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.columns:
            self.columns = [{} for _ in range(self.cols)]
        if len(self.columns) != self.cols:
            raise DimensionMismatchError(
                "Column count does not match declared width",
                details={"cols": self.cols, "given": len(self.columns)}
            )
        cleaned = []
        for column in self.columns:
            entries = {r: v for r, v in column.items() if v}
            for r in entries:
                if not 0 <= r < self.rows:
                    raise DimensionMismatchError(
                        "Row index out of range",
                        details={"row": r, "rows": self.rows}
                    )
            cleaned.append(entries)
        self.columns = cleaned

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = len(data)
        width = len(data[0]) if rows else (cols or 0)
        columns = [
            {r: int(data[r][c]) for r in range(rows) if data[r][c]}
            for c in range(width)
        ]
        return cls(rows=rows, cols=width, columns=columns)

    @classmethod
    def from_column_vectors(cls, rows: int, vectors: Iterable[Sequence[int]]) -> "IntMatrix":
        columns = [{r: int(v) for r, v in enumerate(vec) if v} for vec in vectors]
        return cls(rows=rows, cols=len(columns), columns=columns)

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(rows=size, cols=size, columns=[{i: 1} for i in range(size)])

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for c, column in enumerate(self.columns):
            for r, value in column.items():
                dense[r][c] = value
        return dense

    def column_dense(self, c: int) -> List[int]:
        vec = [0] * self.rows
        for r, value in self.columns[c].items():
            vec[r] = value
        return vec

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                "Inner dimensions differ",
                details={"left_cols": self.cols, "right_rows": other.rows}
            )
        product = []
        for column in other.columns:
            acc: SparseVector = {}
            for k, value in column.items():
                _axpy(acc, value, self.columns[k])
            product.append(acc)
        return IntMatrix(rows=self.rows, cols=other.cols, columns=product)

    def apply(self, vector: Sequence[int]) -> List[int]:
        """Return self @ vector as a dense list"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                "Vector length does not match matrix width",
                details={"cols": self.cols, "length": len(vector)}
            )
        result = [0] * self.rows
        for c, coefficient in enumerate(vector):
            if coefficient:
                for r, value in self.columns[c].items():
                    result[r] += coefficient * value
        return result

    def is_zero(self) -> bool:
        return not any(self.columns)

    @property
    def nonzero_count(self) -> int:
        return sum(len(column) for column in self.columns)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(
            [[ZZ(x) for x in row] for row in self.to_dense()],
            (self.rows, self.cols),
            ZZ
        )

    def coordinate_lines(self) -> List[str]:
        """Coordinate-list rendering: one 'row col value' line per nonzero"""
        lines = []
        for c, column in enumerate(self.columns):
            for r in sorted(column):
                lines.append(f"{r} {c} {column[r]}")
        return lines


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d1 | d2 | ... | dr of an integer matrix"""
    invariant_factors: Tuple[int, ...]
    rank: int
    left: Optional[List[List[int]]] = None
    right: Optional[List[List[int]]] = None

    @property
    def torsion(self) -> List[int]:
        return [d for d in self.invariant_factors if d > 1]


class HermiteLattice:
    """
    Echelon basis of the integer lattice spanned by a stream of vectors

    Vectors are inserted one at a time. A new vector is reduced against the
    basis row whose pivot matches its leading entry; when neither pivot
    divides the other, the pair is replaced by its extended-gcd combination,
    so every pivot ends as the smallest positive value the lattice allows in
    that position. Each basis vector optionally records the integer
    combination of inserted generators that produces it, and vectors that
    reduce to zero leave behind a relation (a kernel element).
    """

    def __init__(
        self,
        dimension: int,
        track_certificates: bool = False,
        keep_relations: bool = False
    ):
        self.dimension = dimension
        self.track_certificates = track_certificates or keep_relations
        self.keep_relations = keep_relations
        self._rows: Dict[int, SparseVector] = {}
        self._combos: Dict[int, SparseVector] = {}
        self.relations: List[SparseVector] = []
        self.generator_count = 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def basis(self) -> List[SparseVector]:
        return [dict(self._rows[p]) for p in self.pivots]

    def basis_certificates(self) -> List[SparseVector]:
        return [dict(self._combos.get(p, {})) for p in self.pivots]

    def _check(self, vector: SparseVector) -> None:
        for key in vector:
            if not 0 <= key < self.dimension:
                raise DimensionMismatchError(
                    "Vector index outside the ambient lattice",
                    details={"index": key, "dimension": self.dimension}
                )

    def add(self, vector: SparseVector, label: Optional[int] = None) -> None:
        """
        Insert a generator

        Args:
            vector: Sparse integer vector
            label: Generator identifier used in certificates (defaults to insertion index)
        """
        self._check(vector)
        if label is None:
            label = self.generator_count
        self.generator_count += 1

        vec = {k: v for k, v in vector.items() if v}
        combo: SparseVector = {label: 1} if self.track_certificates else {}

        while vec:
            pivot = min(vec)
            row = self._rows.get(pivot)
            if row is None:
                if vec[pivot] < 0:
                    vec = {k: -v for k, v in vec.items()}
                    combo = {k: -v for k, v in combo.items()}
                self._rows[pivot] = vec
                if self.track_certificates:
                    self._combos[pivot] = combo
                return

            a, b = row[pivot], vec[pivot]
            row_combo = self._combos.get(pivot, {})
            if b % a == 0:
                q = b // a
                _axpy(vec, -q, row)
                if self.track_certificates:
                    _axpy(combo, -q, row_combo)
                continue
            if a % b == 0:
                # incoming pivot is smaller: it becomes the basis row
                q = a // b
                new_row, vec = vec, _combine(1, row, -q, vec)
                if self.track_certificates:
                    new_combo, combo = combo, _combine(1, row_combo, -q, combo)
                    self._combos[pivot] = new_combo
                if new_row[pivot] < 0:
                    new_row = {k: -v for k, v in new_row.items()}
                    if self.track_certificates:
                        self._combos[pivot] = {k: -v for k, v in self._combos[pivot].items()}
                self._rows[pivot] = new_row
                continue

            x, y, g = xgcd(a, b)
            new_row = _combine(x, row, y, vec)
            vec = _combine(-b // g, row, a // g, vec)
            if self.track_certificates:
                new_combo = _combine(x, row_combo, y, combo)
                combo = _combine(-b // g, row_combo, a // g, combo)
                self._combos[pivot] = new_combo
            self._rows[pivot] = new_row

        if self.keep_relations and combo:
            self.relations.append(combo)

    def add_all(self, vectors: Iterable[SparseVector]) -> "HermiteLattice":
        for vector in vectors:
            self.add(vector)
        return self

    def reduce(self, vector: SparseVector) -> Tuple[SparseVector, SparseVector]:
        """
        Reduce a vector against the basis

        Returns:
            (residual, coordinates) where coordinates maps pivot -> multiple
            of the basis row subtracted; residual is empty iff vector is in
            the lattice
        """
        self._check(vector)
        vec = {k: v for k, v in vector.items() if v}
        coordinates: SparseVector = {}
        while vec:
            pivot = min(vec)
            row = self._rows.get(pivot)
            if row is None or vec[pivot] % row[pivot]:
                return vec, coordinates
            q = vec[pivot] // row[pivot]
            coordinates[pivot] = q
            _axpy(vec, -q, row)
        return vec, coordinates

    def contains(self, vector: SparseVector) -> bool:
        residual, _ = self.reduce(vector)
        return not residual

    def coordinates(self, vector: SparseVector) -> Optional[List[int]]:
        """Coordinates of vector over the echelon basis (pivot order), or None"""
        residual, coords = self.reduce(vector)
        if residual:
            return None
        return [coords.get(p, 0) for p in self.pivots]

    def certificate(self, vector: SparseVector) -> Optional[SparseVector]:
        """Integer combination of inserted generators equal to vector, or None"""
        if not self.track_certificates:
            raise ValueError("Lattice was built without certificate tracking")
        residual, coords = self.reduce(vector)
        if residual:
            return None
        combination: SparseVector = {}
        for pivot, q in coords.items():
            _axpy(combination, q, self._combos.get(pivot, {}))
        return combination

    def hermite_form(self) -> List[SparseVector]:
        """Reduced echelon basis: entries above each pivot lie in [0, pivot)"""
        pivots = self.pivots
        rows = {p: dict(self._rows[p]) for p in pivots}
        for k, pk in enumerate(pivots):
            d = rows[pk][pk]
            for pi in pivots[:k]:
                entry = rows[pi].get(pk, 0)
                q = entry // d
                if q:
                    _axpy(rows[pi], -q, rows[pk])
        return [rows[p] for p in pivots]


def _lattice_of(m: IntMatrix, **kwargs) -> HermiteLattice:
    lattice = HermiteLattice(m.rows, **kwargs)
    for c, column in enumerate(m.columns):
        lattice.add(column, label=c)
    return lattice


def hermite_basis(m: IntMatrix) -> IntMatrix:
    """Reduced echelon basis of the column lattice of m, as columns"""
    lattice = _lattice_of(m)
    basis = lattice.hermite_form()
    return IntMatrix(rows=m.rows, cols=len(basis), columns=basis)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """
    Basis of the integer kernel of m

    Taken from the unimodular column transform of the echelon reduction:
    generators that reduce to zero leave behind the combination that killed them.
    """
    lattice = _lattice_of(m, keep_relations=True)
    relations = lattice.relations
    logger.debug(f"Kernel basis: {m.rows}x{m.cols} matrix, rank {lattice.rank}, nullity {len(relations)}")
    return IntMatrix(rows=m.cols, cols=len(relations), columns=relations)


def column_rank(m: IntMatrix) -> int:
    return _lattice_of(m).rank


def smith_normal_form(m: IntMatrix, with_transforms: bool = False) -> SmithForm:
    """
    Invariant factors of m over the integers

    The column lattice is first compressed to its echelon basis (invariant
    factors depend only on that lattice), then handed to sympy's Smith form
    over ZZ. Transforms, when requested, are computed on the uncompressed
    matrix so that left @ m @ right is diagonal.

    Args:
        m: Integer matrix
        with_transforms: Also return unimodular left/right transforms

    Returns:
        SmithForm with positive factors in divisibility order
    """
    if m.rows == 0 or m.cols == 0:
        identity_left = [[int(r == c) for c in range(m.rows)] for r in range(m.rows)]
        identity_right = [[int(r == c) for c in range(m.cols)] for r in range(m.cols)]
        if with_transforms:
            return SmithForm((), 0, identity_left, identity_right)
        return SmithForm((), 0)

    if with_transforms:
        smf, left, right = smith_normal_decomp(m.to_domain_matrix())
        dense = smf.to_Matrix().tolist()
        diagonal = [abs(int(dense[i][i])) for i in range(min(m.rows, m.cols))]
        factors = tuple(sorted(d for d in diagonal if d))
        return SmithForm(
            factors,
            len(factors),
            [[int(x) for x in row] for row in left.to_Matrix().tolist()],
            [[int(x) for x in row] for row in right.to_Matrix().tolist()],
        )

    compressed = hermite_basis(m)
    if compressed.cols == 0:
        return SmithForm((), 0)
    factors = tuple(sorted(
        abs(int(d)) for d in invariant_factors(compressed.to_domain_matrix()) if d
    ))
    return SmithForm(factors, len(factors))


def lattice_contains(generators: IntMatrix, vector: Sequence[int]) -> Tuple[bool, Optional[List[int]]]:
    """
    Decide whether vector is an integer combination of the generator columns

    Args:
        generators: Matrix whose columns span the lattice
        vector: Dense integer vector

    Returns:
        (True, coefficients) with generators @ coefficients == vector, or (False, None)

    Raises:
        DimensionMismatchError: If vector length differs from generator height
    """
    if len(vector) != generators.rows:
        raise DimensionMismatchError(
            "Vector length does not match generator height",
            details={"rows": generators.rows, "length": len(vector)}
        )
    lattice = _lattice_of(generators, track_certificates=True)
    target = {i: int(v) for i, v in enumerate(vector) if v}
    combination = lattice.certificate(target)
    if combination is None:
        return False, None
    return True, [combination.get(c, 0) for c in range(generators.cols)]


def quotient_invariants(kernel_gens: IntMatrix, image_gens: IntMatrix) -> Tuple[int, List[int]]:
    """
    Structure of the quotient lattice span(kernel_gens) / span(image_gens)

    Args:
        kernel_gens: Generators of the ambient sublattice
        image_gens: Generators of the sublattice being divided out

    Returns:
        (free rank, invariant factors greater than one)

    Raises:
        LatticeContainmentError: If some image generator is not in the kernel lattice
    """
    if kernel_gens.rows != image_gens.rows:
        raise DimensionMismatchError(
            "Kernel and image generators live in different ambient lattices",
            details={"kernel_rows": kernel_gens.rows, "image_rows": image_gens.rows}
        )
    kernel = _lattice_of(kernel_gens)
    r = kernel.rank

    coordinate_columns: List[SparseVector] = []
    for c, column in enumerate(image_gens.columns):
        coords = kernel.coordinates(column)
        if coords is None:
            raise LatticeContainmentError(
                "Image generator is not contained in the kernel lattice",
                details={"column": c}
            )
        coordinate_columns.append({i: v for i, v in enumerate(coords) if v})

    coordinates = IntMatrix(rows=r, cols=len(coordinate_columns), columns=coordinate_columns)
    snf = smith_normal_form(coordinates)
    return r - snf.rank, snf.torsion
