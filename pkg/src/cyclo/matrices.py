"""
Cyclotomic Matrices
Square matrices over Q(ω)
"""

from typing import Callable, List, Sequence

from ..exactla import DimensionError, Rational
from .numbers import CycNum


class CycMat:
    """Square matrix of CycNum entries sharing one conductor"""

    def __init__(self, conductor: int, rows: Sequence[Sequence[CycNum]]):
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise DimensionError("cyclotomic matrices are square")
        self.conductor = conductor
        self.size = size
        self.rows: List[List[CycNum]] = [list(r) for r in rows]

    @classmethod
    def build(cls, conductor: int, size: int, entry: Callable[[int, int], CycNum]) -> "CycMat":
        return cls(conductor, [[entry(i, j) for j in range(size)] for i in range(size)])

    @classmethod
    def from_ints(cls, conductor: int, rows: Sequence[Sequence[Rational]]) -> "CycMat":
        return cls(conductor, [[CycNum.rational(conductor, x) for x in r] for r in rows])

    @classmethod
    def identity(cls, conductor: int, size: int) -> "CycMat":
        return cls.build(conductor, size, lambda i, j: CycNum.rational(conductor, int(i == j)))

    @classmethod
    def elementary(cls, conductor: int, size: int, i: int, j: int) -> "CycMat":
        """E_{i,j}"""
        return cls.build(conductor, size,
                         lambda a, b: CycNum.rational(conductor, int((a, b) == (i, j))))

    @classmethod
    def diagonal(cls, conductor: int, entries: Sequence[CycNum]) -> "CycMat":
        zero = CycNum.zero(conductor)
        return cls.build(conductor, len(entries), lambda i, j: entries[i] if i == j else zero)

    def __getitem__(self, index) -> CycNum:
        i, j = index
        return self.rows[i][j]

    def __matmul__(self, other: "CycMat") -> "CycMat":
        if self.size != other.size:
            raise DimensionError(f"cannot multiply sizes {self.size} and {other.size}")
        zero = CycNum.zero(self.conductor)
        out = []
        for row in self.rows:
            new = []
            for j in range(other.size):
                total = zero
                for k, a in enumerate(row):
                    if not a.is_zero():
                        b = other.rows[k][j]
                        if not b.is_zero():
                            total = total + a * b
                new.append(total)
            out.append(new)
        return CycMat(self.conductor, out)

    def __mul__(self, scalar) -> "CycMat":
        return CycMat(self.conductor, [[x * scalar for x in r] for r in self.rows])

    __rmul__ = __mul__

    @property
    def T(self) -> "CycMat":
        return CycMat.build(self.conductor, self.size, lambda i, j: self.rows[j][i])

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j].is_zero() for i in range(self.size) for j in range(self.size) if i != j)

    def diagonal_entries(self) -> List[CycNum]:
        return [self.rows[i][i] for i in range(self.size)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycMat):
            return NotImplemented
        return self.conductor == other.conductor and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.conductor, tuple(tuple(r) for r in self.rows)))

    def __repr__(self) -> str:
        return f"CycMat(conductor={self.conductor}, size={self.size})"
