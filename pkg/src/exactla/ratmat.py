"""
Rational Matrices
Immutable dense matrices over the rationals
"""

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, List, Sequence, Tuple, Union

Rational = Union[int, Fraction, str]


class DimensionError(ValueError):
    """Raised when matrix shapes do not fit the requested operation"""


def to_fraction(value: Rational) -> Fraction:
    """Parse an int, Fraction or "p/q" string into a normalized Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Serialize a rational as "n" or "p/q" """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class RatMat:
    """Dense matrix with exact rational entries.

    Rows are tuples of normalized Fractions. Instances are immutable and
    hashable, so they can key caches and be compared for exact equality.
    """

    __slots__ = ("_entries", "_cols")

    def __init__(self, rows: Iterable[Iterable[Rational]], cols: int = None):
        entries = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise DimensionError("ragged rows")
            if cols is not None and cols != width:
                raise DimensionError(f"expected {cols} columns, got {width}")
        else:
            width = cols if cols is not None else 0
        self._entries = entries
        self._cols = width

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RatMat":
        return cls(((1 if i == j else 0) for j in range(n)) for i in range(n))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMat":
        return cls(((0,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def diagonal(cls, values: Sequence[Rational]) -> "RatMat":
        n = len(values)
        return cls(((values[i] if i == j else 0) for j in range(n)) for i in range(n))

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]], cols: int = None) -> "RatMat":
        return cls(rows, cols=cols)

    @staticmethod
    def hstack(*mats: "RatMat") -> "RatMat":
        if not mats:
            raise DimensionError("nothing to stack")
        height = mats[0].rows
        if any(m.rows != height for m in mats):
            raise DimensionError("row counts differ")
        cols = sum(m.cols for m in mats)
        return RatMat((sum((m.entries[i] for m in mats), ()) for i in range(height)), cols=cols)

    @staticmethod
    def vstack(*mats: "RatMat") -> "RatMat":
        if not mats:
            raise DimensionError("nothing to stack")
        width = mats[0].cols
        if any(m.cols != width for m in mats):
            raise DimensionError("column counts differ")
        return RatMat((row for m in mats for row in m.entries), cols=width)

    @staticmethod
    def block_diagonal(*mats: "RatMat") -> "RatMat":
        cols = sum(m.cols for m in mats)
        out: List[List[Fraction]] = []
        offset = 0
        for m in mats:
            for row in m.entries:
                line = [Fraction(0)] * cols
                line[offset:offset + m.cols] = row
                out.append(line)
            offset += m.cols
        return RatMat(out, cols=cols)

    @staticmethod
    def kron(a: "RatMat", b: "RatMat") -> "RatMat":
        out = []
        for ra in a.entries:
            for rb in b.entries:
                out.append([x * y for x in ra for y in rb])
        return RatMat(out, cols=a.cols * b.cols)

    # -- shape and access ---------------------------------------------

    @property
    def rows(self) -> int:
        return len(self._entries)

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._entries

    def __getitem__(self, index):
        if isinstance(index, tuple):
            i, j = index
            return self._entries[i][j]
        return self._entries[index]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return self.rows

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self._entries[i]

    def take_rows(self, indices: Iterable[int]) -> "RatMat":
        return RatMat((self._entries[i] for i in indices), cols=self.cols)

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self._entries)

    @property
    def T(self) -> "RatMat":
        if not self.rows:
            return RatMat([[] for _ in range(self._cols)], cols=0)
        return RatMat(zip(*self._entries), cols=self.rows)

    # -- arithmetic ---------------------------------------------------

    def __matmul__(self, other: "RatMat") -> "RatMat":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for row in self._entries:
            out.append([sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns])
        return RatMat(out, cols=other.cols)

    def __add__(self, other: "RatMat") -> "RatMat":
        self._check_same_shape(other)
        return RatMat(([a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other.entries)),
                      cols=self.cols)

    def __sub__(self, other: "RatMat") -> "RatMat":
        self._check_same_shape(other)
        return RatMat(([a - b for a, b in zip(r, s)] for r, s in zip(self._entries, other.entries)),
                      cols=self.cols)

    def __neg__(self) -> "RatMat":
        return RatMat(([-a for a in r] for r in self._entries), cols=self.cols)

    def __mul__(self, scalar: Rational) -> "RatMat":
        k = to_fraction(scalar)
        return RatMat(([k * a for a in r] for r in self._entries), cols=self.cols)

    __rmul__ = __mul__

    def vecmul(self, vector: Sequence[Rational]) -> Tuple[Fraction, ...]:
        """Row vector times matrix"""
        if len(vector) != self.rows:
            raise DimensionError(f"vector of length {len(vector)} against {self.shape}")
        out = [Fraction(0)] * self.cols
        for coeff, row in zip(vector, self._entries):
            if coeff:
                c = to_fraction(coeff)
                out = [o + c * a for o, a in zip(out, row)]
        return tuple(out)

    def _check_same_shape(self, other: "RatMat") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    # -- predicates and conversion ------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._entries[i][j] == self._entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self._entries for x in row)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._entries for x in row)

    def denominator(self) -> int:
        """Least common multiple of all entry denominators"""
        return reduce(lcm, (x.denominator for row in self._entries for x in row), 1)

    def to_ints(self) -> List[List[int]]:
        if not self.is_integral():
            raise ValueError("matrix has non-integral entries")
        return [[x.numerator for x in row] for row in self._entries]

    def scaled_ints(self) -> Tuple[List[List[int]], int]:
        """Return (D * self as ints, D) for the least common denominator D"""
        d = self.denominator()
        return [[(x * d).numerator for x in row] for row in self._entries], d

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(x) for x in row] for row in self._entries]

    def trace(self) -> Fraction:
        return sum((self._entries[i][i] for i in range(min(self.shape))), Fraction(0))

    # -- dunder -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMat):
            return NotImplemented
        return self._cols == other._cols and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._cols, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self._entries)
        return f"RatMat({self.rows}x{self.cols}: [{body}])"
