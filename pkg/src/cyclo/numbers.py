"""
Cyclotomic Numbers
Exact elements of Q(ω) for ω a primitive n-th root of unity
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from sympy import Symbol, cyclotomic_poly, totient

from ..exactla import Rational, to_fraction

_X = Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> Tuple[int, ...]:
    """Φ_n as integer coefficients, lowest degree first"""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = cyclotomic_poly(n, _X, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def degree(n: int) -> int:
    return int(totient(n))


def _reduce(n: int, coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    phi = cyclotomic_coefficients(n)
    d = len(phi) - 1
    work = list(coeffs)
    # Φ_n is monic: x^d = −Σ_{k<d} phi[k] x^k
    for top in range(len(work) - 1, d - 1, -1):
        c = work[top]
        if c:
            work[top] = Fraction(0)
            for k in range(d):
                work[top - d + k] -= c * phi[k]
    work = work[:d] + [Fraction(0)] * (d - len(work))
    return tuple(work)


class CycNum:
    """Σ c_k ω^k over the power basis 1, ω, …, ω^(φ(n)−1)"""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence[Rational]):
        self.conductor = conductor
        self.coeffs = _reduce(conductor, [to_fraction(c) for c in coeffs])

    @classmethod
    def zero(cls, n: int) -> "CycNum":
        return cls(n, ())

    @classmethod
    def rational(cls, n: int, value: Rational) -> "CycNum":
        return cls(n, (value,))

    @classmethod
    def root_power(cls, n: int, k: int) -> "CycNum":
        """ω^k for any integer k"""
        k %= n
        return cls(n, [0] * k + [1])

    def _same_field(self, other: "CycNum") -> None:
        if self.conductor != other.conductor:
            raise ValueError(f"Q(ζ_{self.conductor}) and Q(ζ_{other.conductor}) differ")

    def __add__(self, other: "CycNum") -> "CycNum":
        self._same_field(other)
        return CycNum(self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CycNum") -> "CycNum":
        self._same_field(other)
        return CycNum(self.conductor, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycNum":
        return CycNum(self.conductor, [-a for a in self.coeffs])

    def __mul__(self, other) -> "CycNum":
        if not isinstance(other, CycNum):
            s = to_fraction(other)
            return CycNum(self.conductor, [s * a for a in self.coeffs])
        self._same_field(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return CycNum(self.conductor, out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.conductor, self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*w^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return f"CycNum[{self.conductor}]({' + '.join(terms) or '0'})"
