"""Exact arithmetic over prime fields GF(q), plus the dense linear algebra
(determinant, linear solve) the rest of the package is built on.

Elements are residues modulo a prime q.  q is validated with a
deterministic Miller-Rabin witness set that is exact for 64-bit inputs,
and is capped at 2**63 so products stay inside Python's fast int range.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = [
    "PrimeField",
    "FieldElement",
    "FieldMatrix",
    "SingularMatrixError",
    "is_prime",
    "smallest_prime_above",
    "determinant",
    "solve_linear",
]

# Jaeschke / Sorenson-Webster witness set: deterministic for n < 3.3 * 10^24,
# which covers every 64-bit integer.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_Q_CAP = 1 << 63


class SingularMatrixError(ValueError):
    """Raised when a linear solve meets a singular coefficient matrix."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for n < 2**64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def smallest_prime_above(m: int) -> int:
    """Least prime q with q > m.

    Typical use: q > C(n-1, k-1), the field size under which a valid
    support pattern is guaranteed to carry an MDS generator matrix.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    q = m + 1
    while not is_prime(q):
        q += 1
    return q


def field_size_bound(n: int, k: int) -> int:
    """The binomial bound C(n-1, k-1) that the field size must exceed."""
    return comb(n - 1, k - 1)


class PrimeField:
    """The prime field GF(q).  Immutable; instances compare by modulus."""

    __slots__ = ("q",)

    def __init__(self, q: int):
        if q < 2 or q >= _Q_CAP:
            raise ValueError(f"modulus must be in [2, 2^63), got {q}")
        if not is_prime(q):
            raise ValueError(f"modulus {q} is not prime")
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeField is immutable")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.q == other.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.q, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1 % self.q, self)


@dataclass(frozen=True)
class FieldElement:
    """A residue in [0, q) tied to its field.

    Mixing elements of different fields raises ValueError.
    """

    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"value {self.value} outside [0, {self.field.q})")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError(
                f"field mismatch: GF({self.field.q}) vs GF({other.field.q})"
            )

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement((self.value + other.value) % self.field.q, self.field)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement((self.value - other.value) % self.field.q, self.field)

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value % self.field.q, self.field)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement((self.value * other.value) % self.field.q, self.field)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("cannot invert zero")
        # Fermat: a^(q-2) = a^-1 in GF(q).
        return FieldElement(pow(self.value, self.field.q - 2, self.field.q), self.field)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self * other.inverse()

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.field.q})"


class FieldMatrix:
    """A rectangular matrix over a single prime field."""

    def __init__(self, entries: list[list[FieldElement]]):
        if not entries or not entries[0]:
            raise ValueError("matrix must be nonempty")
        field = entries[0][0].field
        cols = len(entries[0])
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged rows")
            for e in row:
                if e.field != field:
                    raise ValueError("mixed fields in matrix")
        self.entries = [list(row) for row in entries]
        self.rows = len(entries)
        self.cols = cols
        self.field = field

    @classmethod
    def from_ints(cls, field: PrimeField, data: list[list[int]]) -> "FieldMatrix":
        return cls([[field.element(v) for v in row] for row in data])

    def to_ints(self) -> list[list[int]]:
        return [[e.value for e in row] for row in self.entries]

    def __repr__(self):
        return f"FieldMatrix({self.rows}x{self.cols} over GF({self.field.q}))"


def _det_mod(data: list[list[int]], q: int) -> int:
    """Determinant of a square integer matrix mod prime q, by elimination."""
    n = len(data)
    a = [row[:] for row in data]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] % q != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det % q
        inv = pow(a[col][col], q - 2, q)
        det = det * a[col][col] % q
        for r in range(col + 1, n):
            factor = a[r][col] * inv % q
            if factor:
                for c in range(col, n):
                    a[r][c] = (a[r][c] - factor * a[col][c]) % q
    return det % q


def determinant(a: FieldMatrix) -> FieldElement:
    """det(A) over GF(q).  Raises ValueError for non-square input."""
    if a.rows != a.cols:
        raise ValueError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")
    return a.field.element(_det_mod(a.to_ints(), a.field.q))


def _solve_mod(data: list[list[int]], rhs: list[int], q: int) -> list[int]:
    n = len(data)
    a = [row[:] + [b] for row, b in zip(data, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] % q != 0), None)
        if pivot is None:
            raise SingularMatrixError("coefficient matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = pow(a[col][col], q - 2, q)
        a[col] = [v * inv % q for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [(vr - factor * vc) % q for vr, vc in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def solve_linear(a: FieldMatrix, b: list[FieldElement]) -> list[FieldElement]:
    """Solve A x = b for square nonsingular A.

    Raises ValueError on shape mismatch and SingularMatrixError (a distinct
    subclass) when A is singular.
    """
    if a.rows != a.cols:
        raise ValueError(f"solve needs a square matrix, got {a.rows}x{a.cols}")
    if len(b) != a.rows:
        raise ValueError(f"rhs length {len(b)} != {a.rows}")
    for e in b:
        if e.field != a.field:
            raise ValueError("field mismatch between matrix and rhs")
    xs = _solve_mod(a.to_ints(), [e.value for e in b], a.field.q)
    return [a.field.element(x) for x in xs]
