"""Vectors and matrices over GF(2), stored as bit-packed Python ints.

Coordinate ``j`` (0-based) of a vector is bit ``j``.  Matrices act on row
vectors: row ``i`` of a matrix is the image of the basis vector ``e_i``, and
``v @ M`` is the XOR of the rows selected by the bits of ``v``.  With this
convention ``A * B`` (apply ``A`` first, then ``B``) is the ordinary matrix
product ``A B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import CarrierMismatchError


def _alt_mask(length: int) -> int:
    # bits 0, 2, 4, ... : the first coordinate of each symplectic pair
    return int("01" * (length // 2), 2) if length else 0


@dataclass(frozen=True, order=True)
class GF2Vector:
    length: int
    bits: int

    def __post_init__(self):
        if self.length <= 0 or self.length % 2:
            raise ValueError(f"vector length must be even and positive, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def basis(cls, i: int, length: int) -> GF2Vector:
        """The 1-based standard basis vector e_i."""
        if not 1 <= i <= length:
            raise ValueError(f"basis index {i} outside 1..{length}")
        return cls(length, 1 << (i - 1))

    @classmethod
    def from_list(cls, coords: Sequence[int]) -> GF2Vector:
        return cls(len(coords), sum((c & 1) << j for j, c in enumerate(coords)))

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: GF2Vector) -> GF2Vector:
        if not isinstance(other, GF2Vector):
            return NotImplemented
        if other.length != self.length:
            raise CarrierMismatchError(f"length {self.length} vs {other.length}")
        return GF2Vector(self.length, self.bits ^ other.bits)

    def __matmul__(self, m: GF2Matrix) -> GF2Vector:
        if not isinstance(m, GF2Matrix):
            return NotImplemented
        if m.dim != self.length:
            raise CarrierMismatchError(f"length {self.length} vs matrix dim {m.dim}")
        return GF2Vector(self.length, m.apply_bits(self.bits))

    def __str__(self):
        return "".join(map(str, self.to_list()))


def symplectic_form_bits(u: int, v: int, length: int) -> int:
    """The form on raw bit-packed vectors (no validation)."""
    m = _alt_mask(length)
    swapped = ((v & m) << 1) | ((v >> 1) & m)
    return (u & swapped).bit_count() & 1


@total_ordering
class GF2Matrix:
    """A square matrix over GF(2); ``rows[i]`` is the image of e_{i+1}."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows: Iterable[int], dim: int | None = None):
        rows = tuple(int(r) for r in rows)
        if dim is None:
            dim = len(rows)
        if len(rows) != dim or dim <= 0:
            raise ValueError(f"expected {dim} rows, got {len(rows)}")
        for r in rows:
            if r < 0 or r >> dim:
                raise ValueError(f"row {r:#x} does not fit in dimension {dim}")
        self.dim = dim
        self.rows = rows

    @classmethod
    def identity(cls, dim: int) -> GF2Matrix:
        return cls([1 << i for i in range(dim)], dim)

    @classmethod
    def from_key(cls, key: int, dim: int) -> GF2Matrix:
        mask = (1 << dim) - 1
        return cls([(key >> (i * dim)) & mask for i in range(dim)], dim)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> GF2Matrix:
        return cls([GF2Vector.from_list(r).bits for r in rows], len(rows))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.dim)] for r in self.rows]

    @property
    def key(self) -> int:
        k = 0
        for i, r in enumerate(self.rows):
            k |= r << (i * self.dim)
        return k

    def apply_bits(self, x: int) -> int:
        acc = 0
        i = 0
        while x:
            if x & 1:
                acc ^= self.rows[i]
            x >>= 1
            i += 1
        return acc

    def __call__(self, v: GF2Vector) -> GF2Vector:
        return v @ self

    def __mul__(self, other: GF2Matrix) -> GF2Matrix:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        if other.dim != self.dim:
            raise CarrierMismatchError(f"dimension {self.dim} vs {other.dim}")
        return GF2Matrix([other.apply_bits(r) for r in self.rows], self.dim)

    def inverse(self) -> GF2Matrix:
        """Gauss-Jordan inverse; raises ``ValueError`` when singular."""
        n = self.dim
        a = list(self.rows)
        b = [1 << i for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if (a[r] >> col) & 1), None)
            if piv is None:
                raise ValueError("matrix is singular over GF(2)")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            for r in range(n):
                if r != col and (a[r] >> col) & 1:
                    a[r] ^= a[col]
                    b[r] ^= b[col]
        return GF2Matrix(b, n)

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except ValueError:
            return False
        return True

    def is_identity(self) -> bool:
        return all(r == 1 << i for i, r in enumerate(self.rows))

    def __add__(self, other: GF2Matrix) -> GF2Matrix:
        if other.dim != self.dim:
            raise CarrierMismatchError(f"dimension {self.dim} vs {other.dim}")
        return GF2Matrix([a ^ b for a, b in zip(self.rows, other.rows)], self.dim)

    def __eq__(self, other):
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __lt__(self, other):
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return (self.dim, self.key) < (other.dim, other.key)

    def __hash__(self):
        return hash((self.dim, self.rows))

    def __str__(self):
        return "[" + " ".join(
            "".join(str((r >> j) & 1) for j in range(self.dim)) for r in self.rows
        ) + "]"

    def __repr__(self):
        return f"GF2Matrix({list(self.rows)!r}, dim={self.dim})"
