"""Packed-key carriers and kernel backend selection.

A carrier describes how elements of one concrete type and size (permutations
of a fixed degree, GF(2) matrices of a fixed dimension) are packed into
integer keys, and routes bulk products to a kernel backend.

The compiled backend (``_ckernels``) is used when it imports and the
``SMALLQUOT_PURE_PYTHON`` environment variable is unset; otherwise the NumPy
backend (``_pykernels``) is used.  Keys wider than 64 bits always go through
the NumPy backend on ``object`` arrays.
"""

from __future__ import annotations

import contextlib
import os

import numpy as np

from . import _pykernels
from .errors import CarrierMismatchError
from .gf2 import GF2Matrix
from .perm import Permutation, _key_width

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

if _ckernels is not None and not os.environ.get("SMALLQUOT_PURE_PYTHON"):
    _backend = _ckernels
else:
    _backend = _pykernels


def backend_name() -> str:
    return "compiled" if _backend is _ckernels else "python"


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _ckernels is not None else [])


def set_backend(name: str) -> None:
    global _backend
    if name == "python":
        _backend = _pykernels
    elif name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        _backend = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")


@contextlib.contextmanager
def using_backend(name: str):
    previous = backend_name()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


class Carrier:
    """Packing scheme for one element type and size."""

    __slots__ = ("kind", "size", "bits", "dtype")

    PERM = _pykernels.PERM
    GF2 = _pykernels.GF2

    def __init__(self, kind: int, size: int):
        self.kind = kind
        self.size = size
        if kind == self.PERM:
            self.bits = _key_width(size) * size
        else:
            self.bits = size * size
        self.dtype = np.dtype(np.uint64) if self.bits <= 64 else np.dtype(object)

    @classmethod
    def of(cls, x) -> Carrier:
        if isinstance(x, Permutation):
            return cls(cls.PERM, x.degree)
        if isinstance(x, GF2Matrix):
            return cls(cls.GF2, x.dim)
        raise TypeError(f"no carrier for {type(x).__name__}")

    def __eq__(self, other):
        return isinstance(other, Carrier) and (self.kind, self.size) == (other.kind, other.size)

    def __hash__(self):
        return hash((self.kind, self.size))

    def __repr__(self):
        name = "perm" if self.kind == self.PERM else "gf2"
        return f"Carrier({name}, {self.size})"

    def describe(self) -> str:
        if self.kind == self.PERM:
            return f"permutations of degree {self.size}"
        return f"{self.size}x{self.size} matrices over GF(2)"

    def check(self, x) -> None:
        if Carrier.of(x) != self:
            raise CarrierMismatchError(f"{x!r} is not one of the {self.describe()}")

    def encode(self, x) -> int:
        self.check(x)
        return x.key

    def decode(self, key):
        key = int(key)
        if self.kind == self.PERM:
            return Permutation.from_key(key, self.size)
        return GF2Matrix.from_key(key, self.size)

    def identity(self):
        if self.kind == self.PERM:
            return Permutation.identity(self.size)
        return GF2Matrix.identity(self.size)

    def keys(self, elements) -> np.ndarray:
        return np.array([self.encode(x) for x in elements], dtype=self.dtype).reshape(-1)

    def _kernels(self):
        return _backend if self.dtype != object else _pykernels

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of key arrays; either side may have length 1."""
        return self._kernels().mul(self.kind, self.size, a, b)

    def extend_closure(self, seed, old_gens, new_gens, ceiling):
        return self._kernels().extend_closure(
            self.kind, self.size, seed, old_gens, new_gens, int(ceiling)
        )

    def conjugation_labels(self, keys, gens, gen_invs):
        return self._kernels().conjugation_labels(self.kind, self.size, keys, gens, gen_invs)


def hom_search(braid: np.ndarray, comm: np.ndarray, firsts, length: int) -> np.ndarray:
    return _backend.hom_search(
        np.ascontiguousarray(braid, dtype=np.uint8),
        np.ascontiguousarray(comm, dtype=np.uint8),
        np.asarray(firsts, dtype=np.int64),
        int(length),
    )
