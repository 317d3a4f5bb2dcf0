"""Built-in groups addressable by name."""

from __future__ import annotations

import re
from functools import lru_cache

from .errors import DomainError
from .groups import FiniteGroupTable, closure, within_ceiling
from .perm import Permutation


def _cyc(text: str, degree: int) -> Permutation:
    return Permutation.from_cycles(text, degree)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> FiniteGroupTable:
    if n < 1:
        raise DomainError(f"S_n needs n >= 1, got {n}")
    if n == 1:
        return closure([Permutation.identity(1)])
    return closure([_cyc(f"({i},{i + 1})", n) for i in range(1, n)])


@lru_cache(maxsize=None)
def alternating_group(n: int) -> FiniteGroupTable:
    if n < 3:
        raise DomainError(f"A_n is built for n >= 3, got {n}")
    return closure([_cyc(f"(1,2,{k})", n) for k in range(3, n + 1)])


@lru_cache(maxsize=None)
def cyclic_group(m: int) -> FiniteGroupTable:
    """Z_m acting regularly on m points."""
    if m < 1:
        raise DomainError(f"Z_m needs m >= 1, got {m}")
    if m == 1:
        return closure([Permutation.identity(1)])
    return closure([Permutation(list(range(1, m)) + [0])])


@lru_cache(maxsize=None)
def klein_four() -> FiniteGroupTable:
    return closure([_cyc("(1,2)(3,4)", 4), _cyc("(1,3)(2,4)", 4)])


@lru_cache(maxsize=None)
def dihedral_square() -> FiniteGroupTable:
    """D_4, the symmetries of a square (order 8)."""
    return closure([_cyc("(1,2,3,4)", 4), _cyc("(1,3)", 4)])


@lru_cache(maxsize=None)
def quaternion() -> FiniteGroupTable:
    """Q_8 in its regular representation on 8 points."""
    return closure([_cyc("(1,2,3,4)(5,6,7,8)", 8), _cyc("(1,5,3,7)(2,8,4,6)", 8)])


def _sp(g: int) -> FiniteGroupTable:
    from .symplectic import sp_group

    return sp_group(g)


_PATTERNS = [
    (re.compile(r"S([1-7])"), lambda m: symmetric_group(int(m))),
    (re.compile(r"A([3-7])"), lambda m: alternating_group(int(m))),
    (re.compile(r"Z([1-9]|1[0-2])"), lambda m: cyclic_group(int(m))),
    (re.compile(r"sp([246])"), lambda m: _sp(int(m) // 2)),
]
_FIXED = {"klein4": klein_four, "D4": dihedral_square, "Q8": quaternion}

BUILTIN_NAMES = (
    [f"S{k}" for k in range(2, 8)]
    + [f"A{k}" for k in range(4, 7)]
    + ["sp2", "sp4", "sp6"]
    + [f"Z{k}" for k in range(1, 13)]
    + ["klein4", "D4", "Q8"]
)


def builtin_group(name: str) -> FiniteGroupTable:
    """Look up a built-in group; raises CeilingExceededError if it is larger
    than the current element ceiling, even when the table is cached."""
    if name in _FIXED:
        return within_ceiling(_FIXED[name]())
    for pattern, make in _PATTERNS:
        m = pattern.fullmatch(name)
        if m:
            return within_ceiling(make(m.group(1)))
    raise DomainError(f"unknown group {name!r}; built-in names: {', '.join(BUILTIN_NAMES)}")


# The eight groups of order at most 6, one per isomorphism type.
SMALL_GROUP_NAMES = ("Z1", "Z2", "Z3", "Z4", "klein4", "Z5", "Z6", "S3")

# Targets for the order-120 falsification run.
THEOREM_A_NAMES = (
    ("S2", "S3", "S4", "S5", "A4", "A5")
    + tuple(f"Z{k}" for k in range(1, 13))
    + ("klein4", "D4", "Q8")
)
