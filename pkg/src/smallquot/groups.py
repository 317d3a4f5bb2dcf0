"""Enumerated finite groups and the orbit-stabilizer toolkit.

Conventions used everywhere in the package:

* ``a * b`` applies ``a`` first, then ``b``.
* Conjugating ``x`` by ``g`` gives ``g * x * g.inverse()``.

A :class:`FiniteGroupTable` stores its elements as packed keys (see
:mod:`smallquot.carriers`) in breadth-first order; element objects are
materialised on demand.  All heavy loops go through the carrier kernels.
"""

from __future__ import annotations

import os
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .carriers import Carrier
from .errors import (
    CarrierMismatchError,
    CeilingExceededError,
    DomainError,
    NotInGroupError,
    TrivialGroupError,
)

DEFAULT_CEILING = 4_000_000


_ceiling_override: int | None = None


def default_ceiling() -> int:
    """Element-count ceiling for closures: an explicit override, then the
    ``SMALLQUOT_MAX_ELEMENTS`` environment variable, then 4 million."""
    if _ceiling_override is not None:
        return _ceiling_override
    env = os.environ.get("SMALLQUOT_MAX_ELEMENTS")
    return int(env) if env else DEFAULT_CEILING


def set_default_ceiling(value: int | None) -> None:
    global _ceiling_override
    if value is not None and value < 1:
        raise ValueError(f"ceiling must be positive, got {value}")
    _ceiling_override = value


def within_ceiling(G: "FiniteGroupTable", ceiling: int | None = None) -> "FiniteGroupTable":
    """Return ``G`` unless it is larger than the ceiling; used for cached tables."""
    limit = default_ceiling() if ceiling is None else ceiling
    if G.order > limit:
        raise CeilingExceededError(limit)
    return G


def compose(a, b):
    """``a * b`` with carrier checking: apply ``a`` first, then ``b``."""
    if Carrier.of(a) != Carrier.of(b):
        raise CarrierMismatchError(f"cannot multiply {a!r} by {b!r}")
    return a * b


def inverse(a):
    return a.inverse()


def conjugate(x, g):
    """``g * x * g^-1``."""
    return compose(compose(g, x), g.inverse())


class FiniteGroupTable:
    """A fully enumerated finite group.

    ``keys`` holds every element's packed key in breadth-first order from
    the identity (each BFS level sorted by key).  ``index`` maps a key to
    its position in that order.
    """

    def __init__(self, carrier: Carrier, generators: Sequence, keys: np.ndarray):
        self.carrier = carrier
        self.generators = tuple(generators)
        self.keys = keys
        self.keys.setflags(write=False)
        order = np.argsort(keys, kind="stable")
        self._sorted = keys[order]
        self._positions = order

    @property
    def order(self) -> int:
        return int(self.keys.size)

    def __len__(self):
        return self.order

    def __getitem__(self, i: int):
        return self.carrier.decode(self.keys[i])

    def __iter__(self) -> Iterator:
        for k in self.keys:
            yield self.carrier.decode(k)

    @property
    def elements(self) -> list:
        return list(self)

    @property
    def identity(self):
        return self.carrier.identity()

    @cached_property
    def generator_keys(self) -> np.ndarray:
        return self.carrier.keys(self.generators)

    @cached_property
    def generator_inverse_keys(self) -> np.ndarray:
        return self.carrier.keys([g.inverse() for g in self.generators])

    @property
    def sorted_keys(self) -> np.ndarray:
        return self._sorted

    def contains_keys(self, keys: np.ndarray) -> np.ndarray:
        keys = np.asarray(keys, dtype=self.carrier.dtype)
        idx = np.searchsorted(self._sorted, keys)
        idx[idx == self._sorted.size] = 0
        return self._sorted[idx] == keys

    def __contains__(self, x) -> bool:
        if Carrier.of(x) != self.carrier:
            return False
        return bool(self.contains_keys(self.carrier.keys([x]))[0])

    def index(self, x) -> int:
        """Position of ``x`` in :attr:`keys`."""
        if x not in self:
            raise NotInGroupError(f"{x} is not in the group")
        k = self.carrier.keys([x])
        return int(self._positions[np.searchsorted(self._sorted, k)[0]])

    def require(self, x) -> None:
        if Carrier.of(x) != self.carrier:
            raise CarrierMismatchError(f"{x!r} is not one of the {self.carrier.describe()}")
        if x not in self:
            raise NotInGroupError(f"{x} is not in the group of order {self.order}")

    @cached_property
    def small_generators(self) -> tuple:
        """A generating subset of :attr:`generators`, chosen greedily in order."""
        c = self.carrier
        chosen = []
        seed = c.keys([c.identity()])
        for g in self.generators:
            gk = c.keys([g])
            if np.isin(gk, seed)[0]:
                continue
            new = c.extend_closure(seed, c.keys(chosen), gk, self.order)
            seed = np.concatenate([seed, new])
            chosen.append(g)
            if seed.size == self.order:
                break
        return tuple(chosen) if chosen else (self.identity,)

    def __repr__(self):
        return f"<FiniteGroupTable order={self.order} of {self.carrier.describe()}>"


def _closure_keys(carrier, gen_keys, ceiling):
    seed = carrier.keys([carrier.identity()])
    try:
        new = carrier.extend_closure(seed, gen_keys[:0], gen_keys, ceiling)
    except OverflowError:
        raise CeilingExceededError(ceiling) from None
    return np.concatenate([seed, new])


def closure(generators: Iterable, ceiling: int | None = None) -> FiniteGroupTable:
    """Breadth-first closure of ``generators``.

    Elements come out in a deterministic order: level by level from the
    identity, each level sorted by key.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("closure needs at least one generator")
    carrier = Carrier.of(generators[0])
    for g in generators[1:]:
        if Carrier.of(g) != carrier:
            raise CarrierMismatchError(f"mixed generators: {carrier} and {Carrier.of(g)}")
    ceiling = default_ceiling() if ceiling is None else ceiling
    keys = _closure_keys(carrier, carrier.keys(generators), ceiling)
    return FiniteGroupTable(carrier, generators, keys)


class _GrowingSubgroup:
    """A subgroup of ``G`` grown one generator at a time."""

    def __init__(self, G: FiniteGroupTable, gens: Sequence):
        self.G = G
        self.c = G.carrier
        self.gens = []
        self.keys = self.c.keys([self.c.identity()])
        self._sorted = self.keys
        for g in gens:
            self.add(g)

    def __contains__(self, x) -> bool:
        k = self.c.keys([x])
        i = np.searchsorted(self._sorted, k)[0]
        return i < self._sorted.size and self._sorted[i] == k[0]

    def add(self, g) -> bool:
        if g in self:
            return False
        new = self.c.extend_closure(
            self.keys, self.c.keys(self.gens), self.c.keys([g]), self.G.order
        )
        self.gens.append(g)
        self.keys = np.concatenate([self.keys, new])
        self._sorted = np.sort(self.keys)
        return True

    @property
    def order(self) -> int:
        return int(self.keys.size)

    def table(self) -> FiniteGroupTable:
        gens = self.gens or [self.c.identity()]
        return FiniteGroupTable(self.c, gens, self.keys.copy())


def conjugacy_class_keys(G: FiniteGroupTable, x) -> np.ndarray:
    """Sorted keys of the conjugacy class of ``x`` in ``G``."""
    G.require(x)
    c = G.carrier
    gens = G.generator_keys
    invs = G.generator_inverse_keys
    orbit = c.keys([x])
    frontier = orbit
    while frontier.size:
        found = [
            c.mul(c.mul(gens[k:k + 1], frontier), invs[k:k + 1]) for k in range(gens.size)
        ]
        cand = np.unique(np.concatenate(found))
        cand = cand[~np.isin(cand, orbit, assume_unique=True)]
        orbit = np.union1d(orbit, cand)
        frontier = cand
    return orbit


def conjugacy_class(G: FiniteGroupTable, x) -> frozenset:
    """All conjugates ``g x g^-1`` of ``x`` with ``g`` in ``G``."""
    c = G.carrier
    return frozenset(c.decode(k) for k in conjugacy_class_keys(G, x))


def _commuting_mask(G: FiniteGroupTable, xs: Sequence) -> np.ndarray:
    c = G.carrier
    mask = np.ones(G.order, dtype=bool)
    for x in xs:
        xk = c.keys([x])
        mask &= c.mul(G.keys, xk) == c.mul(xk, G.keys)
    return mask


def _table_from_keys(G: FiniteGroupTable, keys: np.ndarray) -> FiniteGroupTable:
    """Subgroup table for a key set already known to be a subgroup of ``G``."""
    c = G.carrier
    target = keys.size
    grow = _GrowingSubgroup(G, [])
    for k in np.sort(keys):
        if grow.order == target:
            break
        grow.add(c.decode(k))
    if grow.order != target:
        raise AssertionError("key set is not closed under multiplication")
    return closure(grow.gens or [c.identity()], ceiling=G.order)


def centralizer(G: FiniteGroupTable, x) -> FiniteGroupTable:
    """Subgroup of all ``g`` in ``G`` with ``g x = x g``."""
    G.require(x)
    return _table_from_keys(G, G.keys[_commuting_mask(G, [x])])


def normal_closure(G: FiniteGroupTable, S: Sequence) -> FiniteGroupTable:
    """Smallest normal subgroup of ``G`` containing every element of ``S``."""
    S = list(S)
    for s in S:
        G.require(s)
    N = _normal_closure_growth(G, S)
    return N.table() if N.order < G.order else G


def _normal_closure_growth(G: FiniteGroupTable, S: Sequence) -> _GrowingSubgroup:
    N = _GrowingSubgroup(G, S)
    half = G.order // 2
    changed = True
    while changed and N.order <= half:
        changed = False
        for s in list(N.gens):
            for g in G.generators:
                if N.add(conjugate(s, g)):
                    changed = True
                    if N.order > half:
                        break
            if N.order > half:
                break
    if N.order > half:
        # Lagrange: a subgroup bigger than half of G is G
        N.keys = G.keys.copy()
        N._sorted = G.sorted_keys
    return N


def conjugacy_class_labels(G: FiniteGroupTable) -> np.ndarray:
    """For each position in ``G.sorted_keys``, the position of the smallest
    key in its conjugacy class."""
    gens = G.small_generators
    c = G.carrier
    return c.conjugation_labels(
        G.sorted_keys, c.keys(gens), c.keys([g.inverse() for g in gens])
    )


def class_representatives(G: FiniteGroupTable) -> list:
    """Minimal-key representative of every conjugacy class, in key order."""
    labels = conjugacy_class_labels(G)
    reps = np.unique(labels)
    return [G.carrier.decode(G.sorted_keys[i]) for i in reps]


def conjugacy_classes_keys(G: FiniteGroupTable) -> list[np.ndarray]:
    """Sorted key arrays of all conjugacy classes, ordered by representative."""
    labels = conjugacy_class_labels(G)
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    return [G.sorted_keys[np.sort(chunk)] for chunk in np.split(order, bounds)]


def proper_normal_subgroup(G: FiniteGroupTable, workers: int = 1):
    """A proper non-trivial normal subgroup of ``G`` if one exists, else None.

    Tries the normal closure of every non-identity class representative, in
    representative order; the first proper closure found is returned.
    """
    if G.order <= 1:
        raise TrivialGroupError("simplicity is undefined for the trivial group")
    reps = [r for r in class_representatives(G) if not r.is_identity()]

    def closure_order(rep):
        return _normal_closure_growth(G, [rep]).order

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(workers) as pool:
            orders = list(pool.map(closure_order, reps))
    else:
        orders = []
        for rep in reps:
            orders.append(closure_order(rep))
            if orders[-1] < G.order:
                break
    for rep, order in zip(reps, orders):
        if order < G.order:
            return normal_closure(G, [rep])
    return None


def is_simple(G: FiniteGroupTable, workers: int = 1) -> bool:
    """True iff every non-identity element normally generates ``G``."""
    return proper_normal_subgroup(G, workers=workers) is None


ACTIONS = ("conjugation", "conjugation_pairs")


def orbit_stabilizer(G: FiniteGroupTable, action: str, point) -> tuple[int, int]:
    """(orbit size, stabilizer size) of ``point`` under ``action``.

    ``conjugation`` acts on single elements, ``conjugation_pairs`` on ordered
    pairs of elements (simultaneous conjugation).  The orbit is found by
    breadth-first search over the generators and the stabilizer by a scan
    over the whole group; the two are checked against ``|G|``.
    """
    if action == "conjugation":
        pts = [point]
    elif action == "conjugation_pairs":
        try:
            pts = list(point)
        except TypeError:
            raise DomainError("conjugation_pairs needs an ordered pair of elements") from None
        if len(pts) != 2:
            raise DomainError("conjugation_pairs needs an ordered pair of elements")
    else:
        raise DomainError(f"unknown action {action!r}; expected one of {ACTIONS}")
    for p in pts:
        try:
            G.require(p)
        except (CarrierMismatchError, TypeError) as exc:
            raise NotInGroupError(str(exc)) from None
    orbit = len(tuple_orbit(G, pts))
    stab = int(_commuting_mask(G, pts).sum())
    if orbit * stab != G.order:
        raise AssertionError(f"orbit {orbit} x stabilizer {stab} != |G| = {G.order}")
    return orbit, stab


def tuple_orbit(G: FiniteGroupTable, pts: Sequence) -> np.ndarray:
    """Orbit of a tuple of elements under simultaneous conjugation.

    Returns an ``(m, len(pts))`` array of keys, one row per orbit point.
    """
    if len(pts) == 1:
        return conjugacy_class_keys(G, pts[0]).reshape(-1, 1)
    c = G.carrier
    gens = G.generator_keys
    invs = G.generator_inverse_keys
    t = len(pts)
    base = G.order
    code_dtype = np.int64 if base ** t < 2**63 else object
    weights = np.array([base**j for j in range(t)], dtype=code_dtype)

    def encode(rows):
        pos = np.stack(
            [np.searchsorted(G.sorted_keys, rows[:, j]) for j in range(t)], axis=1
        ).astype(code_dtype)
        return (pos * weights).sum(axis=1)

    frontier = c.keys(pts).reshape(1, t)
    orbit = encode(frontier)
    while frontier.size:
        rows = np.concatenate([
            np.stack(
                [c.mul(c.mul(gens[k:k + 1], frontier[:, j].copy()), invs[k:k + 1])
                 for j in range(t)],
                axis=1,
            )
            for k in range(gens.size)
        ])
        codes, first = np.unique(encode(rows), return_index=True)
        fresh = ~np.isin(codes, orbit, assume_unique=True)
        orbit = np.union1d(orbit, codes[fresh])
        frontier = rows[first[fresh]]
    digits = np.stack([(orbit // base**j) % base for j in range(t)], axis=1)
    return G.sorted_keys[digits.astype(np.int64)]
