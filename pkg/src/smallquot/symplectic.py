"""Symplectic algebra over GF(2).

The form pairs adjacent coordinates: (1,2), (3,4), ...  so that
``omega(e1, e2) = 1``.  Transvections are ``T_v: x -> x + omega(x, v) v``.
Genus ``g`` means vectors of length ``2g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

import numpy as np

from .errors import CarrierMismatchError, DomainError
from .gf2 import GF2Matrix, GF2Vector, symplectic_form_bits
from .groups import (
    FiniteGroupTable,
    closure,
    default_ceiling,
    orbit_stabilizer,
    tuple_orbit,
    within_ceiling,
)
from .perm import Permutation

MAX_GENUS = 3


def symplectic_form(u: GF2Vector, v: GF2Vector) -> int:
    if u.length != v.length:
        raise CarrierMismatchError(f"vector lengths differ: {u.length} vs {v.length}")
    return symplectic_form_bits(u.bits, v.bits, u.length)


def transvection(v: GF2Vector) -> GF2Matrix:
    if v.is_zero():
        raise ValueError("transvection needs a nonzero vector")
    n = v.length
    rows = []
    for i in range(n):
        e = 1 << i
        rows.append(e ^ v.bits if symplectic_form_bits(e, v.bits, n) else e)
    return GF2Matrix(rows, n)


def is_symplectic(m: GF2Matrix) -> bool:
    if m.dim % 2:
        raise ValueError(f"dimension {m.dim} is odd")
    n = m.dim
    for i in range(n):
        for j in range(i + 1, n):
            if symplectic_form_bits(m.rows[i], m.rows[j], n) != symplectic_form_bits(
                1 << i, 1 << j, n
            ):
                return False
    return True


def sp_order_formula(g: int) -> int:
    """Independent check: 2^(g^2) * prod_{i=1..g} (4^i - 1)."""
    return 2 ** (g * g) * prod(4**i - 1 for i in range(1, g + 1))


def nonzero_vectors(g: int) -> list[GF2Vector]:
    return [GF2Vector(2 * g, b) for b in range(1, 1 << (2 * g))]


def _check_genus(g: int, lo: int = 1, hi: int = MAX_GENUS) -> None:
    if not isinstance(g, int) or not lo <= g <= hi:
        raise DomainError(f"genus must be in {lo}..{hi}, got {g!r}")


_SP_TABLES: dict[int, FiniteGroupTable] = {}


def sp_group(g: int, ceiling: int | None = None) -> FiniteGroupTable:
    """Sp(2g, F2) as the closure of all its transvections (1 <= g <= 3)."""
    _check_genus(g)
    limit = default_ceiling() if ceiling is None else ceiling
    table = _SP_TABLES.get(g)
    if table is None:
        table = closure([transvection(v) for v in nonzero_vectors(g)], ceiling=limit)
        expected = sp_order_formula(g)
        if table.order != expected:
            raise AssertionError(
                f"|Sp({2 * g},2)| enumerated as {table.order}, formula gives {expected}"
            )
        table = _SP_TABLES.setdefault(g, table)
    return within_ceiling(table, limit)


@dataclass(frozen=True)
class QuadraticRefinement:
    """``q: F2^{2g} -> F2`` with ``q(x + y) = q(x) + q(y) + omega(x, y)``.

    ``values[x]`` is ``q`` at the bit-packed vector ``x``.
    """

    g: int
    values: tuple[int, ...]

    @classmethod
    def from_basis_values(cls, g: int, basis_bits: int) -> QuadraticRefinement:
        """The refinement with ``q(e_{i+1})`` equal to bit ``i`` of ``basis_bits``."""
        n = 2 * g
        vals = [0] * (1 << n)
        for x in range(1, 1 << n):
            low = x & -x
            rest = x ^ low
            i = low.bit_length() - 1
            vals[x] = vals[rest] ^ ((basis_bits >> i) & 1) ^ symplectic_form_bits(low, rest, n)
        return cls(g, tuple(vals))

    def __call__(self, v: GF2Vector) -> int:
        return self.values[v.bits]

    @property
    def basis_bits(self) -> int:
        return sum(self.values[1 << i] << i for i in range(2 * self.g))

    def arf(self) -> int:
        """0 when ``q`` vanishes on more than half of the space, else 1."""
        zeros = self.values.count(0)
        return 0 if 2 * zeros > len(self.values) else 1

    def is_refinement(self) -> bool:
        n = 2 * self.g
        v = self.values
        if v[0]:
            return False
        size = 1 << n
        return all(
            v[x ^ y] == v[x] ^ v[y] ^ symplectic_form_bits(x, y, n)
            for x in range(size)
            for y in range(size)
        )


def quadratic_refinements(g: int) -> list[QuadraticRefinement]:
    """All ``2^{2g}`` refinements, ordered by their values on the basis."""
    _check_genus(g)
    return [QuadraticRefinement.from_basis_values(g, b) for b in range(1 << (2 * g))]


def sp_refinement_action(m: GF2Matrix, q: QuadraticRefinement) -> QuadraticRefinement:
    """``(m . q)(x) = q(x m^-1)``.

    Acting by ``a`` and then by ``b`` equals acting by ``a * b``.
    """
    if m.dim != 2 * q.g:
        raise CarrierMismatchError(f"matrix dim {m.dim} vs refinement genus {q.g}")
    inv = m.inverse()
    return QuadraticRefinement(q.g, tuple(q.values[inv.apply_bits(x)] for x in range(len(q.values))))


@dataclass(frozen=True)
class RefinementRepresentation:
    """Permutation action of Sp(2g, F2) on one Arf class of refinements."""

    g: int
    forms: tuple[QuadraticRefinement, ...]
    image_order: int

    @property
    def degree(self) -> int:
        return len(self.forms)

    def __call__(self, m: GF2Matrix) -> Permutation:
        index = {f.values: i for i, f in enumerate(self.forms)}
        return Permutation([index[sp_refinement_action(m, f).values] for f in self.forms])


def iso_to_symmetric(g: int) -> RefinementRepresentation:
    """Sp(2, F2) -> S3 on the even forms, Sp(4, F2) -> S6 on the odd forms.

    Checks that the action is a homomorphism on generators, injective on the
    whole group, and that its image has the full order.
    """
    if g not in (1, 2):
        raise DomainError(f"refinement isomorphisms are only defined for g in (1, 2), got {g!r}")
    arf = 0 if g == 1 else 1
    forms = tuple(q for q in quadratic_refinements(g) if q.arf() == arf)
    G = sp_group(g)
    rep = RefinementRepresentation(g, forms, 0)
    gens = G.generators
    for a in gens:
        for b in gens:
            if rep(a * b) != rep(a) * rep(b):
                raise AssertionError("refinement action is not a homomorphism")
    distinct = len({rep(m).images for m in G})
    if distinct != G.order:
        raise AssertionError(f"refinement action is not injective ({distinct} < {G.order})")
    image = closure([rep(a) for a in gens])
    if image.order != G.order:
        raise AssertionError(f"image order {image.order} != {G.order}")
    return RefinementRepresentation(g, forms, image.order)


def witness_vector(v: GF2Vector, w: GF2Vector) -> GF2Vector:
    """First ``u`` (in increasing bit order) with omega(u, v) = 1, omega(u, w) = 0."""
    if v.length != w.length:
        raise CarrierMismatchError(f"vector lengths differ: {v.length} vs {w.length}")
    if v.is_zero() or w.is_zero():
        raise ValueError("witness_vector needs nonzero vectors")
    if v == w:
        raise ValueError("witness_vector needs distinct vectors")
    n = v.length
    for u in range(1, 1 << n):
        if symplectic_form_bits(u, v.bits, n) == 1 and symplectic_form_bits(u, w.bits, n) == 0:
            return GF2Vector(n, u)
    raise AssertionError("no witness: the form is degenerate")


def symplectic_pair_count(g: int) -> int:
    """Brute-force count of ordered pairs (v, w) with omega(v, w) = 1."""
    n = 2 * g
    return sum(
        symplectic_form_bits(v, w, n) for v, w in product(range(1 << n), repeat=2)
    )


def vector_pair_orbit(g: int, start: tuple[GF2Vector, GF2Vector]) -> set[tuple[int, int]]:
    """Orbit of an ordered vector pair under Sp(2g, F2) acting on row vectors."""
    G = sp_group(g)
    gens = G.generators
    seen = {(start[0].bits, start[1].bits)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v, w in frontier:
            for m in gens:
                p = (m.apply_bits(v), m.apply_bits(w))
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class SpCounts:
    g: int
    order: int
    formula_order: int
    transvections: int
    pair_count: int
    expected_pairs: int
    pairs_transitive: bool
    smaller_order: int
    pair_stabilizer: int
    pair_orbit: int

    @property
    def identity_holds(self) -> bool:
        return self.order == self.expected_pairs * self.smaller_order

    @property
    def ok(self) -> bool:
        return (
            self.order == self.formula_order
            and self.pair_count == self.expected_pairs
            and self.pairs_transitive
            and self.identity_holds
            and self.pair_stabilizer == self.smaller_order
            and self.pair_orbit == self.expected_pairs
        )


def expected_pair_count(g: int) -> int:
    return 2 ** (2 * g - 1) * (2 ** (2 * g) - 1)


def sp_counting_checks(g: int) -> SpCounts:
    """Pair counts, transitivity and the order recursion for 2 <= g <= 3."""
    _check_genus(g, 2, MAX_GENUS)
    G = sp_group(g)
    smaller = sp_group(g - 1).order
    pairs = symplectic_pair_count(g)
    e1, e2 = GF2Vector.basis(1, 2 * g), GF2Vector.basis(2, 2 * g)
    orbit = vector_pair_orbit(g, (e1, e2))
    all_pairs = {
        (v, w)
        for v, w in product(range(1 << (2 * g)), repeat=2)
        if symplectic_form_bits(v, w, 2 * g)
    }
    pair_orbit, stab = orbit_stabilizer(G, "conjugation_pairs", (transvection(e1), transvection(e2)))
    return SpCounts(
        g=g,
        order=G.order,
        formula_order=sp_order_formula(g),
        transvections=(1 << (2 * g)) - 1,
        pair_count=pairs,
        expected_pairs=expected_pair_count(g),
        pairs_transitive=orbit == all_pairs,
        smaller_order=smaller,
        pair_stabilizer=stab,
        pair_orbit=pair_orbit,
    )


def transvection_class_matches(g: int) -> tuple[int, bool]:
    """Size of the class of T_{e1} and whether it is exactly {T_v : v != 0}."""
    G = sp_group(g)
    cls = tuple_orbit(G, [transvection(GF2Vector.basis(1, 2 * g))]).ravel()
    expected = np.sort(G.carrier.keys([transvection(v) for v in nonzero_vectors(g)]))
    return int(cls.size), bool(np.array_equal(np.sort(cls), expected))
