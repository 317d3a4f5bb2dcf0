"""Homomorphisms from braid groups to enumerated finite groups.

A homomorphism ``B_n -> G`` is stored as the images of sigma_1..sigma_{n-1}.
It is valid when adjacent images satisfy the braid relation and the other
pairs commute.  All images of a valid homomorphism are conjugate in ``G``,
so the search runs one conjugacy class at a time.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .braids import BraidWord, braid_equal
from .carriers import hom_search
from .errors import (
    BraidWordError,
    CarrierMismatchError,
    DomainError,
    InvalidHomomorphismError,
)
from .groups import FiniteGroupTable, closure, conjugacy_classes_keys, tuple_orbit
from .named import symmetric_group
from .perm import Permutation

MODES = ("raw", "up_to_conjugacy")
DEFAULT_MAX_ORDER = 10**4


def same_group(G: FiniteGroupTable, H: FiniteGroupTable) -> bool:
    return G is H or (
        G.carrier == H.carrier and G.order == H.order
        and np.array_equal(G.sorted_keys, H.sorted_keys)
    )


def element_repr(x):
    """JSON-ready form of a group element: 1-based images or matrix rows."""
    if isinstance(x, Permutation):
        return x.image_list()
    return x.to_lists()


class BraidHom:
    """The assignment sigma_i -> images[i-1] into ``target``."""

    def __init__(self, n: int, target: FiniteGroupTable, images: Sequence):
        if not isinstance(n, int) or n < 2:
            raise DomainError(f"braid homomorphisms need n >= 2, got {n!r}")
        images = tuple(images)
        if len(images) != n - 1:
            raise DomainError(f"B_{n} needs {n - 1} generator images, got {len(images)}")
        for x in images:
            target.require(x)
        self.n = n
        self.target = target
        self.images = images

    @classmethod
    def from_keys(cls, n: int, target: FiniteGroupTable, keys) -> BraidHom:
        return cls(n, target, [target.carrier.decode(k) for k in keys])

    @cached_property
    def keys(self) -> tuple[int, ...]:
        return tuple(x.key for x in self.images)

    def __eq__(self, other):
        return (
            isinstance(other, BraidHom)
            and self.n == other.n
            and self.keys == other.keys
            and same_group(self.target, other.target)
        )

    def __hash__(self):
        return hash((self.n, self.keys))

    def __repr__(self):
        return f"BraidHom(n={self.n}, images=[{', '.join(map(str, self.images))}])"

    @cached_property
    def is_valid(self) -> bool:
        im = self.images
        for i in range(len(im)):
            for j in range(i + 1, len(im)):
                a, b = im[i], im[j]
                if j == i + 1:
                    if a * b * a != b * a * b:
                        return False
                elif a * b != b * a:
                    return False
        return True

    @property
    def cyclic_image(self) -> bool:
        """For a valid homomorphism: the image is cyclic iff all images agree."""
        return all(x == self.images[0] for x in self.images)

    @cached_property
    def image_subgroup(self) -> FiniteGroupTable:
        return closure(self.images, ceiling=self.target.order)

    @property
    def surjective(self) -> bool:
        return self.image_subgroup.order == self.target.order

    def require_valid(self) -> None:
        if not self.is_valid:
            raise InvalidHomomorphismError(f"{self!r} violates the braid relations")

    def evaluate(self, w: BraidWord):
        self.require_valid()
        if not isinstance(w, BraidWord) or w.n != self.n:
            raise BraidWordError(f"expected a word in B_{self.n}, got {w!r}")
        x = self.target.identity
        for a in w.letters:
            x = x * (self.images[a - 1] if a > 0 else self.images[-a - 1].inverse())
        return x

    def postcompose(self, f) -> BraidHom:
        """``f o self`` for a map ``f`` defined on the target."""
        target = getattr(f, "target", self.target)
        return BraidHom(self.n, target, [f(x) for x in self.images])

    def to_dict(self) -> dict:
        return {"n": self.n, "images": [element_repr(x) for x in self.images]}


@dataclass(frozen=True)
class HomClass:
    """A conjugacy class of homomorphisms, named by its least image tuple."""

    representative: BraidHom
    size: int

    @property
    def cyclic_image(self) -> bool:
        return self.representative.cyclic_image

    def to_dict(self) -> dict:
        rep = self.representative
        return {
            **rep.to_dict(),
            "class_size": self.size,
            "cyclic": rep.cyclic_image,
            "image_order": rep.image_subgroup.order,
        }


def _lex_min_row(rows: np.ndarray) -> tuple[int, ...]:
    return min(tuple(int(v) for v in r) for r in rows)


def _orbit_of(h: BraidHom) -> np.ndarray:
    return tuple_orbit(h.target, list(h.images))


def canonicalize(h: BraidHom) -> HomClass:
    """The conjugacy class of ``h``, represented by its least conjugate."""
    h.require_valid()
    rows = _orbit_of(h)
    return HomClass(BraidHom.from_keys(h.n, h.target, _lex_min_row(rows)), len(rows))


def _class_tables(G: FiniteGroupTable, keys: np.ndarray):
    c = G.carrier
    k = keys.size
    a = np.repeat(keys, k)
    b = np.tile(keys, k)
    ab = c.mul(a, b)
    ba = c.mul(b, a)
    comm = (ab == ba).reshape(k, k)
    braid = (c.mul(ab, a) == c.mul(ba, b)).reshape(k, k)
    return braid, comm


def _search(braid, comm, firsts, length, workers):
    if workers <= 1 or len(firsts) <= 1:
        return hom_search(braid, comm, firsts, length)
    chunks = [c for c in np.array_split(np.asarray(firsts), workers) if c.size]
    with ThreadPoolExecutor(workers) as pool:
        parts = list(pool.map(lambda f: hom_search(braid, comm, f, length), chunks))
    return np.concatenate(parts)


def enumerate_homs(
    n: int,
    G: FiniteGroupTable,
    mode: str = "raw",
    non_cyclic_only: bool = False,
    max_order: int = DEFAULT_MAX_ORDER,
    workers: int = 1,
) -> list:
    """Every homomorphism ``B_n -> G``.

    ``mode="raw"`` returns BraidHom objects; ``mode="up_to_conjugacy"``
    returns HomClass objects.  Either list is sorted by image keys, and is
    the same for every ``workers`` value.
    """
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    if not isinstance(n, int) or not 2 <= n <= 7:
        raise DomainError(f"n must be in 2..7, got {n!r}")
    if G.order > max_order:
        raise DomainError(f"target order {G.order} exceeds the search limit {max_order}")
    length = n - 1
    found: list[tuple[int, ...]] = []
    classes: list[HomClass] = []
    for keys in conjugacy_classes_keys(G):
        if non_cyclic_only and (keys.size == 1 or length == 1):
            continue
        braid, comm = _class_tables(G, keys)
        if mode == "raw":
            firsts = np.arange(keys.size)
        else:
            firsts = np.array([0])
        idx = _search(braid, comm, firsts, length, workers)
        if non_cyclic_only:
            idx = idx[(idx != idx[:, :1]).any(axis=1)]
        tuples = [tuple(int(v) for v in row) for row in keys[idx]]
        if mode == "raw":
            found.extend(tuples)
            continue
        seen: set[tuple[int, ...]] = set()
        rep_key = int(keys[0])
        for t in tuples:
            if t in seen:
                continue
            h = BraidHom.from_keys(n, G, t)
            rows = _orbit_of(h)
            for r in rows:
                if int(r[0]) == rep_key:
                    seen.add(tuple(int(v) for v in r))
            classes.append(HomClass(BraidHom.from_keys(n, G, _lex_min_row(rows)), len(rows)))
    if mode == "raw":
        return [BraidHom.from_keys(n, G, t) for t in sorted(found)]
    return sorted(classes, key=lambda c: c.representative.keys)


def count_homs(n: int, G: FiniteGroupTable, **kw) -> int:
    return len(enumerate_homs(n, G, mode="raw", **kw))


class GroupMap:
    """A homomorphism from an enumerated group, fixed by generator images.

    The map is extended over the Cayley graph of ``source`` with respect to
    ``generators``; any inconsistency means the images do not define a
    homomorphism and raises InvalidHomomorphismError.
    """

    def __init__(self, source_generators: Sequence, images: Sequence, target=None):
        gens = list(source_generators)
        images = list(images)
        if len(gens) != len(images) or not gens:
            raise DomainError("need one image per source generator")
        self.source = closure(gens)
        self.generators = tuple(gens)
        self.gen_images = tuple(images)
        self.target = target if target is not None else closure(images)
        for y in images:
            self.target.require(y)
        self._table = self._extend()

    def _extend(self) -> dict:
        identity = self.source.identity
        table = {identity.key: self.target.identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                fx = table[x.key]
                for g, fg in zip(self.generators, self.gen_images):
                    y = x * g
                    fy = fx * fg
                    prev = table.get(y.key)
                    if prev is None:
                        table[y.key] = fy
                        nxt.append(y)
                    elif prev != fy:
                        raise InvalidHomomorphismError(
                            f"generator images {[str(v) for v in self.gen_images]} "
                            f"do not define a homomorphism (conflict at {y})"
                        )
            frontier = nxt
        return table

    def __call__(self, x):
        self.source.require(x)
        return self._table[x.key]

    def image_order(self) -> int:
        return len({y.key for y in self._table.values()})

    def is_bijective(self) -> bool:
        return self.image_order() == self.source.order

    def is_automorphism(self) -> bool:
        return same_group(self.source, self.target) and self.is_bijective()

    def is_inner(self) -> bool:
        """True iff some ``g`` in the source has ``f(x) = g x g^-1`` for all ``x``.

        Every element is tried.
        """
        if not same_group(self.source, self.target):
            return False
        c = self.source.carrier
        everything = self.source.keys
        ok = np.ones(everything.size, dtype=bool)
        for x, fx in zip(self.generators, self.gen_images):
            # f(x) g = g x  <=>  g x g^-1 = f(x)
            lhs = c.mul(c.keys([fx]), everything)
            rhs = c.mul(everything, c.keys([x]))
            ok &= lhs == rhs
        return bool(ok.any())


def _perm(text: str, degree: int) -> Permutation:
    return Permutation.from_cycles(text, degree)


def standard_projection(n: int) -> BraidHom:
    """pi: sigma_i -> (i, i+1) in S_n."""
    if not isinstance(n, int) or not 2 <= n <= 7:
        raise DomainError(f"n must be in 2..7, got {n!r}")
    h = BraidHom(n, symmetric_group(n), [_perm(f"({i},{i + 1})", n) for i in range(1, n)])
    h.require_valid()
    return h


def alpha_word(n: int) -> BraidWord:
    """sigma_{n-1} ... sigma_2 sigma_1."""
    return BraidWord(n, tuple(range(n - 1, 0, -1)))


def _alpha_exponent(i: int, n: int) -> int:
    """``k`` with sigma_i = alpha^k sigma_1 alpha^-k, found with the oracle."""
    a, s1 = alpha_word(n), BraidWord.sigma(1, n)
    for k in sorted(range(-(n - 1), n), key=lambda k: (abs(k), -k)):
        if braid_equal(BraidWord.sigma(i, n), (a**k) * s1 * (a**-k)):
            return k
    raise AssertionError(f"sigma_{i} is not an alpha-conjugate of sigma_1 in B_{n}")


def hom_from_sigma1_alpha(n: int, target: FiniteGroupTable, s1, alpha) -> BraidHom:
    """The homomorphism with sigma_1 -> s1 and alpha = sigma_{n-1}...sigma_1 -> alpha."""
    images = []
    for i in range(1, n):
        k = _alpha_exponent(i, n)
        images.append((alpha**k) * s1 * (alpha**-k))
    h = BraidHom(n, target, images)
    h.require_valid()
    if h.evaluate(alpha_word(n)) != alpha:
        raise InvalidHomomorphismError(
            f"sigma images {[str(x) for x in images]} send alpha to "
            f"{h.evaluate(alpha_word(n))}, not {alpha}"
        )
    return h


# Images of (sigma_1, alpha) in S_4 for the four exceptional maps out of B_4.
EXCEPTIONAL_B4 = {
    "f1": ("(1,2,3,4)", "(1,2)"),
    "f2": ("(1,3,2,4)", "(1,2,3,4)"),
    "f3": ("(1,2,3)", "(1,2)(3,4)"),
    "f4": ("(1,2)", "(1,3)"),
}


def exceptional_b4(name: str) -> BraidHom:
    if name not in EXCEPTIONAL_B4:
        raise DomainError(f"unknown map {name!r}; expected one of {sorted(EXCEPTIONAL_B4)}")
    s1, a = EXCEPTIONAL_B4[name]
    return hom_from_sigma1_alpha(4, symmetric_group(4), _perm(s1, 4), _perm(a, 4))


def collapse_b4_to_b3(w: BraidWord) -> BraidWord:
    """The map B_4 -> B_3 with sigma_1, sigma_3 -> sigma_1 and sigma_2 -> sigma_2."""
    if w.n != 4:
        raise BraidWordError(f"expected a word in B_4, got n={w.n}")
    sub = {1: 1, 2: 2, 3: 1}
    return BraidWord(3, tuple(sub[abs(a)] * (1 if a > 0 else -1) for a in w.letters))


def collapse_is_homomorphism() -> bool:
    """Check that the collapse respects every defining relation of B_4."""
    s = [BraidWord.sigma(i, 4) for i in (1, 2, 3)]
    rels = [(s[0] * s[1] * s[0], s[1] * s[0] * s[1]),
            (s[1] * s[2] * s[1], s[2] * s[1] * s[2]),
            (s[0] * s[2], s[2] * s[0])]
    return all(braid_equal(collapse_b4_to_b3(a), collapse_b4_to_b3(b)) for a, b in rels)


def b4_b3_s3_composite() -> BraidHom:
    """pi_3 after the collapse B_4 -> B_3, as a map into S_3."""
    if not collapse_is_homomorphism():
        raise InvalidHomomorphismError("the B_4 -> B_3 collapse breaks a relation")
    pi3 = standard_projection(3)
    h = BraidHom(4, symmetric_group(3),
                 [pi3.evaluate(collapse_b4_to_b3(BraidWord.sigma(i, 4))) for i in (1, 2, 3)])
    h.require_valid()
    return h


@lru_cache(maxsize=None)
def s6_outer_automorphism() -> GroupMap:
    """(1,2) -> (1,2)(3,4)(5,6) and (1,2,3,4,5,6) -> (1,2,3)(4,5) on S_6."""
    f = GroupMap(
        [_perm("(1,2)", 6), _perm("(1,2,3,4,5,6)", 6)],
        [_perm("(1,2)(3,4)(5,6)", 6), _perm("(1,2,3)(4,5)", 6)],
        target=symmetric_group(6),
    )
    if not f.is_automorphism():
        raise InvalidHomomorphismError("the S_6 generator images are not an automorphism")
    return f


def outer_projection() -> BraidHom:
    """The outer automorphism of S_6 applied after pi on B_6."""
    h = standard_projection(6).postcompose(s6_outer_automorphism())
    h.require_valid()
    return h


def _is_s6(G: FiniteGroupTable) -> bool:
    return same_group(G, symmetric_group(6))


def equal_up_to_aut(h1: BraidHom, h2: BraidHom) -> bool:
    """Equal up to conjugation in the target; for S_6 also up to the outer
    automorphism."""
    if not same_group(h1.target, h2.target):
        raise CarrierMismatchError("homomorphisms have different targets")
    if h1.n != h2.n:
        raise DomainError(f"different braid groups: B_{h1.n} vs B_{h2.n}")
    c2 = canonicalize(h2).representative.keys
    if canonicalize(h1).representative.keys == c2:
        return True
    if _is_s6(h1.target):
        twisted = h1.postcompose(s6_outer_automorphism())
        return canonicalize(twisted).representative.keys == c2
    return False


def factors_through_pi(h: BraidHom) -> GroupMap:
    """The map S_n -> target with (i, i+1) -> h(sigma_i).

    Raises InvalidHomomorphismError when ``h`` does not factor through pi.
    """
    h.require_valid()
    n = h.n
    gens = [_perm(f"({i},{i + 1})", n) for i in range(1, n)]
    return GroupMap(gens, h.images, target=h.target)


NAMED_MAPS = ("pi", "f1", "f2", "f3", "f4", "b4-b3-s3", "outer-pi")


def named_map(name: str, n: int | None = None) -> BraidHom:
    if name == "pi":
        return standard_projection(n if n is not None else 4)
    if name in EXCEPTIONAL_B4:
        return exceptional_b4(name)
    if name == "b4-b3-s3":
        return b4_b3_s3_composite()
    if name == "outer-pi":
        return outer_projection()
    raise DomainError(f"unknown map {name!r}; expected one of {NAMED_MAPS}")
