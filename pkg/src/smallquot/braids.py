"""Braid words, Artin's action on the free group, and band generators.

Braid equality is decided by Artin's faithful action of B_n on the free group
F_n = <x_1, ..., x_n>:

    sigma_i:  x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i

with the other generators fixed.  Words act on the right, so the action of
``w1 * w2`` is the action of ``w1`` followed by the action of ``w2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

from .errors import BraidWordError, ConventionError, DomainError
from .perm import Permutation
from .reports import CheckReport


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class FreeGroupWord:
    """A freely reduced word in x_1..x_rank; letter ``-i`` is x_i^-1."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for a in self.letters:
            if a == 0 or abs(a) > self.rank:
                raise ValueError(f"letter {a} outside +-1..{self.rank}")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def generator(cls, i: int, rank: int) -> FreeGroupWord:
        return cls(rank, (i,))

    def __mul__(self, other: FreeGroupWord) -> FreeGroupWord:
        return FreeGroupWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeGroupWord:
        return FreeGroupWord(self.rank, tuple(-a for a in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators; letter ``i`` is sigma_i, ``-i`` its inverse."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise BraidWordError(f"strand count must be a positive integer, got {self.n!r}")
        letters = tuple(self.letters)
        for a in letters:
            if not isinstance(a, int) or a == 0 or abs(a) > self.n - 1:
                raise BraidWordError(f"letter {a!r} outside +-1..{self.n - 1}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def sigma(cls, i: int, n: int, power: int = 1) -> BraidWord:
        return cls(n, (i if power > 0 else -i,) * abs(power))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.n != self.n:
            raise BraidWordError(f"strand counts differ: {self.n} vs {other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-a for a in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def permutation(self) -> Permutation:
        """Image under the forgetful map to S_n."""
        p = Permutation.identity(self.n)
        for a in self.letters:
            i = abs(a)
            p = p * Permutation.from_cycles([(i, i + 1)], self.n)
        return p

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(f"s{a}" if a > 0 else f"s{-a}^-1" for a in self.letters)


@dataclass(frozen=True)
class ArtinAutomorphism:
    rank: int
    images: tuple[FreeGroupWord, ...]

    @classmethod
    def identity(cls, rank: int) -> ArtinAutomorphism:
        return cls(rank, tuple(FreeGroupWord.generator(i, rank) for i in range(1, rank + 1)))

    def apply(self, w: FreeGroupWord) -> FreeGroupWord:
        out: list[int] = []
        for a in w.letters:
            img = self.images[abs(a) - 1].letters
            out.extend(img if a > 0 else (-b for b in reversed(img)))
        return FreeGroupWord(self.rank, tuple(out))

    def boundary_image(self) -> FreeGroupWord:
        """Image of x_1 x_2 ... x_n, which every braid fixes."""
        return self.apply(FreeGroupWord(self.rank, tuple(range(1, self.rank + 1))))

    def is_identity(self) -> bool:
        return self == ArtinAutomorphism.identity(self.rank)


def _precompose_letter(images: list[tuple[int, ...]], a: int) -> list[tuple[int, ...]]:
    """Images of (sigma_a-action then current action), from current images."""
    i = abs(a) - 1
    xi, xj = images[i], images[i + 1]
    inv = lambda w: tuple(-b for b in reversed(w))  # noqa: E731
    out = list(images)
    if a > 0:
        out[i] = free_reduce(xi + xj + inv(xi))
        out[i + 1] = xi
    else:
        out[i] = xj
        out[i + 1] = free_reduce(inv(xj) + xi + xj)
    return out


def artin_action(w: BraidWord) -> ArtinAutomorphism:
    """The automorphism of F_n induced by ``w``."""
    if not isinstance(w, BraidWord):
        raise BraidWordError(f"expected a BraidWord, got {type(w).__name__}")
    return _artin_action(w.n, w.letters)


@lru_cache(maxsize=4096)
def _artin_action(n: int, letters: tuple[int, ...]) -> ArtinAutomorphism:
    images = [(i,) for i in range(1, n + 1)]
    for a in reversed(letters):
        images = _precompose_letter(images, a)
    aut = ArtinAutomorphism(n, tuple(FreeGroupWord(n, im) for im in images))
    if aut.boundary_image().letters != tuple(range(1, n + 1)):
        raise ConventionError(f"x1...x{n} not fixed by {letters}")
    return aut


def braid_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.n != w2.n:
        raise BraidWordError(f"strand counts differ: {w1.n} vs {w2.n}")
    return artin_action(w1) == artin_action(w2)


def bkl_word(i: int, j: int, n: int) -> BraidWord:
    """Band generator joining points i < j over the points between them:

        (s_{j-1} ... s_{i+1}) s_i (s_{i+1}^-1 ... s_{j-1}^-1)
    """
    if not (1 <= i < j <= n):
        raise BraidWordError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    run = tuple(range(j - 1, i, -1))
    return BraidWord(n, run + (i,) + tuple(-a for a in reversed(run)))


def rho(i: int, j: int, n: int) -> BraidWord:
    """Band generator for the unordered pair {i, j}."""
    return bkl_word(min(i, j), max(i, j), n)


def epsilon_for(i: int, j: int, k: int, n: int) -> int:
    """The sign e with rho_{i,k} = rho_{j,k}^e rho_{i,j} rho_{j,k}^-e.

    Both signs are tried against the free-group oracle; +1 is tried first.
    """
    if len({i, j, k}) != 3 or not all(1 <= t <= n for t in (i, j, k)):
        raise BraidWordError(f"need three distinct points in 1..{n}, got {(i, j, k)}")
    lhs = rho(i, k, n)
    for e in (1, -1):
        conj = rho(j, k, n) ** e
        if braid_equal(lhs, conj * rho(i, j, n) * conj.inverse()):
            return e
    raise ConventionError(f"no sign realises the partial commutation relation for {(i, j, k)}")


def is_linked(p: tuple[int, int], q: tuple[int, int]) -> bool:
    (i, j), (k, l) = sorted(p), sorted(q)
    return i < k < j < l or k < i < l < j


def braid_rel(a: BraidWord, b: BraidWord) -> bool:
    return braid_equal(a * b * a, b * a * b)


def commute(a: BraidWord, b: BraidWord) -> bool:
    return braid_equal(a * b, b * a)


def relation_suite(n: int) -> CheckReport:
    """Check every relation among Artin and band generators used downstream."""
    if not isinstance(n, int) or not 3 <= n <= 7:
        raise DomainError(f"relation suite needs 3 <= n <= 7, got {n!r}")
    failures: list[dict] = []
    counts = {"artin_braid": 0, "artin_far": 0, "bkl_braid": 0, "bkl_commute": 0, "partial": 0}

    for i in range(1, n - 1):
        counts["artin_braid"] += 1
        if not braid_rel(BraidWord.sigma(i, n), BraidWord.sigma(i + 1, n)):
            failures.append({"relation": "artin_braid", "indices": [i, i + 1]})
    for i, j in combinations(range(1, n), 2):
        if j - i > 1:
            counts["artin_far"] += 1
            if not commute(BraidWord.sigma(i, n), BraidWord.sigma(j, n)):
                failures.append({"relation": "artin_far", "indices": [i, j]})

    pairs = list(combinations(range(1, n + 1), 2))
    for p, q in combinations(pairs, 2):
        shared = len(set(p) & set(q))
        a, b = rho(*p, n), rho(*q, n)
        if shared == 1:
            counts["bkl_braid"] += 1
            if not braid_rel(a, b):
                failures.append({"relation": "bkl_braid", "indices": [list(p), list(q)]})
        elif shared == 0 and not is_linked(p, q):
            counts["bkl_commute"] += 1
            if not commute(a, b):
                failures.append({"relation": "bkl_commute", "indices": [list(p), list(q)]})

    epsilons = {}
    for i, j, k in permutations(range(1, n + 1), 3):
        counts["partial"] += 1
        try:
            epsilons[(i, j, k)] = epsilon_for(i, j, k, n)
        except ConventionError:
            failures.append({"relation": "partial", "indices": [i, j, k]})

    rows = [(name, counts[name], sum(f["relation"] == name for f in failures)) for name in counts]
    return CheckReport(
        name="relation-suite",
        params={"n": n},
        verdict="fail" if failures else "pass",
        witnesses=failures,
        columns=("relation", "checked", "failed"),
        rows=rows,
        extra={"epsilon": {f"{i},{j},{k}": e for (i, j, k), e in sorted(epsilons.items())}},
    )
