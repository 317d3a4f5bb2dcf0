"""Permutations of {1, ..., degree}.

Points are 1-based in every external representation (cycle strings, image
lists handed in by users) and 0-based internally.  The product ``a * b``
applies ``a`` first and then ``b``, so ``(a * b)(i) = b(a(i))``.
"""

from __future__ import annotations

import math
import re
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import CarrierMismatchError


def _key_width(degree: int) -> int:
    return max(1, (degree - 1).bit_length())


@total_ordering
class Permutation:
    __slots__ = ("images", "_key")

    def __init__(self, images: Sequence[int]):
        # 0-based images
        images = tuple(int(i) for i in images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on {len(images)} points: {images}")
        self.images = images
        self._key = None

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from a 1-based image list, e.g. ``[2, 1, 3]`` for (1,2)."""
        return cls([i - 1 for i in images])

    @classmethod
    def from_cycles(cls, cycles: str | Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from disjoint-cycle notation.

        ``cycles`` is either a string such as ``"(1,2)(3,4)"`` / ``"(1 2 3)"``
        or an iterable of 1-based cycles.
        """
        if isinstance(cycles, str):
            cycles = parse_cycles(cycles)
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = [int(p) - 1 for p in cyc]
            for p in cyc:
                if not 0 <= p < degree:
                    raise ValueError(f"point {p + 1} outside 1..{degree}")
                if p in seen:
                    raise ValueError(f"point {p + 1} repeated in cycle notation")
                seen.add(p)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def from_key(cls, key: int, degree: int) -> Permutation:
        w = _key_width(degree)
        mask = (1 << w) - 1
        return cls([(key >> ((degree - 1 - i) * w)) & mask for i in range(degree)])

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def key(self) -> int:
        """Image array packed most-significant-point first.

        Numeric order of keys is the lexicographic order of image arrays.
        """
        if self._key is None:
            w = _key_width(len(self.images))
            k = 0
            for img in self.images:
                k = (k << w) | img
            self._key = k
        return self._key

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise CarrierMismatchError(f"degree {self.degree} vs {other.degree}")
        b = other.images
        return Permutation([b[i] for i in self.images])

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, n: int) -> Permutation:
        base = self if n >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(n)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(p + 1 for p in cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted cycle lengths including fixed points."""
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed, reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def image_list(self) -> list[int]:
        """1-based image array."""
        return [i + 1 for i in self.images]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return (self.degree, self.images) < (other.degree, other.images)

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation.from_cycles({str(self)!r}, {self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    """Parse ``"(1,2)(3 4 5)"`` into ``[[1, 2], [3, 4, 5]]``; ``"()"`` is empty."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty cycle string")
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    out = []
    for body in _CYCLE_RE.findall(stripped):
        parts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        if not parts:
            continue
        try:
            out.append([int(p) for p in parts])
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
    return out
