"""(Signed) permutation arithmetic in window notation.

Windows are tuples w(1), ..., w(n) of signed integers with w(i-bar) =
-w(i) implicit.  Composition follows (u v)(i) = u(v(i)), so chains of
reflections multiply left to right by repeated right multiplication.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .roots import LieType, Root, positive_roots

_length_cache: dict = {}


@dataclass(frozen=True)
class WeylElement:
    lt: LieType
    window: tuple[int, ...]

    def __post_init__(self):
        n = self.lt.rank
        w = self.window
        if len(w) != n or sorted(abs(x) for x in w) != list(range(1, n + 1)):
            raise ValueError(f"window {w} is not a signed permutation of 1..{n}")
        negatives = sum(1 for x in w if x < 0)
        if self.lt.family == "A" and negatives:
            raise ValueError("type A windows must be positive")
        if self.lt.family == "D" and negatives % 2:
            raise ValueError(f"type D window {w} has an odd number of sign changes")

    @classmethod
    def identity(cls, lt: LieType) -> "WeylElement":
        return cls(lt, tuple(range(1, lt.rank + 1)))

    def value(self, pos: int) -> int:
        """w(pos) with barred positions handled via w(i-bar) = -w(i)."""
        if pos > 0:
            return self.window[pos - 1]
        return -self.window[-pos - 1]

    def times_reflection(self, root: Root) -> "WeylElement":
        """Right multiplication by the reflection of ``root``."""
        root.validate_for(self.lt)
        w = list(self.window)
        i = root.first - 1
        if root.kind == "diff":
            j = root.second - 1
            w[i], w[j] = w[j], w[i]
        elif root.kind == "long":
            w[i] = -w[i]
        else:
            j = -root.second - 1
            w[i], w[j] = -w[j], -w[i]
        return WeylElement(self.lt, tuple(w))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.lt != other.lt:
            raise ValueError(f"rank/family mismatch: {self.lt} vs {other.lt}")
        return WeylElement(self.lt, tuple(self.value(v) for v in other.window))

    def act_on_root_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        """Image of a coordinate vector under w (e_i -> sign(w(i)) e_|w(i)|)."""
        out = [0] * len(coords)
        for i, c in enumerate(coords):
            if c:
                target = self.window[i]
                out[abs(target) - 1] += c if target > 0 else -c
        return tuple(out)

    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        key = (self.lt, self.window)
        cached = _length_cache.get(key)
        if cached is not None:
            return cached
        count = 0
        for root in positive_roots(self.lt):
            image = self.act_on_root_coords(root.coords(self.lt))
            first_nonzero = next(c for c in image if c)
            if first_nonzero < 0:
                count += 1
        _length_cache[key] = count
        return count

    def to_text(self) -> str:
        return " ".join(str(x) for x in self.window)

    def __str__(self) -> str:
        return self.to_text()


def parse_window(lt: LieType, text: str) -> WeylElement:
    return WeylElement(lt, tuple(int(tok) for tok in text.split()))


def reflection(lt: LieType, root: Root) -> WeylElement:
    """The reflection of a root as a signed permutation."""
    return WeylElement.identity(lt).times_reflection(root)


def all_elements(lt: LieType):
    """Iterate the full Weyl group in a deterministic order."""
    n = lt.rank
    for perm in itertools.permutations(range(1, n + 1)):
        if lt.family == "A":
            yield WeylElement(lt, perm)
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if lt.family == "D" and signs.count(-1) % 2:
                continue
            yield WeylElement(lt, tuple(s * v for s, v in zip(signs, perm)))


def weyl_order(lt: LieType) -> int:
    n = lt.rank
    if lt.family == "A":
        return math.factorial(n)
    if lt.family == "D":
        return math.factorial(n) * 2 ** (n - 1)
    return math.factorial(n) * 2**n


# Circular orders.  The cyclic arrangement is 1, 2, ..., n for type A and
# 1, ..., n, n-bar, ..., 1-bar for the signed families; the zero letter is
# a column letter only and never takes part in a circular order.


def _cycle_position(lt: LieType, letter: int) -> int:
    n = lt.rank
    if letter == 0 or abs(letter) > n:
        raise ValueError(f"letter {letter} outside the window alphabet of {lt}")
    if letter > 0:
        return letter - 1
    if lt.family == "A":
        raise ValueError("type A alphabet has no barred letters")
    return 2 * n + letter  # letter = -j sits at position 2n - j


def circle_dist(lt: LieType, start: int, letter: int) -> int:
    """Clockwise steps from ``start`` to ``letter``."""
    size = lt.alphabet_size
    return (_cycle_position(lt, letter) - _cycle_position(lt, start)) % size


def circle_min(lt: LieType, start: int, letters: Iterable[int]) -> int:
    pool = list(letters)
    if not pool:
        raise ValueError("circle_min of an empty set")
    return min(pool, key=lambda x: circle_dist(lt, start, x))


def circ_within(lt: LieType, a: int, b: int, c: int) -> bool:
    """a < b <= c in the circular order cut at a (the greedy guard arc)."""
    db = circle_dist(lt, a, b)
    return 0 < db <= circle_dist(lt, a, c)


def circ_strictly_between(lt: LieType, a: int, b: int, c: int) -> bool:
    """a < b < c in the circular order cut at a (the QBG criteria arc)."""
    db = circle_dist(lt, a, b)
    return 0 < db < circle_dist(lt, a, c)
