"""Exact data for the classical root systems A_{n-1}, B_n, C_n, D_n.

Roots are kept in symbolic form: a positive root is a pair (first, second)
where second may be barred.  Barred indices are encoded as negative
integers, so (2, -3) is the sum root e_2 + e_3 and (2, -2) is the root on
the doubled letter (2 e_2 in type C, e_2 in type B).  The letter 0 is
reserved for the type B zero letter and never appears in a root.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class RankError(ValueError):
    """Raised for ranks outside the supported range of a family."""


class RootError(ValueError):
    """Raised for a root that is illegal in the given family."""


@dataclass(frozen=True)
class LieType:
    """A classical family tag with its rank (ambient n for type A)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "C", "D"):
            raise RankError(f"unknown family {self.family!r}")
        minimum = 3 if self.family == "D" else 2
        if self.rank < minimum:
            raise RankError(f"type {self.family} needs rank >= {minimum}, got {self.rank}")

    @property
    def signed(self) -> bool:
        return self.family != "A"

    @property
    def alphabet_size(self) -> int:
        """Number of window letters: n for type A, 2n otherwise."""
        return self.rank if self.family == "A" else 2 * self.rank

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """An (optionally oriented) positive root.

    ``first`` is an unbarred index; ``second`` is signed.  Chains store the
    orientation they are scanned in, e.g. (2, -1) for the sum root on
    {1, 2} entered at row 2.  Equality is structural; use ``key`` when two
    orientations of the same sum root must be identified.
    """

    first: int
    second: int

    def __post_init__(self):
        if self.first <= 0 or self.second == 0:
            raise RootError(f"bad root indices ({self.first}, {self.second})")
        if self.second > 0 and self.first >= self.second:
            raise RootError(f"difference root needs i < j, got ({self.first}, {self.second})")

    @property
    def kind(self) -> str:
        if self.second > 0:
            return "diff"
        if self.second == -self.first:
            return "long"
        return "sum"

    @property
    def key(self) -> tuple:
        """Orientation-free identity of the underlying root."""
        if self.kind == "diff":
            return ("diff", self.first, self.second)
        if self.kind == "long":
            return ("long", self.first, self.first)
        a, b = sorted((self.first, -self.second))
        return ("sum", a, b)

    def coords(self, lt: LieType) -> tuple[int, ...]:
        """Integer coordinate vector in the ambient R^n."""
        v = [0] * lt.rank
        if self.kind == "diff":
            v[self.first - 1] = 1
            v[self.second - 1] = -1
        elif self.kind == "sum":
            v[self.first - 1] += 1
            v[-self.second - 1] += 1
        else:
            v[self.first - 1] = 2 if lt.family == "C" else 1
        return tuple(v)

    def validate_for(self, lt: LieType) -> None:
        n = lt.rank
        if self.first > n or abs(self.second) > n:
            raise RootError(f"root {self} exceeds rank {n}")
        if lt.family == "A" and self.kind != "diff":
            raise RootError(f"type A admits only difference roots, got {self}")
        if lt.family == "D" and self.kind == "long":
            raise RootError(f"type D has no (i, i-bar) roots, got {self}")

    def to_json(self) -> dict:
        return {"kind": self.kind, "i": self.first, "j": abs(self.second)}

    @classmethod
    def from_json(cls, obj: dict) -> "Root":
        kind, i, j = obj["kind"], int(obj["i"]), int(obj["j"])
        if kind == "diff":
            return cls(i, j)
        if kind == "sum":
            return cls(i, -j)
        if kind == "long":
            return cls(i, -i)
        raise RootError(f"unknown root kind {kind!r}")

    def __str__(self) -> str:
        second = f"{-self.second}b" if self.second < 0 else str(self.second)
        return f"({self.first},{second})"


def parse_root(text: str) -> Root:
    """Parse the text form, e.g. "(2,3)" or "(2,1b")."""
    body = text.strip().lstrip("(").rstrip(")")
    a, b = (part.strip() for part in body.split(","))
    second = -int(b[:-1]) if b.endswith("b") else int(b)
    return Root(int(a), second)


def positive_roots(lt: LieType) -> list[Root]:
    """All positive roots, difference roots first, in lexicographic order."""
    n = lt.rank
    roots = [Root(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    if lt.family in ("B", "C", "D"):
        roots += [Root(i, -j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    if lt.family in ("B", "C"):
        roots += [Root(i, -i) for i in range(1, n + 1)]
    return roots


def pairing(weight: Sequence, root: Root, lt: LieType):
    """Pairing of a weight vector with the coroot of ``root``.

    Exact on int or Fraction coordinates; the type B long root e_i has
    coroot 2 e_i, the type C long root 2 e_i has coroot e_i.
    """
    root.validate_for(lt)
    i = root.first - 1
    if root.kind == "diff":
        return weight[i] - weight[root.second - 1]
    if root.kind == "sum":
        return weight[i] + weight[-root.second - 1]
    return 2 * weight[i] if lt.family == "B" else weight[i]


def rho(lt: LieType) -> tuple[Fraction, ...]:
    """Half sum of the positive roots, as exact fractions."""
    n = lt.rank
    total = [Fraction(0)] * n
    for r in positive_roots(lt):
        for k, c in enumerate(r.coords(lt)):
            total[k] += c
    return tuple(v / 2 for v in total)


def rho_pairing(lt: LieType, root: Root) -> int:
    value = pairing(rho(lt), root, lt)
    if value.denominator != 1:
        raise RootError(f"non-integral rho pairing for {root} in {lt}")
    return int(value)


class Weight:
    """A dominant weight given by its partition shape."""

    def __init__(self, lt: LieType, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts if int(p) != 0)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be nonnegative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition must be weakly decreasing, got {parts}")
        max_parts = lt.rank - 1 if lt.family == "A" else lt.rank
        if len(parts) > max_parts:
            raise ValueError(f"partition {parts} has too many parts for {lt}")
        self.lt = lt
        self.parts = parts

    @property
    def coords(self) -> tuple[int, ...]:
        return self.parts + (0,) * (self.lt.rank - len(self.parts))

    @property
    def conjugate(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(
            sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and (self.lt, self.parts) == (other.lt, other.parts)

    def __repr__(self) -> str:
        return f"Weight({self.lt}, {self.parts})"
