"""The quantum alcove model: admissible subsets and the filling maps.

An admissible subset is a set of chain positions whose reflections trace a
path in the quantum Bruhat graph.  Folding positions are 1-based.  The
filling maps read off window prefixes at the end of every segment, so the
output has one column per segment (two per partition column in the signed
families, giving a filling of shape 2 lambda).
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import LambdaChain
from .qbg import edge_kind
from .roots import LieType
from .tableaux import natural_sort
from .weyl import WeylElement


class GuardExceeded(RuntimeError):
    """Raised when an enumeration would exceed its configured guard."""


class NotAdmissible(ValueError):
    """Raised when a filling map is applied to an inadmissible subset."""


@dataclass(frozen=True)
class Filling:
    """Columns of a (possibly doubled) shape, front of list = top of column."""

    lt: LieType
    columns: tuple[tuple[int, ...], ...]

    def sorted(self) -> "Filling":
        return Filling(self.lt, tuple(natural_sort(self.lt, c) for c in self.columns))

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.columns]

    def to_text(self) -> str:
        from .tableaux import column_to_text

        return "".join(f"[{column_to_text(c)}]" for c in self.columns)


def is_admissible(chain: LambdaChain, positions) -> bool:
    """Whether the positions fold along quantum Bruhat graph edges."""
    positions = list(positions)
    if positions != sorted(set(positions)):
        raise ValueError(f"positions must be strictly increasing, got {positions}")
    if positions and not 1 <= positions[0] <= positions[-1] <= len(chain):
        raise ValueError(f"positions out of range 1..{len(chain)}")
    w = WeylElement.identity(chain.lt)
    for p in positions:
        root = chain.entries[p - 1]
        if edge_kind(w, root) is None:
            return False
        w = w.times_reflection(root)
    return True


def enumerate_admissible(chain: LambdaChain, guard_max_m: int = 26) -> list[tuple[int, ...]]:
    """All admissible subsets, DFS over prefix-closed extensions, lex order."""
    if len(chain) > guard_max_m:
        raise GuardExceeded(
            f"chain has {len(chain)} positions, guard allows {guard_max_m}"
        )
    out: list[tuple[int, ...]] = []
    identity = WeylElement.identity(chain.lt)

    def grow(prefix: tuple[int, ...], w: WeylElement, start: int) -> None:
        out.append(prefix)
        for p in range(start, len(chain) + 1):
            root = chain.entries[p - 1]
            if edge_kind(w, root) is not None:
                grow(prefix + (p,), w.times_reflection(root), p + 1)

    grow((), identity, 1)
    return out


def fill(chain: LambdaChain, positions) -> Filling:
    """Apply the folding reflections and read off segment-end columns."""
    positions = list(positions)
    if not is_admissible(chain, positions):
        raise NotAdmissible(f"positions {positions} are not admissible")
    w = WeylElement.identity(chain.lt)
    chosen = set(positions)
    columns = []
    for seg in chain.segments:
        for p in range(seg.start + 1, seg.stop + 1):
            if p in chosen:
                w = w.times_reflection(chain.entries[p - 1])
        columns.append(tuple(w.window[: seg.height]))
    return Filling(chain.lt, tuple(columns))


def sfill(chain: LambdaChain, positions) -> Filling:
    """fill with every column sorted ascending in the natural order."""
    return fill(chain, positions).sorted()
