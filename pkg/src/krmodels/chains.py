"""Construction and certification of lambda-chains.

Chains for types A and C follow the classical row-by-row patterns; rows of
a left part are tagged with stages I..IV.  The type B chain doubles every
(i, i-bar) occurrence by opening each right block with it (the short
coroots pair to 2 with fundamental weights, so the multiplicity law forces
a second copy); the type D chain drops stage II entirely.
``validate_chain`` certifies any candidate with an exact rational alcove
walk.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .roots import LieType, Root, RootError, Weight, pairing, positive_roots, rho


class ChainError(ValueError):
    """Raised when a chain cannot be built for the requested data."""


@dataclass(frozen=True)
class Segment:
    """A contiguous factor of the chain.

    ``side`` is "col" in type A and "left"/"right" otherwise; ``height``
    is the column height the factor maps out; ``start``/``stop`` slice the
    entry list; ``stages`` carries one of I..IV per entry of a left part.
    """

    side: str
    height: int
    start: int
    stop: int
    stages: tuple[str, ...]


@dataclass(frozen=True)
class LambdaChain:
    lt: LieType
    lam: tuple[int, ...]
    entries: tuple[Root, ...]
    segments: tuple[Segment, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def segment_entries(self, seg: Segment) -> tuple[Root, ...]:
        return self.entries[seg.start : seg.stop]

    def to_text(self) -> str:
        parts = []
        for seg in self.segments:
            if seg.side == "left" and seg.stages:
                groups, last = [], None
                for root, stage in zip(self.segment_entries(seg), seg.stages):
                    if stage != last:
                        groups.append([])
                        last = stage
                    groups[-1].append(str(root))
                parts.append("; ".join(",".join(g) for g in groups))
            else:
                parts.append(",".join(str(r) for r in self.segment_entries(seg)))
        return " | ".join(parts)

    def to_json(self) -> dict:
        return {
            "family": self.lt.family,
            "rank": self.lt.rank,
            "lambda": list(self.lam),
            "roots": [r.to_json() for r in self.entries],
            "segments": [
                {
                    "side": seg.side,
                    "height": seg.height,
                    "start": seg.start,
                    "stop": seg.stop,
                    "stages": list(seg.stages),
                }
                for seg in self.segments
            ],
        }


def max_column_height(lt: LieType) -> int:
    if lt.family == "A":
        return lt.rank - 1
    if lt.family == "C":
        return lt.rank
    if lt.family == "B":
        return lt.rank - 1  # height n is a spin column
    return lt.rank - 2  # type D spin heights n-1, n excluded


def _left_block(lt: LieType, k: int, i: int) -> tuple[list[Root], list[str]]:
    """The block of the left part scanning row i against column height k."""
    n = lt.rank
    roots: list[Root] = []
    stages: list[str] = []
    for j in range(k + 1, n + 1):
        roots.append(Root(i, j))
        stages.append("I")
    if lt.family in ("B", "C"):
        roots.append(Root(i, -i))
        stages.append("II")
    for j in range(n, k, -1):
        roots.append(Root(i, -j))
        stages.append("III")
    for j in range(i - 1, 0, -1):
        roots.append(Root(i, -j))
        stages.append("IV")
    return roots, stages


def _omega_parts(lt: LieType, k: int) -> tuple[list[Root], list[str], list[Root]]:
    """Left entries with stages, and right entries, of the omega_k chain."""
    if not 1 <= k <= max_column_height(lt):
        raise ChainError(f"column height {k} out of range for {lt}")
    if lt.family == "A":
        left = [Root(i, j) for i in range(k, 0, -1) for j in range(k + 1, lt.rank + 1)]
        return left, [], []
    left: list[Root] = []
    stages: list[str] = []
    for i in range(k, 0, -1):
        roots, tags = _left_block(lt, k, i)
        left.extend(roots)
        stages.extend(tags)
    right: list[Root] = []
    lowest = 1 if lt.family == "B" else 2
    for i in range(k, lowest - 1, -1):
        if lt.family == "B":
            right.append(Root(i, -i))
        right.extend(Root(i, -j) for j in range(i - 1, 0, -1))
    return left, stages, right


def omega_chain(lt: LieType, k: int) -> LambdaChain:
    """The omega_k chain with its segment metadata."""
    if not 1 <= k <= max_column_height(lt):
        raise ChainError(f"column height {k} out of range for {lt}")
    return lambda_chain(lt, Weight(lt, (1,) * k))


def lambda_chain(lt: LieType, weight: Weight) -> LambdaChain:
    """Concatenation of omega chains along the columns of the partition."""
    if weight.lt != lt:
        raise ChainError("weight built for a different type")
    entries: list[Root] = []
    segments: list[Segment] = []
    for height in weight.conjugate:
        left, stages, right = _omega_parts(lt, height)
        if lt.family == "A":
            segments.append(
                Segment("col", height, len(entries), len(entries) + len(left), ())
            )
            entries.extend(left)
        else:
            segments.append(
                Segment(
                    "left", height, len(entries), len(entries) + len(left), tuple(stages)
                )
            )
            entries.extend(left)
            segments.append(
                Segment("right", height, len(entries), len(entries) + len(right), ())
            )
            entries.extend(right)
    return LambdaChain(lt, weight.parts, tuple(entries), tuple(segments))


@dataclass
class ChainValidation:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _interior_start(lt: LieType) -> tuple[Fraction, ...]:
    """A generic rational interior point of the fundamental alcove."""
    rho_vec = rho(lt)
    scale = 1 + max(pairing(rho_vec, a, lt) for a in positive_roots(lt))
    return tuple(v / scale for v in rho_vec)


def validate_chain(lt: LieType, weight: Weight, roots: list[Root]) -> ChainValidation:
    """Certify a candidate lambda-chain by walking alcoves exactly.

    The walk keeps a rational interior point of the current alcove.  Step i
    reflects it across the wall H_{beta_i, 1 - l_i}, where l_i counts the
    occurrences of beta_i so far, and demands that this wall is the unique
    affine hyperplane separating the point from its image.  Acceptance also
    needs the final point inside A_o - lambda and the multiplicity law.
    """
    pos = positive_roots(lt)
    for r in roots:
        try:
            r.validate_for(lt)
        except RootError as exc:
            return ChainValidation(False, str(exc))
    expected = sum(pairing(weight.coords, a, lt) for a in pos)
    if len(roots) != expected:
        return ChainValidation(
            False, f"chain length {len(roots)} differs from the alcove distance {expected}"
        )
    for a in pos:
        seen = sum(1 for r in roots if r.key == a.key)
        want = pairing(weight.coords, a, lt)
        if seen != want:
            return ChainValidation(
                False, f"root {a} occurs {seen} times, multiplicity law needs {want}"
            )

    point = _interior_start(lt)
    counts: Counter = Counter()
    for step, beta in enumerate(roots, start=1):
        counts[beta.key] += 1
        wall_level = 1 - counts[beta.key]
        value = pairing(point, beta, lt)
        if value.denominator == 1:
            raise RuntimeError("walk degenerated onto a hyperplane")
        coords = beta.coords(lt)
        reflected = tuple(
            c - (value - wall_level) * b for c, b in zip(point, coords)
        )
        separators = 0
        for a in pos:
            lo, hi = sorted((pairing(point, a, lt), pairing(reflected, a, lt)))
            if lo.denominator == 1 or hi.denominator == 1:
                raise RuntimeError("walk degenerated onto a hyperplane")
            separators += max(0, ceil(hi) - floor(lo) - 1)
        if separators != 1:
            return ChainValidation(
                False,
                f"step {step} ({beta}): crossing H({beta},{wall_level}) is not a wall "
                f"of the current alcove ({separators} hyperplanes separate)",
            )
        point = reflected

    shifted = tuple(p + c for p, c in zip(point, weight.coords))
    for a in pos:
        value = pairing(shifted, a, lt)
        if not 0 < value < 1:
            return ChainValidation(
                False, f"walk does not end in the translated alcove (pairing with {a})"
            )
    return ChainValidation(True)
