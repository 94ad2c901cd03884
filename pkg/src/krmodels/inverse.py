"""The inverse maps: reorder and greedy algorithms with their B/D variants.

The greedy scan keeps one running window A across the whole chain; the
target column of a segment only constrains the first ``height`` window
positions, and reaching it at the segment boundary is the termination
condition.  The modified algorithms thread the blocked-off predicates
through both the reorder choice and the greedy guard.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import LambdaChain
from .qbg import edge_kind
from .roots import LieType, Root, Weight
from .tableaux import NotInModelImage
from .weyl import WeylElement, circ_within, circle_dist


def blocked_off(col: tuple, col2: tuple, i: int, b: int, n: int) -> bool:
    """Type B blocked-off pattern of two columns at row i by b = col2[i-1].

    Rows beyond i never matter, so callers may pass truncations.
    """
    li = col[i - 1]
    if not 0 < b < n or abs(li) > b:
        return False
    if abs(li) == b and li != -b:
        return False
    needed = set(range(1, b + 1))
    if not needed <= {abs(x) for x in col[:i]}:
        return False
    if not needed <= {abs(x) for x in col2[:i]}:
        return False
    flips = sum(1 for lj, rj in zip(col[:i], col2[:i]) if lj < 0 and rj > 0)
    return flips % 2 == 1


def blocked_off_D(col: tuple, col2: tuple, i: int, b: int, n: int) -> bool:
    """Type D variant: the type B pattern or its negative-letter mirror."""
    if blocked_off(col, col2, i, b, n):
        return True
    li = col[i - 1]
    if not (b < 0 and -abs(li) <= b):
        return False
    if abs(li) == abs(b) and li != -b:
        return False
    needed = set(range(abs(b), n + 1))
    if not needed <= {abs(x) for x in col[:i]}:
        return False
    if not needed <= {abs(x) for x in col2[:i]}:
        return False
    flips = sum(1 for lj, rj in zip(col[:i], col2[:i]) if lj > 0 and rj < 0)
    return flips % 2 == 1


def _blocked_predicate(flavor: str):
    if flavor == "B":
        return blocked_off
    if flavor == "D":
        return blocked_off_D
    raise ValueError(f"no blocked-off flavor {flavor!r}")


def reorder(lt: LieType, columns) -> list[tuple[int, ...]]:
    """Row-by-row circular-minimum reordering; the first column is kept."""
    columns = [tuple(c) for c in columns]
    if not columns:
        return []
    out = [columns[0]]
    for col in columns[1:]:
        prev = out[-1]
        if len(col) > len(prev):
            raise ValueError("column heights must be weakly decreasing")
        pool = list(col)
        picked = []
        for j in range(len(col)):
            choice = min(pool, key=lambda x: circle_dist(lt, prev[j], x))
            picked.append(choice)
            pool.remove(choice)
        out.append(tuple(picked))
    return out


def mod_reorder(lt: LieType, columns, flavor: str) -> list[tuple[int, ...]]:
    """Reorder, refusing letters that block off the column pair (last row free)."""
    blocked = _blocked_predicate(flavor)
    columns = [tuple(c) for c in columns]
    if not columns:
        return []
    out = [columns[0]]
    for col in columns[1:]:
        prev = out[-1]
        if len(col) > len(prev):
            raise ValueError("column heights must be weakly decreasing")
        pool = list(col)
        picked: list[int] = []
        for j in range(1, len(col) + 1):
            ranked = sorted(pool, key=lambda x: circle_dist(lt, prev[j - 1], x))
            if j == len(col):
                choice = ranked[0]
            else:
                choice = next(
                    (
                        x
                        for x in ranked
                        if not blocked(prev, tuple(picked) + (x,), j, x, lt.rank)
                    ),
                    None,
                )
                if choice is None:
                    raise NotInModelImage(
                        f"no feasible letter at row {j} of column {col}"
                    )
            picked.append(choice)
            pool.remove(choice)
        out.append(tuple(picked))
    return out


@dataclass
class TraceStep:
    segment: int
    position: int
    root: Root
    kind: str | None
    window_before: tuple[int, ...]
    window_after: tuple[int, ...]
    forced: bool = False

    def to_json(self) -> dict:
        return {
            "segment": self.segment,
            "position": self.position,
            "root": self.root.to_json(),
            "edge": self.kind,
            "window_before": list(self.window_before),
            "window_after": list(self.window_after),
            "forced": self.forced,
        }


@dataclass
class FoldingSequence:
    chain: LambdaChain
    positions: tuple[int, ...]
    trace: list[TraceStep] = field(default_factory=list)

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(self.chain.entries[p - 1] for p in self.positions)


class TerminationFailure(NotInModelImage):
    """The greedy scan missed its target column at a segment boundary."""


def _scan_segment(
    chain: LambdaChain,
    seg_index: int,
    window: WeylElement,
    target: tuple[int, ...],
    mode: str,
    flavor: str | None,
    check: bool = True,
    on_blocked=None,
):
    """One segment of the greedy scan; returns the window and trace steps.

    ``on_blocked(window, target, row, remaining)`` is called at every point
    where a blocked-off pattern decides the scan, with the chain roots that
    are still ahead; the verifier uses it to certify that a blocked pattern
    really admits no path.
    """
    lt = chain.lt
    seg = chain.segments[seg_index - 1]
    height = len(target)
    blocked = _blocked_predicate(flavor) if mode == "mod" else None
    steps: list[TraceStep] = []
    for p in range(seg.start + 1, seg.stop + 1):
        root = chain.entries[p - 1]
        l, m = root.first, root.second
        remaining = chain.entries[p : seg.stop]
        take = False
        forced = False
        if (
            mode == "mod"
            and m == l + 1
            and l <= height
            and blocked(window.window, target, l, target[l - 1], lt.rank)
        ):
            # Forced step on a consecutive transposition whenever the running
            # window is blocked off with the target at its row.
            take = True
            forced = True
            if on_blocked is not None:
                on_blocked(window, target, l, remaining)
        elif window.value(l) != target[l - 1] and circ_within(
            lt, window.value(l), window.value(m), target[l - 1]
        ):
            if mode == "mod":
                # Stage II roots cannot turn a negative entry positive here,
                # unlike in type C where the same scan step is a QBG edge.
                sign_flip = root.kind == "long" and window.value(l) < 0
                moved = window.times_reflection(root)
                if sign_flip:
                    pass
                elif blocked(moved.window, target, l, target[l - 1], lt.rank):
                    if on_blocked is not None:
                        on_blocked(moved, target, l, remaining)
                else:
                    take = True
            else:
                take = True
        if take:
            after = window.times_reflection(root)
            steps.append(
                TraceStep(
                    seg_index,
                    p,
                    root,
                    edge_kind(window, root),
                    window.window,
                    after.window,
                    forced,
                )
            )
            window = after
    if check and window.window[:height] != tuple(target):
        raise TerminationFailure(
            f"segment {seg_index} ended at {window.window[:height]}, wanted {tuple(target)}"
        )
    return window, steps


def greedy(
    chain: LambdaChain,
    columns,
    mode: str = "plain",
    flavor: str | None = None,
    on_blocked=None,
) -> FoldingSequence:
    """Scan the chain against reordered columns and fold greedily.

    ``columns`` has one entry per chain segment.  In plain mode this is the
    type A / C greedy algorithm; in mod mode the blocked-off rules of the
    given flavor apply.
    """
    if len(columns) != len(chain.segments):
        raise ValueError(
            f"{len(columns)} columns against {len(chain.segments)} chain segments"
        )
    window = WeylElement.identity(chain.lt)
    trace: list[TraceStep] = []
    for seg_index, target in enumerate(columns, start=1):
        window, steps = _scan_segment(
            chain, seg_index, window, tuple(target), mode, flavor, on_blocked=on_blocked
        )
        trace.extend(steps)
    return FoldingSequence(chain, tuple(s.position for s in trace), trace)


def mod_greedy(chain: LambdaChain, columns, flavor: str, on_blocked=None) -> FoldingSequence:
    """The greedy scan with the blocked-off rules of the given flavor."""
    return greedy(chain, columns, mode="mod", flavor=flavor, on_blocked=on_blocked)


def invert(lt: LieType, weight: Weight, element, on_blocked=None) -> FoldingSequence:
    """The inverse bijection: tensor element to admissible positions."""
    from .chains import lambda_chain
    from .tableaux import split_column, extend as extend_pair, factor_heights

    chain = lambda_chain(lt, weight)
    heights = weight.conjugate
    element = tuple(tuple(c) for c in element)
    if len(element) != len(heights):
        raise NotInModelImage(
            f"element has {len(element)} columns, shape needs {len(heights)}"
        )
    if lt.family == "A":
        for col, h in zip(element, heights):
            if len(col) != h:
                raise NotInModelImage(f"column {col} does not have height {h}")
        ordered = reorder(lt, element)
        return greedy(chain, ordered)
    doubled: list[tuple[int, ...]] = []
    for col, h in zip(element, heights):
        if len(col) not in factor_heights(lt, h):
            raise NotInModelImage(f"column {col} cannot sit in a height {h} factor")
        pair = split_column(lt, col)
        if lt.family in ("B", "D"):
            pair = extend_pair(lt, pair, h)
        doubled.extend(pair)
    if lt.family == "C":
        ordered = reorder(lt, doubled)
        return greedy(chain, ordered)
    flavor = lt.family
    ordered = mod_reorder(lt, doubled, flavor)
    return greedy(chain, ordered, mode="mod", flavor=flavor, on_blocked=on_blocked)
