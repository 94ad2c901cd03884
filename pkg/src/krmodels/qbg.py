"""Quantum Bruhat graph edge tests and whole-graph construction.

``edge_kind`` is the single source of truth (the two length equations);
the circular-order criteria for types A and C are accelerators and are
cross-checked against it exhaustively in the test suite.  Types B and D
route every admissibility check through ``edge_kind``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .roots import LieType, Root, RootError, positive_roots, rho_pairing
from .weyl import WeylElement, all_elements, circ_strictly_between, weyl_order

BRUHAT_UP = "bruhat-up"
QUANTUM_DOWN = "quantum-down"


def quantum_drop(lt: LieType, root: Root) -> int:
    """Length drop 2<rho, alpha^vee> - 1 of a quantum edge labelled ``root``."""
    return 2 * rho_pairing(lt, root) - 1


def edge_kind(w: WeylElement, root: Root) -> str | None:
    """Classify the candidate edge w -> w s_root, or None."""
    diff = w.times_reflection(root).length() - w.length()
    if diff == 1:
        return BRUHAT_UP
    if diff == -quantum_drop(w.lt, root):
        return QUANTUM_DOWN
    return None


def edge_fast_A(w: WeylElement, root: Root) -> bool:
    """Type A criterion: no i < k < j with w(i) < w(k) < w(j) circularly."""
    if w.lt.family != "A":
        raise RootError("edge_fast_A needs a type A element")
    if root.kind != "diff":
        raise RootError(f"type A root expected, got {root}")
    i, j = root.first, root.second
    wi, wj = w.value(i), w.value(j)
    return not any(
        circ_strictly_between(w.lt, wi, w.value(k), wj) for k in range(i + 1, j)
    )


def _positions_between(n: int, i: int, second: int) -> list[int]:
    """Window positions strictly between i and the (possibly barred) second."""
    if second > 0:
        return list(range(i + 1, second))
    j = -second
    if j == i:
        return list(range(i + 1, n + 1))
    # unbarred i+1..n, then barred n-bar up to (j+1)-bar
    return list(range(i + 1, n + 1)) + [-k for k in range(n, j, -1)]


def edge_fast_C(w: WeylElement, root: Root) -> bool:
    """Type C criterion, one clause per root kind."""
    if w.lt.family != "C":
        raise RootError("edge_fast_C needs a type C element")
    if root.kind == "sum" and -root.second < root.first:
        root = Root(-root.second, -root.first)  # the criterion assumes i < j
    i = root.first
    wi = w.value(i)
    wm = w.value(root.second)
    if root.kind == "sum":
        if not _natural_lt(w.lt, wi, wm) or (wi > 0) != (wm > 0):
            return False
    blocked = any(
        circ_strictly_between(w.lt, wi, w.value(k), wm)
        for k in _positions_between(w.lt.rank, i, root.second)
    )
    return not blocked


def _natural_lt(lt: LieType, a: int, b: int) -> bool:
    """a < b in the natural order 1 < ... < n < n-bar < ... < 1-bar."""

    def pos(x: int) -> int:
        return x if x > 0 else 2 * lt.rank + 1 + x

    return pos(a) < pos(b)


@dataclass
class QbgEdge:
    source: WeylElement
    target: WeylElement
    label: Root
    kind: str


@dataclass
class QuantumBruhatGraph:
    lt: LieType
    vertices: list[WeylElement]
    edges: list[QbgEdge] = field(default_factory=list)

    def to_dot(self) -> str:
        lines = ["digraph qbg {"]
        for v in self.vertices:
            lines.append(f'  "{v.to_text()}";')
        for e in self.edges:
            style = "solid" if e.kind == BRUHAT_UP else "dashed"
            lines.append(
                f'  "{e.source.to_text()}" -> "{e.target.to_text()}"'
                f' [label="{e.label}", style={style}];'
            )
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        adjacency: dict[str, list[dict]] = {v.to_text(): [] for v in self.vertices}
        for e in self.edges:
            adjacency[e.source.to_text()].append(
                {"target": e.target.to_text(), "root": e.label.to_json(), "kind": e.kind}
            )
        return {
            "family": self.lt.family,
            "rank": self.lt.rank,
            "vertices": [v.to_text() for v in self.vertices],
            "adjacency": adjacency,
        }


def build_qbg(lt: LieType, guard: int = 100_000) -> QuantumBruhatGraph:
    """Classify every (w, alpha) pair; guarded by the group order."""
    order = weyl_order(lt)
    if order > guard:
        raise ValueError(f"|W| = {order} exceeds the guard {guard}")
    graph = QuantumBruhatGraph(lt, list(all_elements(lt)))
    pos = positive_roots(lt)
    for w in graph.vertices:
        for root in pos:
            kind = edge_kind(w, root)
            if kind is None:
                continue
            target = w.times_reflection(root)
            if kind == QUANTUM_DOWN:
                drop = w.length() - target.length()
                assert drop == quantum_drop(lt, root), (w, root)
            graph.edges.append(QbgEdge(w, target, root, kind))
    return graph
