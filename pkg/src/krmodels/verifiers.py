"""Batch verification jobs: bijection round trips and structural checks.

These are the expensive exhaustive oracles.  They are deliberately written
against the definitional routes (edge_kind, brute-force path search) so
they can certify the fast paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alcove import enumerate_admissible, is_admissible, sfill
from .chains import lambda_chain, max_column_height
from .inverse import invert
from .qbg import edge_fast_A, edge_fast_C, edge_kind
from .roots import LieType, Weight, positive_roots
from .tableaux import NotInModelImage, element_to_doubled, enumerate_tensor
from .weyl import WeylElement, all_elements


@dataclass
class CheckResult:
    passed: bool
    details: list[str] = field(default_factory=list)


@dataclass
class RoundtripReport:
    alcove_count: int
    tableau_count: int
    counts_match: bool
    images_match: bool
    invert_after_sfill: bool
    sfill_after_invert: bool
    details: list[str]

    @property
    def passed(self) -> bool:
        return (
            self.counts_match
            and self.images_match
            and self.invert_after_sfill
            and self.sfill_after_invert
        )

    def to_json(self) -> dict:
        return {
            "alcove_count": self.alcove_count,
            "tableau_count": self.tableau_count,
            "counts_match": self.counts_match,
            "images_match": self.images_match,
            "invert_after_sfill": self.invert_after_sfill,
            "sfill_after_invert": self.sfill_after_invert,
            "passed": self.passed,
            "details": self.details,
        }


def _tensor_representative(lt: LieType, element, heights):
    """The element in sfill coordinates: itself in type A, doubled otherwise."""
    if lt.family == "A":
        return tuple(tuple(c) for c in element)
    return element_to_doubled(lt, element, heights)


def roundtrip_report(lt: LieType, weight: Weight, guard_max_m: int = 26) -> RoundtripReport:
    """Exhaustively certify that sfill and invert are mutually inverse."""
    chain = lambda_chain(lt, weight)
    heights = weight.conjugate
    subsets = enumerate_admissible(chain, guard_max_m)
    details: list[str] = []

    images: dict = {}
    for J in subsets:
        image = sfill(chain, J).columns
        if image in images:
            details.append(f"sfill collision: {images[image]} and {J} -> {image}")
        images[image] = J

    tensor = enumerate_tensor(lt, heights)
    representatives: dict = {}
    for element in tensor:
        representatives[_tensor_representative(lt, element, heights)] = element

    counts_match = len(subsets) == len(tensor) == len(images) == len(representatives)
    if not counts_match:
        details.append(
            f"|A(lambda)| = {len(subsets)} (distinct images {len(images)}), "
            f"|B^(lambda')| = {len(tensor)} (distinct representatives {len(representatives)})"
        )

    images_match = set(images) == set(representatives)
    if not images_match:
        missing = list(set(representatives) - set(images))[:3]
        extra = list(set(images) - set(representatives))[:3]
        details.append(f"image mismatch; unmatched tableaux {missing}, unmatched fills {extra}")

    invert_after_sfill = True
    for image, J in images.items():
        element = representatives.get(image)
        if element is None:
            invert_after_sfill = False
            continue
        try:
            recovered = invert(lt, weight, element)
        except NotInModelImage as exc:
            invert_after_sfill = False
            details.append(f"invert failed on {element}: {exc}")
            continue
        if recovered.positions != J:
            invert_after_sfill = False
            details.append(f"invert(sfill({J})) = {recovered.positions}")

    sfill_after_invert = True
    for rep, element in representatives.items():
        try:
            folding = invert(lt, weight, element)
        except NotInModelImage as exc:
            sfill_after_invert = False
            details.append(f"invert failed on {element}: {exc}")
            continue
        if not is_admissible(chain, folding.positions):
            sfill_after_invert = False
            details.append(f"invert({element}) output {folding.positions} not admissible")
            continue
        if sfill(chain, folding.positions).columns != rep:
            sfill_after_invert = False
            details.append(f"sfill(invert({element})) differs from its doubled form")

    return RoundtripReport(
        alcove_count=len(subsets),
        tableau_count=len(tensor),
        counts_match=counts_match,
        images_match=images_match,
        invert_after_sfill=invert_after_sfill,
        sfill_after_invert=sfill_after_invert,
        details=details,
    )


def check_qbg_criteria(lt: LieType) -> CheckResult:
    """Fast circular-order criterion against edge_kind, exhaustively."""
    if lt.family not in ("A", "C"):
        return CheckResult(False, [f"no fast QBG criterion for family {lt.family}"])
    fast = edge_fast_A if lt.family == "A" else edge_fast_C
    mismatches = 0
    pairs = 0
    for w in all_elements(lt):
        for root in positive_roots(lt):
            pairs += 1
            if fast(w, root) != (edge_kind(w, root) is not None):
                mismatches += 1
    detail = f"{lt}: {pairs} (w, alpha) pairs, {mismatches} criterion mismatches"
    return CheckResult(mismatches == 0, [detail])


def _path_exists(roots, start: WeylElement, target: tuple[int, ...]) -> bool:
    """Brute-force: does any admissible subsequence of ``roots`` reach a
    window whose prefix equals the target column?"""
    height = len(target)

    def search(idx: int, w: WeylElement) -> bool:
        if w.window[:height] == target:
            return True
        for p in range(idx, len(roots)):
            if edge_kind(w, roots[p]) is not None:
                if search(p + 1, w.times_reflection(roots[p])):
                    return True
        return False

    return search(0, start)


def check_block_off(lt: LieType, max_height: int = 3, shapes=None) -> CheckResult:
    """Blocked-off implies no admissible path, at every decision point.

    Runs the modified inverse pipeline over every tensor element of the
    test shapes and records each state where a blocked-off pattern decided
    the scan (a refusal or a forced step); brute-force path search then
    confirms that no admissible subsequence of the roots still ahead could
    have carried the window onto the blocked target column.
    """
    if lt.family not in ("B", "D"):
        return CheckResult(False, [f"blocked-off check needs type B or D, got {lt.family}"])
    if shapes is None:
        top = min(max_height, max_column_height(lt))
        shapes = [(1,) * k for k in range(1, top + 1)]
        shapes.append((2,))
        if max_column_height(lt) >= 2:
            shapes += [(2, 1), (2, 2)]
    instances: set = set()
    for parts in shapes:
        weight = Weight(lt, parts)

        def observe(window, target, row, remaining):
            instances.add((window.window, tuple(target), tuple(remaining)))

        for element in enumerate_tensor(lt, weight.conjugate):
            invert(lt, weight, element, on_blocked=observe)

    failures = 0
    details: list[str] = []
    ordered = sorted(
        instances, key=lambda inst: (inst[0], inst[1], tuple(map(str, inst[2])))
    )
    for window, target, remaining in ordered:
        if _path_exists(remaining, WeylElement(lt, window), target):
            failures += 1
            if len(details) < 5:
                details.append(
                    f"blocked state {window} -> {target} still connected through {remaining}"
                )
    details.insert(
        0,
        f"{lt}: {len(instances)} blocked decision points across shapes "
        f"{[list(s) for s in shapes]}, {failures} with a connecting path",
    )
    return CheckResult(failures == 0, details)
