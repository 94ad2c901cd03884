"""Kashiwara-Nakashima columns and the split / extend machinery.

Letters are signed integers, barred j encoded as -j, with 0 the type B
zero letter.  Columns are tuples read top to bottom.  Splitting removes
coexisting (z, z-bar) pairs and zero letters so the two resulting columns
embed into signed-permutation windows; extension pads a short split pair
to the full height of its Kirillov-Reshetikhin factor.
"""

from __future__ import annotations

import itertools

from .roots import LieType


class ColumnError(ValueError):
    """Raised for letters outside the type's column alphabet."""


class NotInModelImage(ValueError):
    """Raised when an inverse search finds no preimage."""


def natural_key(lt: LieType, letter: int) -> int:
    """Position in 1 < ... < n < 0 < n-bar < ... < 1-bar (0 only in type B)."""
    n = lt.rank
    if letter == 0:
        return 2 * n + 1
    if letter > 0:
        return 2 * letter
    return 4 * n + 2 + 2 * letter


def natural_sort(lt: LieType, letters) -> tuple[int, ...]:
    return tuple(sorted(letters, key=lambda x: natural_key(lt, x)))


def column_to_text(column) -> str:
    return ",".join("0" if x == 0 else (str(x) if x > 0 else f"{-x}b") for x in column)


def parse_column(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(-int(tok[:-1]) if tok.endswith("b") else int(tok))
    return tuple(out)


def _letter_ok(lt: LieType, x: int) -> bool:
    n = lt.rank
    if x == 0:
        return lt.family == "B"
    if lt.family == "A":
        return 1 <= x <= n
    return 1 <= abs(x) <= n


def is_kn_column(lt: LieType, letters) -> bool:
    """Conditions (1)(a)(b) and (2) for a KN column of the given type."""
    letters = tuple(letters)
    for x in letters:
        if not _letter_ok(lt, x):
            raise ColumnError(f"letter {x} not in the {lt} column alphabet")
    n = lt.rank
    for a, b in zip(letters, letters[1:]):
        if natural_key(lt, a) < natural_key(lt, b):
            continue
        if lt.family == "B" and a == b == 0:
            continue
        if lt.family == "D" and {a, b} == {n, -n}:
            continue
        return False
    for i in range(1, n + 1):
        if i in letters and -i in letters:
            a = letters.index(i) + 1  # topmost i, boxes from the top
            b = letters[::-1].index(-i) + 1  # bottommost i-bar, boxes from the bottom
            if a + b > i:
                return False
    return True


def enumerate_columns(lt: LieType, height: int) -> list[tuple[int, ...]]:
    """All KN columns of exactly the given height, in natural lex order."""
    n = lt.rank
    alphabet = list(range(1, n + 1))
    if lt.family == "B":
        alphabet += [0]
    if lt.family != "A":
        alphabet += [-j for j in range(n, 0, -1)]
    out = []

    def grow(prefix: list[int]) -> None:
        if len(prefix) == height:
            if is_kn_column(lt, prefix):
                out.append(tuple(prefix))
            return
        for x in alphabet:
            if prefix:
                a = prefix[-1]
                ok = natural_key(lt, a) < natural_key(lt, x)
                ok = ok or (lt.family == "B" and a == x == 0)
                ok = ok or (lt.family == "D" and {a, x} == {n, -n})
                if not ok:
                    continue
            grow(prefix + [x])

    grow([])
    return out


def split_column(lt: LieType, column) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Dispatch to the type C / B / D splitting of a KN column."""
    column = tuple(column)
    if not is_kn_column(lt, column):
        raise ColumnError(f"{column} is not a valid {lt} KN column")
    if lt.family == "A":
        raise ColumnError("type A columns are not split")
    n = lt.rank

    # One slot per letter the split must invent: a "zero" slot (one cell,
    # unbounded above) or a "pair" slot (two cells, bounded by its z).
    zero_cells: list[int] = []
    pair_slots: list[tuple[int, int, int]] = []  # (z, unbarred cell, barred cell)
    consumed: set[int] = set()
    if lt.family == "D":
        # Adjacent (n, n-bar) cells with n on top dissolve into two zero
        # slots as in type B; whatever n / n-bar coexistence survives the
        # sweep behaves like an ordinary (z, z-bar) pair with z = n, which
        # keeps the two relative orders of n and n-bar distinguishable.
        idx = 0
        while idx < len(column) - 1:
            if (column[idx], column[idx + 1]) == (n, -n):
                zero_cells += [idx, idx + 1]
                consumed.update((idx, idx + 1))  # dissolved cells free their letters
                idx += 2
            else:
                idx += 1
        plus_left = [i for i, x in enumerate(column) if x == n and i not in consumed]
        minus_left = [i for i, x in enumerate(column) if x == -n and i not in consumed]
        if plus_left and minus_left:
            pair_slots.append((n, plus_left[0], minus_left[0]))
    zero_cells += [i for i, x in enumerate(column) if x == 0]
    for z in sorted({x for x in column if 0 < x < n + 1}, reverse=True):
        if z == lt.rank and lt.family == "D":
            continue  # handled by the run pairing above
        if -z in column:
            pair_slots.append((z, column.index(z), column.index(-z)))
    pair_slots.sort(key=lambda s: -s[0])

    used = {abs(x) for i, x in enumerate(column) if x != 0 and i not in consumed}
    ts: list[int] = []
    prev = n + 1
    for bound in [None] * len(zero_cells) + [z for z, _, _ in pair_slots]:
        upper = prev - 1 if bound is None else min(prev - 1, bound - 1)
        t = next((v for v in range(upper, 0, -1) if v not in used), None)
        if t is None:
            raise NotInModelImage("column is unsplittable (no letter for a slot)")
        ts.append(t)
        used.add(t)
        prev = t

    left, right = list(column), list(column)
    for cell, t in zip(zero_cells, ts):
        left[cell] = t
        right[cell] = -t
    for (z, plus_cell, minus_cell), t in zip(pair_slots, ts[len(zero_cells) :]):
        left[plus_cell] = t
        right[minus_cell] = -t
    return natural_sort(lt, left), natural_sort(lt, right)


def split_c(lt: LieType, column):
    if lt.family != "C":
        raise ColumnError(f"split_c needs type C, got {lt}")
    return split_column(lt, column)


def split_b(lt: LieType, column):
    if lt.family != "B":
        raise ColumnError(f"split_b needs type B, got {lt}")
    return split_column(lt, column)


def split_d(lt: LieType, column):
    if lt.family != "D":
        raise ColumnError(f"split_d needs type D, got {lt}")
    return split_column(lt, column)


def unsplit(lt: LieType, pair) -> tuple[int, ...]:
    """The unique KN column with the given split, by inverse search."""
    left, right = tuple(pair[0]), tuple(pair[1])
    if len(left) != len(right):
        raise NotInModelImage("split columns must have equal heights")
    table = _split_table(lt, len(left))
    try:
        return table[(left, right)]
    except KeyError:
        raise NotInModelImage(f"({left}, {right}) is not a split column") from None


_split_tables: dict = {}


def _split_table(lt: LieType, height: int) -> dict:
    key = (lt, height)
    if key not in _split_tables:
        table = {}
        for column in enumerate_columns(lt, height):
            table[split_column(lt, column)] = column
        _split_tables[key] = table
    return _split_tables[key]


def extend(lt: LieType, pair, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Pad a split pair to height k with matched barred/unbarred letters."""
    left, right = list(pair[0]), list(pair[1])
    r = len(left)
    if len(right) != r:
        raise ValueError("split columns must have equal heights")
    if not r <= k <= lt.rank:
        raise ValueError(f"cannot extend height {r} to {k} at rank {lt.rank}")
    used = {abs(x) for x in left} | {abs(x) for x in right}
    fresh = []
    for v in range(1, lt.rank + 1):
        if len(fresh) == k - r:
            break
        if v not in used:
            fresh.append(v)
    if len(fresh) < k - r:
        raise ValueError("not enough letters to extend")
    left += [-v for v in fresh]
    right += fresh
    return natural_sort(lt, left), natural_sort(lt, right)


def unextend(lt: LieType, pair, r: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Undo ``extend`` down to the original height, by inverse search.

    Re-extension alone can be ambiguous (removing a different matched
    letter may re-extend to the same pair), so candidate bases are also
    screened against the split image, where the preimage is unique.
    """
    left, right = tuple(pair[0]), tuple(pair[1])
    k = len(left)
    if r == k:
        return left, right
    if not 0 <= r < k:
        raise NotInModelImage(f"bad original height {r} for an extended pair of height {k}")
    candidates = [v for v in range(1, lt.rank + 1) if -v in left and v in right]
    bases = []
    for combo in itertools.combinations(candidates, k - r):
        chosen = set(combo)
        base = (
            tuple(x for x in left if -x not in chosen),
            tuple(x for x in right if x not in chosen),
        )
        if extend(lt, base, k) == (left, right):
            bases.append(base)
    if len(bases) > 1:
        bases = [b for b in bases if b in _split_table(lt, r)]
    if not bases:
        raise NotInModelImage(f"({left}, {right}) is not an extended pair of height {r}")
    if len(bases) > 1:
        raise NotInModelImage(f"ambiguous unextension of ({left}, {right}) to height {r}")
    return bases[0]


def factor_heights(lt: LieType, height: int) -> list[int]:
    """Column heights occurring in the KR factor B^{height,1}."""
    if lt.family in ("A", "C"):
        return [height]
    return list(range(height, -1, -2))


def enumerate_factor(lt: LieType, height: int) -> list[tuple[int, ...]]:
    out = []
    for h in factor_heights(lt, height):
        out.extend(enumerate_columns(lt, h))
    return out


def enumerate_tensor(lt: LieType, heights) -> list[tuple[tuple[int, ...], ...]]:
    """All elements of the tensor product of single-column KR factors."""
    pools = [enumerate_factor(lt, h) for h in heights]
    return [tuple(combo) for combo in itertools.product(*pools)]


def element_to_doubled(lt: LieType, element, heights) -> tuple[tuple[int, ...], ...]:
    """Concatenated split-and-extended columns of a tensor element."""
    if len(element) != len(heights):
        raise ValueError("element and shape disagree on the number of factors")
    columns: list[tuple[int, ...]] = []
    for column, h in zip(element, heights):
        if lt.family == "A":
            raise ValueError("type A elements are not doubled")
        if len(column) not in factor_heights(lt, h):
            raise NotInModelImage(
                f"column of height {len(column)} cannot sit in a height {h} factor"
            )
        pair = split_column(lt, column)
        pair = extend(lt, pair, h)
        columns.extend(pair)
    return tuple(columns)


def doubled_to_element(lt: LieType, columns, heights) -> tuple[tuple[int, ...], ...]:
    """Recover the tensor element from its doubled filling."""
    if len(columns) != 2 * len(heights):
        raise NotInModelImage("doubled filling has the wrong number of columns")
    element = []
    for idx, h in enumerate(heights):
        pair = (tuple(columns[2 * idx]), tuple(columns[2 * idx + 1]))
        matches = []
        for r in factor_heights(lt, h):
            try:
                matches.append(unsplit(lt, unextend(lt, pair, r)))
            except NotInModelImage:
                continue
        if not matches:
            raise NotInModelImage(f"columns {pair} are not an extended split column")
        element.append(matches[0])
    return tuple(element)
