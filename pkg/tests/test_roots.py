"""Root system data against brute-force coordinate oracles."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from krmodels.roots import (
    LieType,
    RankError,
    Root,
    RootError,
    Weight,
    pairing,
    parse_root,
    positive_roots,
    rho,
    rho_pairing,
)
from krmodels.weyl import WeylElement


def brute_force_positive_roots(lt: LieType) -> set[tuple[int, ...]]:
    """Generate every legal root vector and keep those with positive lead."""
    n = lt.rank
    vectors = set()
    for i, j in itertools.permutations(range(n), 2):
        v = [0] * n
        v[i], v[j] = 1, -1
        vectors.add(tuple(v))
        if lt.family != "A":
            v = [0] * n
            v[i], v[j] = 1, 1
            vectors.add(tuple(v))
            vectors.add(tuple(-x for x in v))
    if lt.family in ("B", "C"):
        scale = 2 if lt.family == "C" else 1
        for i in range(n):
            v = [0] * n
            v[i] = scale
            vectors.add(tuple(v))
            vectors.add(tuple(-x for x in v))
    def positive(v):
        return next(x for x in v if x) > 0
    return {v for v in vectors if positive(v)}


@pytest.mark.parametrize(
    "family,rank,count",
    [("A", 3, 3), ("C", 2, 4), ("D", 3, 6), ("B", 3, 9), ("C", 3, 9), ("D", 4, 12)],
)
def test_positive_root_counts_match_oracle(family, rank, count):
    lt = LieType(family, rank)
    expected = brute_force_positive_roots(lt)
    got = {r.coords(lt) for r in positive_roots(lt)}
    assert got == expected
    assert len(positive_roots(lt)) == count


def test_type_a3_roots_are_the_three_differences():
    lt = LieType("A", 3)
    assert [str(r) for r in positive_roots(lt)] == ["(1,2)", "(1,3)", "(2,3)"]


def test_rank_errors():
    with pytest.raises(RankError):
        LieType("D", 2)
    with pytest.raises(RankError):
        LieType("B", 1)
    with pytest.raises(RankError):
        LieType("E", 6)


def test_rho_closed_forms():
    # in type A the ambient representative only matters modulo (1,...,1)
    a_rho = rho(LieType("A", 3))
    assert tuple(a - b for a, b in zip(a_rho, a_rho[1:])) == (1, 1)
    assert rho(LieType("B", 3)) == (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))
    assert rho(LieType("C", 3)) == (3, 2, 1)
    assert rho(LieType("D", 4)) == (3, 2, 1, 0)


def test_pairing_with_rho_in_a2():
    lt = LieType("A", 3)
    assert pairing(rho(lt), Root(1, 2), lt) == 1
    assert pairing(rho(lt), Root(1, 3), lt) == 2


def test_fundamental_weights_are_dual_to_simple_coroots():
    # non-spin fundamentals only: those are the partitions (1^i)
    from krmodels.chains import max_column_height

    for lt in (LieType("A", 4), LieType("B", 3), LieType("C", 3), LieType("D", 4)):
        n = lt.rank
        simples = [Root(i, i + 1) for i in range(1, n)]
        if lt.family in ("B", "C"):
            simples.append(Root(n, -n))
        elif lt.family == "D":
            simples.append(Root(n - 1, -n))
        for i in range(1, max_column_height(lt) + 1):
            omega = (1,) * i + (0,) * (n - i)
            for j, alpha in enumerate(simples, start=1):
                assert pairing(omega, alpha, lt) == (1 if i == j else 0), (lt, i, j)


def test_rho_pairing_is_integral_everywhere():
    for lt in (LieType("A", 4), LieType("B", 3), LieType("C", 3), LieType("D", 4)):
        for r in positive_roots(lt):
            assert rho_pairing(lt, r) >= 1


def test_reflection_windows():
    from krmodels.weyl import reflection

    assert reflection(LieType("A", 4), Root(1, 2)).window == (2, 1, 3, 4)
    c3 = LieType("C", 3)
    assert reflection(c3, Root(1, -2)).window == (-2, -1, 3)
    assert reflection(c3, Root(2, -2)).window == (1, -2, 3)


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 3), ("C", 3), ("D", 4)])
def test_reflections_are_involutions_and_permute_roots(family, rank):
    lt = LieType(family, rank)
    pos = positive_roots(lt)
    all_vectors = {r.coords(lt) for r in pos} | {
        tuple(-x for x in r.coords(lt)) for r in pos
    }
    for r in pos:
        s = WeylElement.identity(lt).times_reflection(r)
        assert s.times_reflection(r).window == WeylElement.identity(lt).window
        image = s.act_on_root_coords(r.coords(lt))
        assert image == tuple(-x for x in r.coords(lt))
        mapped = {s.act_on_root_coords(v) for v in all_vectors}
        assert mapped == all_vectors


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 3), ("C", 3), ("D", 4)])
def test_height_one_roots_are_the_simples(family, rank):
    lt = LieType(family, rank)
    simple_count = lt.rank - 1 if family == "A" else lt.rank
    ones = [r for r in positive_roots(lt) if rho_pairing(lt, r) == 1]
    assert len(ones) == simple_count


def test_root_kind_legality():
    with pytest.raises(RootError):
        Root(1, -1).validate_for(LieType("A", 3))
    with pytest.raises(RootError):
        Root(2, -2).validate_for(LieType("D", 4))
    with pytest.raises(RootError):
        Root(3, 2)


def test_root_json_and_text_round_trip():
    for r in positive_roots(LieType("C", 3)):
        assert Root.from_json(r.to_json()).key == r.key
        assert parse_root(str(r)) == r
    oriented = Root(2, -1)
    assert oriented.to_json() == {"kind": "sum", "i": 2, "j": 1}
    assert parse_root("(2,1b)") == oriented
    assert oriented.key == Root(1, -2).key


def test_weight_validation_and_conjugate():
    lt = LieType("A", 3)
    assert Weight(lt, (3, 2)).conjugate == (2, 2, 1)
    assert Weight(lt, ()).conjugate == ()
    with pytest.raises(ValueError):
        Weight(lt, (1, 2))
    with pytest.raises(ValueError):
        Weight(lt, (1, 1, 1))  # too many parts for A_2
