"""Chain construction and the exact alcove-walk validator."""

from __future__ import annotations

import pytest

from krmodels.chains import (
    ChainError,
    lambda_chain,
    max_column_height,
    omega_chain,
    validate_chain,
)
from krmodels.roots import LieType, Root, Weight, pairing, positive_roots


def roots_as_text(chain) -> list[str]:
    return [str(r) for r in chain.entries]


def test_omega_chains_in_a2():
    lt = LieType("A", 3)
    assert roots_as_text(omega_chain(lt, 2)) == ["(2,3)", "(1,3)"]
    assert roots_as_text(omega_chain(lt, 1)) == ["(1,2)", "(1,3)"]


def test_lambda_chain_a2_golden():
    lt = LieType("A", 3)
    chain = lambda_chain(lt, Weight(lt, (3, 2)))
    assert roots_as_text(chain) == ["(2,3)", "(1,3)", "(2,3)", "(1,3)", "(1,2)", "(1,3)"]
    assert chain.to_text() == "(2,3),(1,3) | (2,3),(1,3) | (1,2),(1,3)"


def test_lambda_chain_a3_staircase_golden():
    lt = LieType("A", 4)
    chain = lambda_chain(lt, Weight(lt, (3, 2, 1)))
    assert roots_as_text(chain) == [
        "(3,4)", "(2,4)", "(1,4)",
        "(2,3)", "(2,4)", "(1,3)", "(1,4)",
        "(1,2)", "(1,3)", "(1,4)",
    ]


def test_b3_left_part_golden_values():
    lt = LieType("B", 3)
    chain = omega_chain(lt, 2)
    left = chain.segments[0]
    assert [str(r) for r in chain.segment_entries(left)] == [
        "(2,3)", "(2,2b)", "(2,3b)", "(2,1b)", "(1,3)", "(1,1b)", "(1,3b)"
    ]
    assert left.stages == ("I", "II", "III", "IV", "I", "II", "III")


def test_empty_chain_is_accepted():
    lt = LieType("C", 2)
    weight = Weight(lt, ())
    assert validate_chain(lt, weight, [])
    assert len(lambda_chain(lt, weight)) == 0


def test_height_range_errors():
    with pytest.raises(ChainError):
        omega_chain(LieType("A", 3), 3)
    with pytest.raises(ChainError):
        omega_chain(LieType("B", 3), 3)  # spin column height
    with pytest.raises(ChainError):
        omega_chain(LieType("D", 4), 3)
    omega_chain(LieType("C", 3), 3)


def all_test_types():
    return [LieType("A", 3), LieType("A", 4), LieType("B", 2), LieType("B", 3),
            LieType("C", 2), LieType("C", 3), LieType("D", 3), LieType("D", 4)]


@pytest.mark.parametrize("lt", all_test_types(), ids=str)
def test_multiplicity_law_for_fundamentals(lt):
    for k in range(1, max_column_height(lt) + 1):
        weight = Weight(lt, (1,) * k)
        chain = omega_chain(lt, k)
        for alpha in positive_roots(lt):
            seen = sum(1 for r in chain.entries if r.key == alpha.key)
            assert seen == pairing(weight.coords, alpha, lt), (lt, k, alpha)


@pytest.mark.parametrize("lt", all_test_types(), ids=str)
def test_validator_accepts_constructed_chains(lt):
    for k in range(1, max_column_height(lt) + 1):
        weight = Weight(lt, (1,) * k)
        chain = omega_chain(lt, k)
        assert validate_chain(lt, weight, list(chain.entries)), (lt, k)
    shapes = [(2, 1), (3, 2)] if lt.family == "A" else [(2, 1)]
    for parts in shapes:
        if len(parts) > max_column_height(lt):
            continue
        weight = Weight(lt, parts)
        chain = lambda_chain(lt, weight)
        assert validate_chain(lt, weight, list(chain.entries)), (lt, parts)


def test_validator_rejects_wrong_crossing_order():
    lt = LieType("A", 3)
    weight = Weight(lt, (1,))
    verdict = validate_chain(lt, weight, [Root(1, 3), Root(1, 2)])
    assert not verdict.ok
    assert "wall" in verdict.reason


def test_validator_rejects_documented_mutations():
    lt = LieType("B", 3)
    weight = Weight(lt, (1, 1))
    good = list(lambda_chain(lt, weight).entries)
    assert validate_chain(lt, weight, good)

    mutations = {
        "swapped non-commuting neighbours": good[:4] + [good[5], good[4]] + good[6:],
        "dropped entry": good[:-1],
        "duplicated entry": good + [good[-1]],
        "foreign root substituted": [Root(1, 2)] + good[1:],
        "reversed chain": list(reversed(good)),
    }
    for name, candidate in mutations.items():
        assert not validate_chain(lt, weight, candidate), name


def test_validator_is_not_multiplicity_only():
    # permute two adjacent distinct roots crossing non-commuting walls
    lt = LieType("A", 3)
    weight = Weight(lt, (1, 1))
    good = list(lambda_chain(lt, weight).entries)  # (2,3),(1,3)
    swapped = [good[1], good[0]]
    assert validate_chain(lt, weight, good)
    assert not validate_chain(lt, weight, swapped)


def test_wrong_family_root_is_diagnosed():
    lt = LieType("A", 3)
    verdict = validate_chain(lt, Weight(lt, (1,)), [Root(1, -2), Root(1, 3)])
    assert not verdict.ok


def test_chain_text_stage_separators():
    lt = LieType("B", 3)
    text = omega_chain(lt, 2).to_text()
    assert text == "(2,3); (2,2b); (2,3b); (2,1b); (1,3); (1,1b); (1,3b) | (2,2b),(2,1b),(1,1b)"


def test_chain_json_round_trip_fields():
    lt = LieType("C", 2)
    payload = omega_chain(lt, 2).to_json()
    assert payload["family"] == "C" and payload["rank"] == 2
    assert [Root.from_json(r).key for r in payload["roots"]] == [
        r.key for r in omega_chain(lt, 2).entries
    ]
    sides = [seg["side"] for seg in payload["segments"]]
    assert sides == ["left", "right"]
