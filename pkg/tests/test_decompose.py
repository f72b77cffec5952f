import json
import random

import pytest

from wreathind.levels import (
    LevelResult,
    closed_form_m2,
    decompose,
    mult_of_pattern,
    restricted_target,
    solve_level,
    verify_section4,
)
from wreathind.errors import AmbiguousRecursion, NoSolution, SolutionCapExceeded
from wreathind.objects import Family, coset_count, permutation_character_wreath
from wreathind.partitions import MultiplicityVector, partitions_of
from wreathind.young import restrict_vector

C3 = Family("C", 3, 1)


def test_closed_form():
    assert closed_form_m2(1).multiplicities == {(2,): 1}
    assert closed_form_m2(2).multiplicities == {(4,): 1, (2, 2): 1}
    res = closed_form_m2(3)
    assert res.multiplicities == {(6,): 1, (4, 2): 1, (2, 2, 2): 1}
    assert res.multiplicities.total_dimension() == 15


def test_restricted_target_examples():
    c = restricted_target(MultiplicityVector(3, {(3,): 1}), Family("C", 3, 2))
    assert c == {(5,): 1, (4, 1): 1, (3, 2): 1}
    d = restricted_target(MultiplicityVector(3, {(3,): 1, (1, 1, 1): 1}), Family("D", 3, 2))
    assert d == {(5,): 1, (4, 1): 2, (3, 2): 1, (3, 1, 1): 2, (2, 2, 1): 1, (2, 1, 1, 1): 2, (1, 1, 1, 1, 1): 1}
    b = restricted_target(MultiplicityVector(2, {(2,): 1}), Family("C", 2, 2))
    assert b == {(3,): 1, (2, 1): 1}


def test_solve_level_examples():
    sols = solve_level(MultiplicityVector(5, {(5,): 1, (4, 1): 1, (3, 2): 1}), 6)
    assert sols == [MultiplicityVector(6, {(6,): 1, (4, 2): 1})]
    assert solve_level(MultiplicityVector(1, {(1,): 1}), 2) == [MultiplicityVector(2, {(2,): 1})]


def test_solve_level_table_row_five():
    level4 = decompose(C3, 4)
    sols = solve_level(restricted_target(level4), 15)
    assert len(sols) == 1
    assert sols[0][(9, 4, 2)] == 2


def test_solve_level_errors():
    with pytest.raises(NoSolution):
        solve_level(MultiplicityVector(3, {(2, 1): 1}), 4)
    d2 = restricted_target(permutation_character_wreath(Family("D", 3, 1)), Family("D", 3, 2))
    with pytest.raises(SolutionCapExceeded):
        solve_level(d2, 6, cap=2)


def _shuffled(size, seed):
    order = partitions_of(size)
    if seed is None:
        return order[::-1]
    random.Random(seed).shuffle(order)
    return order


@pytest.mark.parametrize("fam,n,seed", [
    *[(fam, n, seed) for fam, n in [(C3, 4), (Family("D", 3, 2), 2), (Family("D", 3, 3), 3)]
      for seed in [None, 0, 1, 2, 3, 4]],
    # shuffled orders lose most forced assignments, so N = 15 is costly; two seeds suffice
    (C3, 5, None), (C3, 5, 2), (C3, 5, 11),
])
def test_solutions_independent_of_search_order(fam, n, seed):
    prev = decompose(fam, n - 1, strict=False)
    target = restricted_target(prev)
    size = fam.m * n
    assert solve_level(target, size, order=_shuffled(size, seed)) == solve_level(target, size)


@pytest.mark.parametrize("n", range(1, 6))
def test_recursion_preimage_property(n):
    res = decompose(C3, n)
    for sol in res.solutions:
        assert sol.get((3 * n,)) == 1
    if n > 1:
        assert restrict_vector(res.multiplicities) == restricted_target(decompose(C3, n - 1))


def test_table_rows_three_and_four():
    assert decompose(C3, 3).multiplicities == {(9,): 1, (7, 2): 1, (6, 3): 1, (5, 2, 2): 1, (4, 4, 1): 1}
    assert len(decompose(C3, 4).multiplicities) == 12


@pytest.mark.parametrize("fam,n", [(C3, n) for n in range(1, 6)] + [(Family("C", 2, 1), n) for n in range(1, 7)]
                         + [(Family("C", 4, 1), n) for n in range(1, 4)])
def test_methods_agree_and_dimension_identity(fam, n):
    rec = decompose(fam, n)
    assert rec.uniqueness == "unique"
    assert rec.multiplicities == decompose(fam, n, "oracle").multiplicities
    if fam.m == 2:
        assert rec.multiplicities == decompose(fam, n, "closed_form").multiplicities
    assert rec.multiplicities.total_dimension() == coset_count(fam.at(n))
    assert rec.multiplicities.get((fam.m * n,)) == 1


def test_d_family_ambiguity_is_adjudicated_by_the_oracle():
    fam = Family("D", 3, 2)
    with pytest.raises(AmbiguousRecursion) as err:
        decompose(fam, 2)
    res = err.value.result
    assert res.uniqueness == "ambiguous"
    assert len(res.solutions) == 3
    assert res.multiplicities == permutation_character_wreath(fam)
    assert res.multiplicities in res.solutions
    assert res.multiplicities == {(6,): 1, (4, 2): 1, (4, 1, 1): 1, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 1, 1, 1, 1): 1}


def test_d_family_level_three():
    fam = Family("D", 3, 3)
    res = decompose(fam, 3, strict=False)
    assert res.step_uniqueness == {1: "oracle", 2: "ambiguous", 3: "unique"}
    assert res.multiplicities == decompose(fam, 3, "oracle").multiplicities
    assert res.multiplicities.total_dimension() == coset_count(fam)


def test_closed_form_rejects_m3():
    with pytest.raises(ValueError):
        decompose(C3, 2, "closed_form")


def test_mult_of_pattern():
    assert mult_of_pattern(C3, "42", 5) == 2
    assert mult_of_pattern(C3, "51", 5) == 0
    assert mult_of_pattern(C3, "0", 5) == 1
    assert mult_of_pattern(C3, "9", 2) == 0
    assert mult_of_pattern(C3, "2", 6, "minus") == 2


def test_verify_section4_report():
    checks = verify_section4(6)
    assert all(c.passed for c in checks)
    names = {(c.name, c.n) for c in checks}
    assert ("minus_table", 6) in names and ("minus_table", 5) not in names
    assert next(c.detail for c in checks if c.name == "51+42 at n-") == "9"


def test_level_result_json_roundtrip(tmp_path):
    res = decompose(C3, 5, cache_dir=tmp_path)
    data = json.loads(json.dumps(res.to_json()))
    assert data["family"] == "C" and data["m"] == 3 and data["n"] == 5
    assert data["uniqueness"] == "unique"
    assert data["multiplicities"][0] == {"partition": [15], "mult": 1}
    assert LevelResult.from_json(data).multiplicities == res.multiplicities
    assert (tmp_path / "C_m3_n5_recursion.json").exists()


def test_disk_cache_is_reused(tmp_path):
    from wreathind import levels as mod

    first = decompose(C3, 4, cache_dir=tmp_path)
    mod.clear_memory_cache()
    again = decompose(C3, 4, cache_dir=tmp_path)
    assert again.multiplicities == first.multiplicities
    assert again.step_uniqueness == first.step_uniqueness
