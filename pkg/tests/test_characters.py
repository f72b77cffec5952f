import json
from fractions import Fraction
from math import factorial

import pytest

from oracles import brute_class_size, jacobi_trudi_character
from wreathind.characters import (
    ClassFunction,
    class_size,
    cycle_type_sign,
    decompose_class_function,
    inner_product,
    irreducible_character,
    mn_char,
)
from wreathind.errors import NotACharacter, SizeMismatch
from wreathind.objects import Family, induced_class_function, permutation_character_enum
from wreathind.partitions import conjugate, dim_specht, partitions_of


def test_mn_examples():
    for rho in partitions_of(5):
        assert mn_char((5,), rho) == 1
    assert mn_char((1, 1, 1), (3,)) == 1
    assert mn_char((2, 2), (2, 2)) == 2
    assert mn_char((4, 2), (2, 2, 2)) == 3
    with pytest.raises(SizeMismatch):
        mn_char((3,), (2,))


def test_mn_accepts_unsorted_cycle_type():
    assert mn_char((3, 2), (1, 2, 2)) == mn_char((3, 2), (2, 2, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_mn_matches_jacobi_trudi_brute_force(n):
    for lam in partitions_of(n):
        for rho in partitions_of(n):
            assert mn_char(lam, rho) == jacobi_trudi_character(lam, rho), (lam, rho)


def test_class_size_examples():
    assert class_size((2, 1, 1)) == 6
    assert class_size((3, 3)) == 40
    assert class_size((1,) * 7) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_match_brute_force(n):
    for rho in partitions_of(n):
        assert class_size(rho) == brute_class_size(rho)


@pytest.mark.parametrize("n", range(0, 16))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(rho) for rho in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_column_orthogonality(n):
    parts = partitions_of(n)
    for i, lam in enumerate(parts):
        for mu in parts[i:]:
            total = sum(class_size(r) * mn_char(lam, r) * mn_char(mu, r) for r in parts)
            assert total == (factorial(n) if lam == mu else 0)


@pytest.mark.parametrize("n", range(1, 13))
def test_degree_is_dimension_and_conjugation_is_sign_twist(n):
    for lam in partitions_of(n):
        assert mn_char(lam, (1,) * n) == dim_specht(lam)
    if n <= 9:
        for lam in partitions_of(n):
            for rho in partitions_of(n):
                assert mn_char(conjugate(lam), rho) == cycle_type_sign(rho) * mn_char(lam, rho)


def test_inner_products():
    chi = irreducible_character((4, 2))
    assert inner_product(chi, chi) == 1
    assert inner_product(irreducible_character((6,)), chi) == 0
    perm = induced_class_function(Family("C", 3, 2))
    assert inner_product(perm, chi) == 1
    assert isinstance(inner_product(perm, chi), Fraction)
    with pytest.raises(SizeMismatch):
        inner_product(chi, irreducible_character((3,)))


def test_decompose_class_function():
    perm = permutation_character_enum(Family("C", 2, 2))
    assert decompose_class_function(perm) == {(4,): 1, (2, 2): 1}
    assert decompose_class_function(irreducible_character((3, 2))) == {(3, 2): 1}
    assert decompose_class_function(permutation_character_enum(Family("D", 3, 2))) == {
        (6,): 1, (4, 2): 1, (4, 1, 1): 1, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 1, 1, 1, 1): 1,
    }


def test_decompose_rejects_non_characters():
    half = ClassFunction(2, {(2,): 0, (1, 1): 1})
    with pytest.raises(NotACharacter):
        decompose_class_function(half)
    negative = ClassFunction(2, {(2,): -1, (1, 1): -1})
    with pytest.raises(NotACharacter):
        decompose_class_function(negative)


def test_class_function_json():
    chi = irreducible_character((3, 3))
    data = json.loads(json.dumps(chi.to_json()))
    assert data["N"] == 6
    assert {"type": [3, 3], "value": mn_char((3, 3), (3, 3))} in data["values"]
    assert ClassFunction.from_json(data) == chi
