import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import double_factorial
from wreathind.errors import OddRow, SizeMismatch, TooLarge
from wreathind.matching import (
    FormalMatchingSum,
    Tabloid,
    base_coefficient_contributors,
    base_matching,
    equivariance_check,
    f_row,
    f_tabloid,
    matching_module,
    perfect_matchings,
    polytabloid_image,
    verify_iso,
)
from wreathind.objects import Permutation
from wreathind.partitions import is_even, partitions_of


def test_f_row():
    assert f_row({1, 2, 3, 4}) == FormalMatchingSum({((1, 2), (3, 4)): 1, ((1, 3), (2, 4)): 1, ((1, 4), (2, 3)): 1})
    assert f_row({5, 6}) == FormalMatchingSum({((5, 6),): 1})
    six = f_row(range(1, 7))
    assert len(six) == 15 == double_factorial(5)
    assert set(six.values()) == {1}
    with pytest.raises(OddRow):
        f_row({1, 2, 3})


def test_f_tabloid():
    t = Tabloid.of([{1, 2, 3, 4}, {5, 6}])
    assert f_tabloid(t) == FormalMatchingSum({
        ((1, 2), (3, 4), (5, 6)): 1, ((1, 3), (2, 4), (5, 6)): 1, ((1, 4), (2, 3), (5, 6)): 1,
    })
    assert f_tabloid(Tabloid.of([{1, 2}])) == FormalMatchingSum({((1, 2),): 1})
    assert f_tabloid(Tabloid.of([{1, 2}, {3, 4}])) == FormalMatchingSum({((1, 2), (3, 4)): 1})


@pytest.mark.parametrize("rows", [[{1, 2, 3, 4}, {5, 6}], [{2, 5, 7, 8}, {1, 3, 4, 6}], [{1, 6}, {2, 3}, {4, 5}]])
def test_f_tabloid_term_count(rows):
    t = Tabloid.of(rows)
    image = f_tabloid(t)
    expected = 1
    for r in rows:
        expected *= double_factorial(len(r) - 1)
    assert len(image) == expected
    assert set(image.values()) == {1}


def _brute_polytabloid_22():
    # column group of [[1,2],[3,4]] is {e, (13), (24), (13)(24)}
    acc = FormalMatchingSum()
    for swap13, swap24 in itertools.product([False, True], repeat=2):
        g = {1: 1, 2: 2, 3: 3, 4: 4}
        if swap13:
            g[1], g[3] = 3, 1
        if swap24:
            g[2], g[4] = 4, 2
        sign = (-1) ** (swap13 + swap24)
        rows = [{g[1], g[2]}, {g[3], g[4]}]
        acc = acc + f_tabloid(Tabloid.of(rows)) * sign
    return acc


def test_polytabloid_image_examples():
    expected = FormalMatchingSum({((1, 2), (3, 4)): 2, ((1, 4), (2, 3)): -2})
    assert polytabloid_image((2, 2)) == expected == _brute_polytabloid_22()
    for n in (1, 2, 3, 4):
        assert polytabloid_image((2 * n,)) == f_row(range(1, 2 * n + 1))
    img = polytabloid_image((4, 2))
    assert img
    assert img.coefficient(((1, 2), (3, 4), (5, 6))) > 0


def test_polytabloid_rejects_odd_shapes_and_caps():
    with pytest.raises(OddRow):
        polytabloid_image((3, 3))
    with pytest.raises(TooLarge):
        polytabloid_image((2, 2, 2, 2), cap=100)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_base_coefficient_counts_positive_contributors(n):
    for lam in partitions_of(2 * n):
        if not is_even(lam):
            continue
        signs = base_coefficient_contributors(lam)
        assert signs and all(s == 1 for s in signs)
        assert polytabloid_image(lam).coefficient(base_matching(n)) == len(signs)


@pytest.mark.parametrize("n", [2, 3])
def test_verify_iso_small(n):
    report = verify_iso(n)
    assert all(c.passed for c in report), [c for c in report if not c.passed]
    dim_check = report[-1]
    assert dim_check.check == "dimension_identity"
    assert dim_check.detail == {2: "3 vs 3", 3: "15 vs 15"}[n]


def test_projection_to_other_isotypic_is_zero():
    module = matching_module(2)
    v = module.vector(polytabloid_image((2, 2)))
    assert not module.isotypic_projection((4,), v).any()
    assert module.isotypic_projection((2, 2), v).any()


def test_class_sum_rows_add_up_to_class_sizes():
    from wreathind.characters import class_size
    module = matching_module(3)
    for r, rho in enumerate(module.ctypes):
        assert (module.class_sums[r].sum(axis=0) == class_size(rho)).all()


def test_verify_iso_bound():
    with pytest.raises(TooLarge):
        verify_iso(5)


def test_equivariance_examples():
    t = Tabloid.of([{1, 2, 3, 4}, {5, 6}])
    assert equivariance_check(Permutation.identity(6), t)
    assert equivariance_check(Permutation.from_cycles(6, [[1, 2]]), t)
    with pytest.raises(SizeMismatch):
        equivariance_check(Permutation.identity(4), t)


def _all_tabloids(shape):
    size = sum(shape)
    seen = set()
    for perm in itertools.permutations(range(1, size + 1)):
        rows, start = [], 0
        for p in shape:
            rows.append(frozenset(perm[start:start + p]))
            start += p
        seen.add(tuple(rows))
    return [Tabloid(r) for r in sorted(seen, key=lambda rs: [sorted(r) for r in rs])]


@pytest.mark.parametrize("shape", [(4,), (2, 2)])
def test_equivariance_exhaustive_n2(shape):
    for g in itertools.permutations(range(1, 5)):
        for t in _all_tabloids(shape):
            assert equivariance_check(Permutation(g), t)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(6,), (4, 2), (2, 2, 2), (8,), (6, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2)]),
       st.randoms(use_true_random=False))
def test_equivariance_random(shape, rng):
    size = sum(shape)
    points = list(range(1, size + 1))
    rng.shuffle(points)
    rows, start = [], 0
    for p in shape:
        rows.append(points[start:start + p])
        start += p
    images = list(range(1, size + 1))
    rng.shuffle(images)
    assert equivariance_check(Permutation(images), Tabloid.of(rows))


def test_matching_sum_json():
    data = json.loads(json.dumps(polytabloid_image((2, 2)).to_json()))
    assert data == [{"matching": [[1, 2], [3, 4]], "coeff": 2}, {"matching": [[1, 4], [2, 3]], "coeff": -2}]


def test_perfect_matching_counts():
    for n in range(1, 6):
        assert len(list(perfect_matchings(range(1, 2 * n + 1)))) == double_factorial(2 * n - 1)
