"""Explicit embedding of each even-shape Specht module into the span of perfect matchings.

A tabloid row R is sent to the sum of all perfect matchings of R, a tabloid
to the union-product over its rows; restricted to the polytabloid of the
row-reading tableau this gives a nonzero vector in the lambda-isotypic part
of C[perfect matchings of K_2n].
"""
from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cache
from math import factorial, prod

import numpy as np

from .characters import _mn
from .errors import OddRow, SizeMismatch, TooLarge
from .objects import Permutation
from .partitions import Partition, conjugate, dim_specht, is_even, partitions_of

DEFAULT_COLUMN_CAP = 10**6
DEFAULT_ISO_BOUND = 4

Matching = tuple[tuple[int, int], ...]


def _canon(edges: Iterable[Iterable[int]]) -> Matching:
    return tuple(sorted(tuple(sorted(e)) for e in edges))


def perfect_matchings(points: Iterable[int]) -> Iterator[Matching]:
    points = sorted(points)
    if len(points) % 2:
        raise OddRow(f"{len(points)} points admit no perfect matching")
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for k, partner in enumerate(rest):
        for tail in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield ((first, partner),) + tail


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


class FormalMatchingSum(Mapping):
    """Integer combination of perfect matchings; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Matching, int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Matching, int] = {}
        for matching, c in items:
            key = _canon(matching)
            acc[key] = acc.get(key, 0) + c
        self._terms = {k: v for k, v in sorted(acc.items()) if v}

    def __getitem__(self, matching):
        return self._terms[_canon(matching)]

    def coefficient(self, matching) -> int:
        return self._terms.get(_canon(matching), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, FormalMatchingSum):
            return self._terms == other._terms
        return NotImplemented

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        body = " + ".join(f"{c}*{_fmt(m)}" for m, c in self._terms.items())
        return f"FormalMatchingSum({body or '0'})"

    def __add__(self, other):
        return FormalMatchingSum(itertools.chain(self.items(), other.items()))

    def __mul__(self, other):
        """Union product of sums over disjoint ground sets."""
        if isinstance(other, int):
            return FormalMatchingSum({k: other * v for k, v in self.items()})
        out: dict[Matching, int] = {}
        for a, ca in self.items():
            for b, cb in other.items():
                key = _canon(a + b)
                out[key] = out.get(key, 0) + ca * cb
        return FormalMatchingSum(out)

    __rmul__ = __mul__

    def act(self, g: Permutation) -> FormalMatchingSum:
        img = g.images
        return FormalMatchingSum(
            (tuple((img[a - 1], img[b - 1]) for a, b in m), c) for m, c in self.items()
        )

    def to_json(self) -> list[dict]:
        return [{"matching": [list(e) for e in m], "coeff": c} for m, c in self._terms.items()]


def _fmt(matching: Matching) -> str:
    return "|".join(f"{a}{b}" if max(a, b) < 10 else f"{a},{b}" for a, b in matching)


@dataclass(frozen=True)
class Tabloid:
    """Row-equivalence class of a tableau: an ordered list of row sets."""

    rows: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> Tabloid:
        rows = tuple(frozenset(r) for r in rows)
        seen: set[int] = set()
        for r in rows:
            if seen & r:
                raise ValueError("tabloid rows must be disjoint")
            seen |= r
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError("tabloid rows must cover 1..N")
        return cls(rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def __len__(self):
        return sum(len(r) for r in self.rows)

    def act(self, g: Permutation) -> Tabloid:
        img = g.images
        return Tabloid(tuple(frozenset(img[i - 1] for i in r) for r in self.rows))


def f_row(row: Iterable[int]) -> FormalMatchingSum:
    """Sum of all perfect matchings of the row's points, each with coefficient 1."""
    row = sorted(row)
    if len(row) % 2:
        raise OddRow(f"row {row} has odd size")
    return FormalMatchingSum((m, 1) for m in perfect_matchings(row))


def f_tabloid(t: Tabloid) -> FormalMatchingSum:
    out = FormalMatchingSum({(): 1})
    for row in t.rows:
        out = out * f_row(row)
    return out


def seed_tableau(shape: Partition) -> list[list[int]]:
    """Row-reading standard tableau of ``shape``: 1..N filled left to right, top to bottom."""
    rows, start = [], 1
    for p in shape:
        rows.append(list(range(start, start + p)))
        start += p
    return rows


def _column_group(shape: Partition) -> Iterator[tuple[dict[int, int], int]]:
    """(mapping, sign) for every element of the seed tableau's column group."""
    t = seed_tableau(shape)
    columns = [[t[i][j] for i in range(len(shape)) if shape[i] > j] for j in range(shape[0])] if shape else []
    per_column = []
    for col in columns:
        options = []
        for perm in itertools.permutations(col):
            inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
            options.append((dict(zip(col, perm)), -1 if inversions % 2 else 1))
        per_column.append(options)
    for combo in itertools.product(*per_column):
        mapping, sign = {}, 1
        for part, s in combo:
            mapping.update(part)
            sign *= s
        yield mapping, sign


def column_group_order(shape: Partition) -> int:
    return prod(factorial(c) for c in conjugate(shape))


def polytabloid_image(shape: Partition, cap: int = DEFAULT_COLUMN_CAP) -> FormalMatchingSum:
    """Image of the seed polytabloid: the signed column-group sum of f over moved tabloids."""
    shape = tuple(shape)
    if not is_even(shape):
        raise OddRow(f"{shape} has an odd part")
    order = column_group_order(shape)
    if order > cap:
        raise TooLarge(f"column group of {shape}", order, cap)
    t = seed_tableau(shape)
    acc: dict[Matching, int] = {}
    for mapping, sign in _column_group(shape):
        moved = Tabloid(tuple(frozenset(mapping.get(x, x) for x in row) for row in t))
        for m, c in f_tabloid(moved).items():
            acc[m] = acc.get(m, 0) + sign * c
    return FormalMatchingSum(acc)


def base_matching(n: int) -> Matching:
    return tuple((2 * i - 1, 2 * i) for i in range(1, n + 1))


def base_coefficient_contributors(shape: Partition) -> list[int]:
    """Signs of the column-group elements whose moved tabloid maps onto the base matching."""
    t = seed_tableau(shape)
    base = base_matching(sum(shape) // 2)
    signs = []
    for mapping, sign in _column_group(shape):
        rows = [frozenset(mapping.get(x, x) for x in row) for row in t]
        if all(any({a, b} <= r for r in rows) for a, b in base):
            signs.append(sign)
    return signs


def equivariance_check(g: Permutation, t: Tabloid) -> bool:
    """Whether f(g.T) == g.f(T)."""
    if len(g) != len(t):
        raise SizeMismatch(f"permutation of degree {len(g)} on a tabloid of size {len(t)}")
    return f_tabloid(t.act(g)) == f_tabloid(t).act(g)


class MatchingModule:
    """C[perfect matchings of K_2n] with class-sum operators for every cycle type of S_2n.

    ``class_sums[r]`` is the integer matrix of the sum of all permutations of
    cycle type ``ctypes[r]`` acting on matchings.  Built by explicit averaging
    over S_2n, so only small n are feasible.
    """

    def __init__(self, n: int, bound: int = DEFAULT_ISO_BOUND, chunk: int = 4096):
        if n > bound:
            raise TooLarge(f"group averaging over S_{2 * n}", factorial(2 * n), factorial(2 * bound))
        self.n = n
        size = 2 * n
        self.matchings = list(perfect_matchings(range(1, size + 1)))
        self.index = {m: i for i, m in enumerate(self.matchings)}
        self.ctypes = partitions_of(size)
        ctype_index = {c: r for r, c in enumerate(self.ctypes)}
        k = len(self.matchings)

        partner = np.zeros((k, size), dtype=np.int64)
        for i, m in enumerate(self.matchings):
            for a, b in m:
                partner[i, a - 1] = b - 1
                partner[i, b - 1] = a - 1
        weights = size ** np.arange(size, dtype=np.int64)
        codes = partner @ weights
        order = np.argsort(codes)
        sorted_codes = codes[order]

        sums = np.zeros((len(self.ctypes), k, k), dtype=np.int64)
        src = np.arange(k)
        perms = itertools.permutations(range(size))
        while True:
            block = list(itertools.islice(perms, chunk))
            if not block:
                break
            g = np.array(block, dtype=np.int64)
            ginv = np.argsort(g, axis=1)
            # partner of g(i) in g.M is g(partner_M(i)), i.e. g o partner o g^-1
            pulled = partner[:, ginv].transpose(1, 0, 2)
            moved = g[np.arange(len(block))[:, None, None], pulled]
            image = order[np.searchsorted(sorted_codes, moved @ weights)]
            for row, perm in enumerate(block):
                r = ctype_index[_cycle_type(perm)]
                np.add.at(sums[r], (image[row], src), 1)
        self.class_sums = sums

    def vector(self, s: FormalMatchingSum) -> np.ndarray:
        v = np.zeros(len(self.matchings), dtype=np.int64)
        for m, c in s.items():
            v[self.index[m]] = c
        return v

    def isotypic_projection(self, shape: Partition, v: np.ndarray) -> np.ndarray:
        """N!/dim times the central idempotent of ``shape`` applied to ``v`` (exact integers)."""
        chars = np.array([_mn(tuple(shape), c) for c in self.ctypes], dtype=np.int64)
        return np.einsum("r,rij,j->i", chars, self.class_sums, v)


def _cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        k, i = 0, s
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


@cache
def matching_module(n: int, bound: int = DEFAULT_ISO_BOUND) -> MatchingModule:
    return MatchingModule(n, bound)


@dataclass
class IsoCheck:
    shape: Partition
    check: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "check": self.check, "passed": self.passed, "detail": self.detail}


def verify_iso(n: int, bound: int = DEFAULT_ISO_BOUND) -> list[IsoCheck]:
    """Check nonvanishing, base-coefficient sign and isotypic placement for every even shape of 2n."""
    if n > bound:
        raise TooLarge(f"isomorphism check at n={n}", n, bound)
    size = 2 * n
    module = matching_module(n, bound)
    evens = [lam for lam in partitions_of(size) if is_even(lam)]
    out: list[IsoCheck] = []
    for lam in evens:
        image = polytabloid_image(lam)
        out.append(IsoCheck(lam, "nonzero", bool(image), f"{len(image)} terms"))
        base = image.coefficient(base_matching(n))
        signs = base_coefficient_contributors(lam)
        out.append(IsoCheck(lam, "base_coefficient_positive", base > 0, f"coefficient {base}"))
        out.append(IsoCheck(
            lam, "base_contributors_all_positive",
            all(s == 1 for s in signs) and len(signs) == base,
            f"{len(signs)} contributing column permutations",
        ))
        v = module.vector(image)
        hits = [mu for mu in partitions_of(size) if module.isotypic_projection(mu, v).any()]
        out.append(IsoCheck(lam, "isotypic", hits == [lam], f"nonzero projections at {hits}"))
        # The full projector reproduces v exactly: sum over mu of dim/N! * P_mu v = v.
        recon = sum(dim_specht(mu) * module.isotypic_projection(mu, v) for mu in hits)
        out.append(IsoCheck(lam, "projection_reproduces", bool((recon == factorial(size) * v).all())))
    total = sum(dim_specht(lam) for lam in evens)
    out.append(IsoCheck((), "dimension_identity", total == double_factorial(size - 1),
                        f"{total} vs {double_factorial(size - 1)}"))
    return out
