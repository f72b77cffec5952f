"""Level-by-level decomposition of Ind_H^{S_mn}(1) for the C and D families.

The recursion lifts the decomposition at level n-1 to the restriction of level
n (Pieri with m-1 boxes for C, m-1 single-box inductions for D) and then
solves for every nonnegative integer vector at level n that restricts to it
and contains the trivial module exactly once.  Uniqueness of that solution is
checked at every step, never assumed; ambiguities are adjudicated by the
character oracle.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import AmbiguousRecursion, NoSolution, PatternTooLarge, SolutionCapExceeded
from .objects import DEFAULT_ORACLE_CAP, Family, permutation_character_wreath
from .partitions import (
    MultiplicityVector,
    Partition,
    PartitionPattern,
    instantiate_pattern,
    is_even,
    partitions_of,
)
from .young import _removals, iterated_vector, pieri_vector, restrict_vector

METHODS = ("recursion", "oracle", "closed_form")
DEFAULT_SOLUTION_CAP = 16
CACHE_ENV = "WREATHIND_CACHE_DIR"

# A level-n- restriction is just a multiplicity vector over partitions of mn - 1.
RestrictedLevel = MultiplicityVector


@dataclass
class LevelResult:
    family: Family
    n: int
    multiplicities: MultiplicityVector
    method: str
    uniqueness: str = "not_applicable"
    solutions: list[MultiplicityVector] = field(default_factory=list)
    step_uniqueness: dict[int, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "family": self.family.kind,
            "m": self.family.m,
            "n": self.n,
            "method": self.method,
            "uniqueness": self.uniqueness,
            "multiplicities": self.multiplicities.to_json(),
        }
        if self.uniqueness == "ambiguous":
            out["solutions"] = [s.to_json() for s in self.solutions]
        if self.step_uniqueness:
            out["steps"] = {str(k): v for k, v in sorted(self.step_uniqueness.items())}
        return out

    @classmethod
    def from_json(cls, data: dict) -> LevelResult:
        fam = Family(data["family"], data["m"], data["n"])
        size = fam.size
        return cls(
            family=fam,
            n=data["n"],
            multiplicities=MultiplicityVector.from_json(size, data["multiplicities"]),
            method=data["method"],
            uniqueness=data["uniqueness"],
            solutions=[MultiplicityVector.from_json(size, s) for s in data.get("solutions", [])],
            step_uniqueness={int(k): v for k, v in data.get("steps", {}).items()},
        )


def closed_form_m2(n: int) -> LevelResult:
    """Ind_{B_n}^{S_2n}(1): every even partition of 2n once."""
    if n < 1:
        raise ValueError("n must be positive")
    vec = MultiplicityVector(2 * n, {lam: 1 for lam in partitions_of(2 * n) if is_even(lam)})
    return LevelResult(Family("C", 2, n), n, vec, "closed_form")


def restricted_target(prev: LevelResult | MultiplicityVector, family: Family | None = None) -> RestrictedLevel:
    """What the next level must restrict to, given the decomposition at the previous level."""
    if isinstance(prev, LevelResult):
        family = family or prev.family
        prev = prev.multiplicities
    if family is None:
        raise ValueError("family is required when passing a bare vector")
    if family.kind == "C":
        return pieri_vector(prev, family.m - 1)
    return iterated_vector(prev, family.m - 1)


def solve_level(
    target: RestrictedLevel,
    size: int,
    cap: int = DEFAULT_SOLUTION_CAP,
    order: list[Partition] | None = None,
) -> list[MultiplicityVector]:
    """All nonnegative a over partitions of ``size`` with a(size) = 1 and restriction ``target``.

    Depth-first search over the partitions in ``order`` (descending
    lexicographic by default).  A partition that is the last unprocessed
    parent of some child has its value forced by that child's residual;
    otherwise its value ranges up to the smallest residual among its
    children.  Raises NoSolution if the search space is empty and
    SolutionCapExceeded if more than ``cap`` solutions exist.
    """
    if target.level_size != size - 1:
        raise ValueError(f"target lives on S_{target.level_size}, expected S_{size - 1}")
    shapes = list(order) if order is not None else partitions_of(size)
    if sorted(shapes) != sorted(partitions_of(size)):
        raise ValueError("order must be a permutation of the partitions of size")
    lower = partitions_of(size - 1)
    low_index = {mu: j for j, mu in enumerate(lower)}
    residual = [target.get(mu) for mu in lower]

    children = [[low_index[mu] for mu in _removals(lam)] for lam in shapes]
    last_parent = [-1] * len(lower)
    for i, kids in enumerate(children):
        for j in kids:
            last_parent[j] = i
    forced = [[] for _ in shapes]
    for j, i in enumerate(last_parent):
        forced[i].append(j)
    trivial = shapes.index((size,))

    def candidates(i):
        ub = min(residual[j] for j in children[i])
        if forced[i]:
            v = residual[forced[i][0]]
            if v > ub or any(residual[j] != v for j in forced[i]):
                return []
            options = [v]
        else:
            options = list(range(ub + 1))
        if i == trivial:
            return [1] if 1 in options else []
        return options

    def assign(i, v):
        delta = v - values[i]
        for j in children[i]:
            residual[j] -= delta
        values[i] = v

    solutions: list[list[int]] = []
    values = [0] * len(shapes)
    stack = [candidates(0)]
    while stack:
        i = len(stack) - 1
        if not stack[i]:
            assign(i, 0)
            stack.pop()
            continue
        assign(i, stack[i].pop())
        if i + 1 < len(shapes):
            stack.append(candidates(i + 1))
        elif not any(residual):
            solutions.append(list(values))
            if len(solutions) > cap:
                raise SolutionCapExceeded(f"more than {cap} solutions at size {size}")

    if not solutions:
        raise NoSolution(f"no nonnegative decomposition of size {size} restricts to the target")
    out = [MultiplicityVector(size, dict(zip(shapes, vals))) for vals in solutions]
    return sorted(out, key=lambda v: [(k, v[k]) for k in v], reverse=True)


def base_level(family: Family) -> LevelResult:
    """Level 1: C_{m,1} = S_m gives the trivial module; D_{m,1} = C_m is read off the oracle."""
    fam = family.at(1)
    if fam.kind == "C":
        vec = MultiplicityVector(fam.m, {(fam.m,): 1})
        return LevelResult(fam, 1, vec, "recursion", "unique", [vec], {1: "unique"})
    vec = permutation_character_wreath(fam)
    return LevelResult(fam, 1, vec, "recursion", "not_applicable", step_uniqueness={1: "oracle"})


_memory: dict[tuple, LevelResult] = {}


def _cache_path(cache_dir, family: Family, n: int, method: str) -> Path:
    return Path(cache_dir) / f"{family.kind}_m{family.m}_n{n}_{method}.json"


def _load(cache_dir, family, n, method):
    key = (family.kind, family.m, n, method)
    if key in _memory:
        if cache_dir and not _cache_path(cache_dir, family, n, method).exists():
            _store(cache_dir, _memory[key])
        return _memory[key]
    if cache_dir:
        path = _cache_path(cache_dir, family, n, method)
        if path.exists():
            res = LevelResult.from_json(json.loads(path.read_text()))
            _memory[key] = res
            return res
    return None


def _store(cache_dir, res: LevelResult):
    _memory[(res.family.kind, res.family.m, res.n, res.method)] = res
    if cache_dir:
        path = _cache_path(cache_dir, res.family, res.n, res.method)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".{os.getpid()}.tmp")
        tmp.write_text(json.dumps(res.to_json()))
        tmp.replace(path)


def clear_memory_cache():
    _memory.clear()


def decompose(
    family: Family,
    n: int | None = None,
    method: str = "recursion",
    *,
    solution_cap: int = DEFAULT_SOLUTION_CAP,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    cache_dir: str | os.PathLike | None = None,
    strict: bool = True,
) -> LevelResult:
    """Decompose Ind_{H}^{S_mn}(1) for ``family`` at level ``n`` by the chosen method.

    With ``strict`` (the default) an ambiguous recursion raises
    AmbiguousRecursion carrying the oracle-adjudicated result; otherwise that
    result is returned with ``uniqueness == "ambiguous"``.
    """
    method = method.replace("-", "_")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    n = family.n if n is None else n
    family = family.at(n)
    cached = _load(cache_dir, family, n, method)
    if cached is not None:
        if strict and cached.uniqueness == "ambiguous":
            raise AmbiguousRecursion(cached)
        return cached

    if method == "closed_form":
        if family.m != 2:
            raise ValueError("the closed form applies only to m = 2")
        res = closed_form_m2(n)
        res.family = family
    elif method == "oracle":
        res = LevelResult(family, n, permutation_character_wreath(family, oracle_cap), "oracle")
    else:
        res = _recurse(family, n, solution_cap, oracle_cap, cache_dir)
    _store(cache_dir, res)
    if strict and res.uniqueness == "ambiguous":
        raise AmbiguousRecursion(res)
    return res


def _recurse(family: Family, n: int, cap: int, oracle_cap: int, cache_dir) -> LevelResult:
    if n == 1:
        return base_level(family)
    prev = decompose(family, n - 1, "recursion", solution_cap=cap, oracle_cap=oracle_cap,
                     cache_dir=cache_dir, strict=False)
    target = restricted_target(prev)
    sols = solve_level(target, family.size, cap=cap)
    steps = dict(prev.step_uniqueness)
    if len(sols) == 1:
        steps[n] = "unique"
        return LevelResult(family, n, sols[0], "recursion", "unique", sols, steps)
    steps[n] = "ambiguous"
    oracle = permutation_character_wreath(family, oracle_cap)
    if oracle not in sols:
        raise NoSolution(f"oracle decomposition of {family} is not among the recursion's solutions")
    return LevelResult(family, n, oracle, "recursion", "ambiguous", sols, steps)


def mult_of_pattern(
    family: Family, pattern: PartitionPattern | str, n: int, level: str = "full", **kwargs
) -> int:
    """Multiplicity of the pattern's instance at level n (``full``) or level n- (``minus``)."""
    if isinstance(pattern, str):
        pattern = PartitionPattern.parse(pattern)
    res = decompose(family, n, "recursion", **kwargs)
    if level == "full":
        vec, size = res.multiplicities, family.m * n
    elif level == "minus":
        prev = decompose(family, n - 1, "recursion", **kwargs) if n > 1 else None
        vec = restricted_target(prev) if prev else restrict_vector(res.multiplicities)
        size = family.m * n - 1
    else:
        raise ValueError("level must be 'full' or 'minus'")
    try:
        return vec.get(instantiate_pattern(pattern, size))
    except PatternTooLarge:
        return 0


# Patterns whose multiplicities at level n and n- are pinned down for C_{3,n}, n >= 5.
SINGLE_PATTERNS = ("0", "2", "3", "4", "22", "5", "41", "32")
ABSENT_PATTERNS = ("1", "21", "31", "221", "311", "411")
MINUS_TABLE = {
    "0": 1, "1": 1, "11": 0, "2": 2, "21": 1, "3": 2, "111": 0, "4": 3, "31": 2,
    "22": 2, "211": 0, "1111": 0, "5": 3, "41": 3, "32": 3, "311": 0, "221": 1,
}


@dataclass
class Check:
    name: str
    n: int
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": self.name, "n": self.n, "passed": self.passed, "detail": self.detail}


def verify_section4(n_max: int = 7, n_min: int = 5, **kwargs) -> list[Check]:
    """Check the C_{3,n} multiplicity structure for every n_min <= n <= n_max."""
    if n_max < 5:
        raise ValueError("n_max must be at least 5")
    fam = Family("C", 3, 1)
    checks: list[Check] = []
    for n in range(n_min, n_max + 1):
        def mult(p, level="full"):
            return mult_of_pattern(fam, p, n, level, **kwargs)

        ones = {p: mult(p) for p in SINGLE_PATTERNS}
        checks.append(Check("single_patterns", n, all(v == 1 for v in ones.values()), str(ones)))
        zeros = {p: mult(p) for p in ABSENT_PATTERNS}
        checks.append(Check("absent_patterns", n, all(v == 0 for v in zeros.values()), str(zeros)))
        if n >= 6:
            minus = {p: mult(p, "minus") for p in MINUS_TABLE}
            checks.append(Check("minus_table", n, minus == MINUS_TABLE, str(minus)))
        s = mult("51") + mult("42")
        checks.append(Check("51+42 at n", n, s == 2, str(s)))
        if n >= 6:
            s_minus = mult("51", "minus") + mult("42", "minus")
            checks.append(Check("51+42 at n-", n, s_minus == 9, str(s_minus)))
        res = decompose(fam, n, "recursion", **kwargs)
        top = res.multiplicities.max_multiplicity()
        repeated = [list(k) for k, v in res.multiplicities.items() if v >= 2]
        checks.append(Check("has_multiplicity", n, top >= 2, f"max {top} at {repeated}"))
        checks.append(Check("recursion_unique", n, res.uniqueness == "unique",
                            str(res.step_uniqueness)))
    return checks


def first_level_with_multiplicity(family: Family, n_max: int, **kwargs) -> int | None:
    for n in range(1, n_max + 1):
        if not decompose(family, n, **kwargs).multiplicities.is_multiplicity_free():
            return n
    return None
