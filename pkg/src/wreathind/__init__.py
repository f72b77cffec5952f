"""Exact decompositions of Ind_H^{S_mn}(1) for the hyperoctahedral group and its
wreath-product generalizations, with independent character-theoretic oracles."""

from .characters import (
    ClassFunction,
    class_size,
    decompose_class_function,
    inner_product,
    irreducible_character,
    mn_char,
)
from .levels import (
    LevelResult,
    closed_form_m2,
    decompose,
    mult_of_pattern,
    restricted_target,
    solve_level,
    verify_section4,
)
from .errors import (
    AmbiguousRecursion,
    EmptyPartition,
    NoSolution,
    NotACharacter,
    OddRow,
    PatternTooLarge,
    SizeMismatch,
    SolutionCapExceeded,
    TooLarge,
    WreathIndError,
)
from .matching import (
    FormalMatchingSum,
    Tabloid,
    equivariance_check,
    f_row,
    f_tabloid,
    polytabloid_image,
    verify_iso,
)
from .objects import (
    CycleDecomposition,
    Family,
    HyperMatching,
    Permutation,
    act,
    enumerate_objects,
    permutation_character_enum,
    permutation_character_wreath,
    subgroup_order,
    wreath_class_distribution,
)
from .partitions import (
    MultiplicityVector,
    PartitionPattern,
    conjugate,
    dim_specht,
    instantiate_pattern,
    is_even,
    partitions_of,
)
from .young import (
    add_horizontal_strip,
    add_one_box,
    iterated_add,
    iterated_vector,
    pieri_vector,
    remove_one_box,
    restrict_vector,
)

__version__ = "0.1.0"
