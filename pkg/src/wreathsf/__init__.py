"""Exact symmetric functions, tableaux and wreath-product character tables."""

from .cyclotomic import Cyclotomic, zeta
from .errors import *  # noqa: F401,F403
from .groups import GroupData, builtin, load_group, validate
from .lr import lr_coeff, lr_coeff_oracle, pieri, skew_schur_expand
from .partitions import (
    ColoredPartition,
    ColoredSkewShape,
    Partition,
    SkewShape,
    colored_partitions_of,
    conjugate,
    contains,
    dominance_leq,
    hook_product,
    partitions_of,
    skew_components,
    strip_type,
    z_value,
)
from .symfunc import (
    SymFunc,
    SymPolynomial,
    TransitionMatrix,
    e,
    gram_schmidt_schur,
    h,
    hall_inner,
    m,
    multiply,
    p,
    s,
    to_basis,
    transition,
)
from .tableaux import ColoredTableau, Tableau, enumerate_ssyt, is_lattice, kostka, validate_ssyt, word
from .wreath import (
    CharacterTable,
    ClassFunction,
    WreathSymFunc,
    big_Z,
    character,
    character_table,
    dimension,
    frobenius_ch,
    power_sum_char,
    power_sum_class,
    sesqui_inner,
    wreath_schur,
    wreath_skew_schur,
)

__version__ = "0.1.0"
