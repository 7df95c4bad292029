"""Exact mod-ell reduction combinatorics for representations of GL_n over a
p-adic field: segment parameters, level-index enumeration, constituents of
Steinberg and mixed elliptic reductions, extension graphs of induction
lattices, and the Young-diagram calculus of the classical limit."""

from .base_arith import (
    CuspidalDatum,
    DatumError,
    DigitDecomposition,
    digit_decompose,
    is_banal,
    order_mod,
)
from .classical_limit import (
    CharacterTable,
    RegimeError,
    UnsupportedPatternError,
    YoungDiagram,
    borel_induction_decomposition,
    character_oracle,
    elliptic_reduction_classical,
    hook_dimension,
    induct_diagrams,
    induction_multiplicity,
    partitions,
)
from .grothendieck import GrothElement, ProductLabel, TensorLabel, formal_product, tensor, tensor_pair
from .involution import (
    InvolutionUndefined,
    involute_single_segment,
    superunipotent_constituent_steinberg,
)
from .levels import (
    LevelIndex,
    cuspidal_level_of_product,
    enumerate_digit_set,
    enumerate_index_set,
    index_width,
    level_of_steinberg,
    s_rho,
)
from .reduction import (
    ConstituentLabel,
    EllipticLabel,
    ExtensionGraph,
    constituents_disjoint,
    euler_check,
    extension_graph_lubin_tate,
    extension_graph_steinberg,
    induced_length_two,
    jacquet_closure_sides,
    jacquet_constituent,
    jacquet_lt_last_block,
    jacquet_steinberg,
    lubin_tate_constituents,
    lubin_tate_label,
    reduce_elliptic,
    semisimple_lattice_graph,
    speh_label,
    speh_never_equals_I0,
    steinberg_constituents,
    steinberg_label,
)
from .zelevinski import (
    Line,
    LinePoint,
    ParameterError,
    Segment,
    ZParameter,
    boxtimes,
    cuspidal_line,
    is_cycle,
    segment,
    speh_parameter,
    steinberg_parameter,
    to_restricted,
    to_supercuspidal,
    twist,
    unit_line,
)

__version__ = "0.1.0"
