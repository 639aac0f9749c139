"""Exact character theory of finite solvable groups.

Core building blocks: permutation groups with index-based arithmetic,
subgroup lattices, exact character tables over cyclotomic fields,
chief-factor modules over prime fields, and the complete / regular
intersection calculus, together with a verification harness exposed as
a FastAPI service and a thin CLI.
"""

from .catalog import BUNDLED, dump, run_catalog
from .characters import (
    Character,
    ClassFunction,
    character_table,
    induce,
    inner_product,
    is_primitive,
    is_quasi_primitive,
    is_strongly_irreducible,
    kernel,
    center_Z,
    n_chi,
    norm_squared,
    permutation_character,
    restrict,
    table_cache,
)
from .checks import THEOREM_IDS, Report, verify
from .cyclotomic import Cyc
from .fpmod import FpModule, dual_module, is_isomorphic, is_simple, section_module, x_module
from .groups import by_name, load_group
from .intersections import (
    complete_intersections,
    is_complete_family,
    is_regular,
    maximal_zero_free,
    zero_free_intersections,
)
from .lattice import (
    ChiefSeries,
    Subgroup,
    SubgroupClass,
    all_subgroup_classes,
    chief_series,
    core,
    cover_or_avoid,
    is_p_solvable,
    is_solvable,
    maximal_subgroup_classes,
    normal_subgroups,
)
from .perm import (
    Group,
    Permutation,
    centralizer,
    conjugacy_classes,
    group_from_generators,
    p_part,
    quotient_group,
)

__version__ = "0.1.0"
