"""Exact tree counts (spanning-tree numbers) of power graphs of finite groups."""

from .classify import (
    ClassificationEntry,
    classify_kappa_below_125,
    epo_check_and_bound,
    is_star_kappa_one,
    prime_support_bound,
    sylow_lower_bound,
    verify_a5_recognition,
)
from .closedform import (
    DivisorGraph,
    DivisorProfile,
    divisor_graph,
    divisor_profile,
    kappa_cyclic,
    kappa_cyclic_expansion,
    kappa_cyclic_reduced,
    kappa_dihedral,
    kappa_elementary_abelian,
    kappa_epo,
    kappa_pq,
    kappa_quaternion_pow2,
    kappa_quaternion_reduced,
    kappa_semidirect_pq,
)
from .groups import (
    FiniteGroup,
    GroupSpec,
    build,
    count_cyclic_subgroups,
    direct_product,
    max_order,
    spectrum,
)
from .powergraph import (
    PowerGraph,
    clique_number,
    degree_in_cyclic,
    is_complete,
    power_graph,
    reduced_power_graph,
    to_dot,
    to_json,
)
from .specparse import parse_group_spec
from .treecount import (
    MultiGraph,
    TreeNumber,
    block_decomposition_kappa,
    deletion_contraction_kappa,
    enumerate_spanning_trees,
    exact_integer_determinant,
    temperley_kappa,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationEntry",
    "DivisorGraph",
    "DivisorProfile",
    "FiniteGroup",
    "GroupSpec",
    "MultiGraph",
    "PowerGraph",
    "TreeNumber",
    "block_decomposition_kappa",
    "build",
    "classify_kappa_below_125",
    "clique_number",
    "count_cyclic_subgroups",
    "degree_in_cyclic",
    "deletion_contraction_kappa",
    "direct_product",
    "divisor_graph",
    "divisor_profile",
    "enumerate_spanning_trees",
    "epo_check_and_bound",
    "exact_integer_determinant",
    "is_complete",
    "is_star_kappa_one",
    "kappa_cyclic",
    "kappa_cyclic_expansion",
    "kappa_cyclic_reduced",
    "kappa_dihedral",
    "kappa_elementary_abelian",
    "kappa_epo",
    "kappa_pq",
    "kappa_quaternion_pow2",
    "kappa_quaternion_reduced",
    "kappa_semidirect_pq",
    "max_order",
    "parse_group_spec",
    "power_graph",
    "prime_support_bound",
    "reduced_power_graph",
    "spectrum",
    "sylow_lower_bound",
    "temperley_kappa",
    "to_dot",
    "to_json",
    "verify_a5_recognition",
]
