"""Counting conjugacy classes of involutions in Coxeter groups.

The package splits into a diagram layer (`diagram`, `classify`), the
graph-theoretic counting machinery (`oddgraph`), closed-form results
for special families (`formulas`), and a brute-force enumeration
oracle (`oracle`) used to cross-check everything on small groups.
"""

from .classify import (
    NON_SPHERICAL,
    IrreducibleType,
    TypeDecomposition,
    classify_irreducible,
    coxeter_number,
    decompose,
    group_order,
    has_central_longest,
    is_spherical,
)
from .diagram import (
    INFINITY,
    CoxeterMatrix,
    DiagramError,
    components,
    disjoint_union,
    induced,
    parse_edge_list,
    parse_matrix,
    parse_name,
)
from .formulas import (
    cc2_A,
    cc2_C,
    cc2_affine_A,
    cc2_affine_C,
    cc2_odd_circle,
    cc2_racg,
    cc2_triangle,
    ccm_direct_product,
    ccm_free_product,
    read_presentation_graph,
)
from .oddgraph import (
    Bounds,
    ClassInfo,
    EnumerationBudgetError,
    InvolutionClassReport,
    OddGraph,
    bounds,
    cc2,
    export_dot,
    gamma_k,
    longest_element_word,
    odd_adjacent,
    omega_k,
)
from .oracle import (
    CapExceededError,
    GroupTable,
    InvolutionClass,
    OrbitIntegrityError,
    ReflectionRep,
    available_kernels,
    enumerate_group,
    involution_classes,
    kernel_name,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "CoxeterMatrix",
    "DiagramError",
    "components",
    "disjoint_union",
    "induced",
    "parse_edge_list",
    "parse_matrix",
    "parse_name",
    "NON_SPHERICAL",
    "IrreducibleType",
    "TypeDecomposition",
    "classify_irreducible",
    "coxeter_number",
    "decompose",
    "group_order",
    "has_central_longest",
    "is_spherical",
    "Bounds",
    "ClassInfo",
    "EnumerationBudgetError",
    "InvolutionClassReport",
    "OddGraph",
    "bounds",
    "cc2",
    "export_dot",
    "gamma_k",
    "longest_element_word",
    "odd_adjacent",
    "omega_k",
    "cc2_A",
    "cc2_C",
    "cc2_affine_A",
    "cc2_affine_C",
    "cc2_odd_circle",
    "cc2_racg",
    "cc2_triangle",
    "ccm_direct_product",
    "ccm_free_product",
    "read_presentation_graph",
    "CapExceededError",
    "GroupTable",
    "InvolutionClass",
    "OrbitIntegrityError",
    "ReflectionRep",
    "available_kernels",
    "enumerate_group",
    "involution_classes",
    "kernel_name",
    "__version__",
]
