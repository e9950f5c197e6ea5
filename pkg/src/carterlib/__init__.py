"""Classification of Carter diagrams of reduced reflection factorizations,
their comparison with quiver-mutation classes, and verification of the
diagram-encoded group presentations by coset enumeration.

Everything is exact: rational (or golden-field) linear algebra for roots,
permutations for group elements, integer matrices for quivers.
"""

from .diagrams import (
    CarterDiagram,
    abstract_diagram,
    all_cycles_even,
    canonical_form,
    chordless_cycles,
    connected_components,
    diagram_of,
    diagram_type,
    is_cyclically_orientable,
    is_isomorphic,
)
from .factorizations import (
    ReflectionFactorization,
    coxeter_factorization,
    hurwitz_move,
    hurwitz_orbit,
    is_quasi_coxeter,
    is_reduced,
    product,
    reflection_length,
)
from .families import (
    DiagramAtlas,
    enumerate_by_hurwitz,
    enumerate_by_subsets,
    find_quasi_coxeter_class_seeds,
    gen_kluitmann,
    gen_type_A,
    gen_type_B,
    gen_type_D,
)
from .presentations import (
    Presentation,
    presentation_of,
    relations_hold_in_group,
    todd_coxeter,
    verify_iso,
)
from .quivers import (
    Quiver,
    check_theorem1,
    dynkin_quiver,
    mutate,
    mutation_class,
    underlying_graph,
)
from .roots import (
    CapExceeded,
    RootSystem,
    WeylElement,
    build_root_system,
    cartan_pairing,
    classify_subsystem_type,
    compose,
    invert,
    is_linearly_independent,
    reflect,
    smallest_root_subsystem,
    subgroup_closure,
)

__all__ = [
    "CapExceeded",
    "CarterDiagram",
    "DiagramAtlas",
    "Presentation",
    "Quiver",
    "ReflectionFactorization",
    "RootSystem",
    "WeylElement",
    "abstract_diagram",
    "all_cycles_even",
    "build_root_system",
    "canonical_form",
    "cartan_pairing",
    "check_theorem1",
    "chordless_cycles",
    "classify_subsystem_type",
    "compose",
    "connected_components",
    "coxeter_factorization",
    "diagram_of",
    "diagram_type",
    "dynkin_quiver",
    "enumerate_by_hurwitz",
    "enumerate_by_subsets",
    "find_quasi_coxeter_class_seeds",
    "gen_kluitmann",
    "gen_type_A",
    "gen_type_B",
    "gen_type_D",
    "hurwitz_move",
    "hurwitz_orbit",
    "invert",
    "is_cyclically_orientable",
    "is_isomorphic",
    "is_linearly_independent",
    "is_quasi_coxeter",
    "is_reduced",
    "mutate",
    "mutation_class",
    "presentation_of",
    "product",
    "reflect",
    "reflection_length",
    "relations_hold_in_group",
    "smallest_root_subsystem",
    "subgroup_closure",
    "todd_coxeter",
    "underlying_graph",
    "verify_iso",
]

__version__ = "1.0.0"
