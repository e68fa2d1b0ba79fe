"""Exact computations with the classified partition families of Z x Z."""

from .classify import (
    CandidateConstraint,
    OrbitCheck,
    ShapeVerdict,
    TensorCheck,
    TraditionVerdict,
    WedgeCheck,
    check_not_orbit_viii,
    check_not_tensor,
    check_not_tensor_viii,
    check_not_wedge,
    classify_shape,
    enumerate_b_candidates,
    filter_candidate,
    is_traditional,
    singleton_class_filter,
)
from .families import (
    INVERSION,
    Aut,
    Family,
    InfiniteOrbitError,
    apply_automorphism,
    aut_from_images,
    basic_set_containing,
    class_rep,
    enumerate_window,
    is_basic_set,
    orbit_generators,
    orbit_of,
    star_class,
    window_equal,
    window_points,
)
from .groupring import (
    IDENTITY,
    Gpt,
    Lattice,
    ParseError,
    RingElement,
    format_element,
    gadd,
    generated_lattice,
    gneg,
    gscale,
    lattice_contains,
    parse_element,
    simple_quantity,
)
from .verify import (
    CheckResult,
    ClosureViolation,
    Projection,
    ProjectionError,
    StructureRow,
    VerificationReport,
    detect_a_subgroups,
    merge_classes_membership,
    orbit_membership,
    project_to_b,
    split_class_membership,
    structure_constants,
    verify_family,
)

__version__ = "0.1.0"
