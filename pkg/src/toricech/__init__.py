"""Combinatorial ECH data of four-dimensional toric domains and obstruction
checks for anchored symplectic embeddings."""

from .geometry import (
    CONCAVE,
    CONVEX,
    Direction,
    Flavor,
    Point,
    ToricRegion,
    axis_caps,
    ball,
    bracket,
    concave_triangle,
    contains_point,
    ellipsoid,
    polydisk,
    region_contains,
    region_contains_strictly,
    slope_minus_one_support,
    support,
    support_dominates,
)
from .lattice import (
    EdgeSpec,
    PathGenerator,
    action,
    empty_generator,
    encode_generator,
    enumerate_by_action,
    enumerate_by_index,
    extents,
    index_concave,
    index_convex,
    is_extremal,
    j0_concave,
    j0_convex,
    lattice_count_concave,
    lattice_count_convex,
    parse_generator,
    path_generator,
)
from .obstruct import (
    ObstructionReport,
    WitnessConstructionError,
    WitnessPath,
    check_2anchored,
    check_convex1,
    check_cross_anchor,
    check_inclusion_anchor,
    check_polydisk_ball,
    folding_embedding_exists,
    min_action_bound,
    min_action_report,
    witness_eta,
    witness_violations,
)
from .orbits import (
    OrbitLabel,
    OrbitSet,
    c_tau,
    cz_total,
    ech_index,
    iota,
    iota_inv,
    j0_index,
    linking,
    linking_degrees,
    orbit_set,
    q_tau,
)

__version__ = "0.1.0"
