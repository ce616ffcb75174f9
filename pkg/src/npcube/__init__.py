"""Finite non-positively curved cube complexes: gluing presentations, links
and the flag condition, hyperplanes and specialness, Salvetti complexes,
Sageev duals of wall spaces, and small-cancellation checks."""

from .constructions import (
    PermutationAssignment,
    SimplicialGraph,
    bouquet,
    circle,
    klein_bottle,
    one_vertex_cover,
    product,
    salvetti,
    standard_cube,
    subdivide,
    surface_complex,
    torus_complex,
)
from .core import (
    CubeComplex,
    GluingPresentation,
    LinkComplex,
    SignedPermutation,
    compile_presentation,
    connected_components,
    euler_characteristic,
    link,
    skeleton,
)
from .curvature import is_flag, is_npc, is_simplicial
from .errors import *  # noqa: F401,F403
from .groups import (
    GroupSpec,
    Presentation,
    cayley_ball,
    delta_estimate,
    pieces,
    raag_normal_form,
    small_cancellation,
    symmetrize,
)
from .hyperplanes import (
    carrier,
    complement_components,
    crossing_graph,
    hyperplanes,
    is_special,
    pathologies,
    special_to_salvetti,
)
from .maps import CubicalMap, is_covering, is_local_isometry, validate
from .metric import EdgePath, distance, geodesic_by_hyperplanes, is_convex, is_geodesic
from .walls import WallSpace, cross, dual, induced_automorphism, principal_vertex, separation_count

__version__ = "0.1.0"
