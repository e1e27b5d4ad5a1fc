"""Hom complexes of graphs, mod-2 cochains on their Z2-quotients, and coboundary certificates."""

from .certificate import (
    CertificateSchedule,
    TheoremReport,
    build_A,
    build_B,
    build_K,
    certificate_vertices,
    check_lemma,
    check_theorem,
    odd_cycle_complex,
    pullback_dual_cochain,
    w1_power_representative,
)
from .cochains import (
    Cochain,
    Orbit,
    OrbitCochain,
    OrbitSlice,
    coboundary,
    cochain_add,
    involution_image,
    orbit_coboundary,
    orbit_of,
    orbit_slice,
    quotient_map_q,
)
from .errors import FreeActionError, HomCertError, InvalidArgumentError, UnsupportedParametersError
from .gf2 import GF2Matrix, betti_mod2, coboundary_matrix, rank, solve
from .graphs import (
    Graph,
    Involution,
    complete_graph,
    cycle_graph,
    cycle_involution,
    edge_graph,
    edge_swap_involution,
)
from .hom import (
    Cell,
    ComplexSlice,
    HomComplex,
    cell_dim,
    cofacets,
    enumerate_cells,
    f_vector,
    facets,
    is_valid_cell,
)

__version__ = "0.1.0"
