"""Hosoya polynomials and distance-based indices of generalized Möbius ladders."""

from .closed_forms import hosoya_coeffs_closed, indices_closed
from .graph_core import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    bfs_distances,
    diameter,
    direct_indices,
    distance_matrix,
    harary_squared,
    hosoya_polynomial,
)
from .ladder import (
    LadderSpec,
    ParameterRangeError,
    assemble_block_distance_matrix,
    block_matrix,
    build_ladder,
)
from .polynomial import (
    HosoyaPolynomial,
    IndexReport,
    IndexSource,
    evaluate,
    harary,
    hyper_wiener,
    indices_from_polynomial,
    tsz,
    wiener,
)
from .verify import KNOWN_DISCREPANCIES, sweep, verify_all, verify_blocks, verify_hosoya, verify_indices

__version__ = "0.1.0"
