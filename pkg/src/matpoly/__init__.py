"""Exact polynomial invariants of matroids and graphs.

Characteristic, chromatic, flow, Tutte, Whitney rank and dichromatic
polynomials over exact integer/rational arithmetic, the duality
identities connecting them, fast closed forms for complete graphs and
projective geometries, and brute-force oracles to check it all against.
"""

from .algebra import (
    BiPoly,
    IntPoly,
    PolySeries,
    eval_bipoly,
    exact_div_monomial,
    falling_factorial,
    poly_mul,
    poly_pow,
    series_exp,
    series_log,
)
from .duality import (
    IdentityKind,
    VerifyReport,
    chi_dual_via_finaltwo,
    flow_via_connected_partitions,
    verify_identity,
    zeta_q,
)
from .errors import (
    BadConstantTerm,
    BadParams,
    BudgetExceeded,
    MatpolyError,
    NonIntegral,
    NotDivisible,
    TooLarge,
)
from .flowkn import (
    flow_kn_egf,
    flow_kn_partitions,
    flow_kn_tutte,
    leading_binomial_check,
    partition_classes,
    partition_count,
    partitions,
    set_partition_count,
)
from .graphs import (
    MultiGraph,
    complete_graph,
    component_count,
    components,
    connected_partitions,
    graph_from_json,
    graph_to_json,
    quotient,
    subgraph,
)
from .invariants import (
    InvariantResult,
    chi_delcon,
    chi_dual_from_tutte,
    chi_from_tutte,
    chi_subset,
    chromatic_poly,
    dichromatic_Q,
    flow_poly,
    tutte,
    tutte_uniform_closed,
    whitney_R,
)
from .matroids import (
    Matroid,
    TableMatroid,
    circuits,
    flats_of_rank,
    make_graphic,
    make_pg,
    make_uniform,
)
from .oracles import (
    chi_via_broken_circuits,
    count_colorings,
    count_nz_flows,
    min_cocircuit_size,
)
from .projective import chi_pg, chi_pg_dual, gaussian_binomial, points_count, tutte_pg

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
