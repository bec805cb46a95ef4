"""factorlab: fractional [a,b]-covered / (a,b,k)-critical covered graph toolkit."""

from .covered import (
    CoveredVerdict,
    CriticalVerdict,
    CriticalWitness,
    FactorParams,
    LemmaWitness,
    determine_y,
    epsilon,
    is_fractional_ab_covered,
    is_fractional_abk_critical_covered,
    theta,
)
from .graphs import (
    Graph,
    Graph6Error,
    complete,
    deg_avoiding,
    delete_vertices,
    disjoint_clique_union,
    edges_between,
    enumerate_graphs,
    enumerate_graphs_min_degree,
    is_independent,
    join,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)
from .invariants import (
    InvariantReport,
    compute_invariants,
    connectivity_at_least,
    independence_number,
    min_degree,
    vertex_connectivity,
)
from .lp_oracle import (
    FractionalAssignment,
    assignment_satisfies,
    feasible_fractional_factor,
    oracle_is_covered,
    oracle_is_critical_covered,
)
from .theorems import (
    BoundReport,
    CertificateError,
    SharpnessCertificate,
    VerificationReport,
    build_remark1,
    build_remark2,
    check_theorem2_condition,
    check_theorem3_hypothesis,
    corollary1_bound,
    theorem1_bound,
    theorem3_bound,
    validate_certificate,
    verify_theorem3_on_stream,
)

__version__ = "0.1.0"
