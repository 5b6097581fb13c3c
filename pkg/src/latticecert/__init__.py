"""Exact bounds, witnesses, and certificates for lattice points of
rational polyhedra, plus a violator-space solver for l-best integer
programs.  All arithmetic is exact rational; nothing here ever rounds."""

from .bounds import BoundReport, c_report, c_upper, floor_identity
from .certificates import (
    Certificate,
    CertificateSearchFailed,
    InconclusiveUnbounded,
    Invalid,
    Valid,
    check_certificate,
    greedy_certificate,
    minimum_certificate,
)
from .enumeration import (
    CapExceeded,
    Exact,
    ExactCount,
    Inconclusive,
    InfiniteWitnessed,
    LatticePointSet,
    MoreThan,
    UnboundedInconclusive,
    UnboundedWithWitness,
    count_points,
    enumerate_points,
    interior_integer_points,
    iter_lattice_points,
)
from .geometry import (
    DimensionMismatch,
    IntegerBox,
    LinearInequality,
    Polyhedron,
    PostconditionError,
    PreconditionError,
    Relation,
    evaluate,
    format_rational,
    parse_rational,
    polyhedron_from_json,
    polyhedron_to_json,
)
from .lbest import (
    Basis,
    BoxEngine,
    ILPInstance,
    LBestTuple,
    TieBreakCollision,
    TieBreakObjective,
    clarkson_basis,
    ilp_from_json,
    l_best,
    solve_small_ip,
    tie_break,
    tiebreak_injective,
    violates,
    violator_axiom_check,
)
from .lemma_lab import (
    MainLemmaResult,
    MainLemmaStatus,
    PointConfiguration,
    check_main_lemma,
    extra_lattice_points,
    has_shp,
    parity_midpoint,
    random_shp_configuration,
    split_by_point,
    split_by_two_points,
)
from .simplex import (
    BoxBounded,
    BoxInfeasible,
    BoxUnbounded,
    Infeasible,
    Optimal,
    Unbounded,
    bounding_box,
    hull_membership,
    lp_solve,
)
from .witness import (
    VerificationReport,
    WitnessPolytope,
    WitnessTag,
    build_witness,
    classify_feasible,
    norm_check,
    predicted_tight_point,
    scaled_rows,
    verify,
)

__version__ = "0.1.0"
