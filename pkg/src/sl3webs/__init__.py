"""Two roads to the sl3 web basis: convex hulls in the A2 building and growth diagrams."""

from .building import (
    OMEGA1,
    OMEGA2,
    ZERO_WEIGHT,
    LatticeClass,
    adjacent,
    class_from_generators,
    class_from_json,
    distance,
    dual_weight,
    lattice_dual,
    lattice_from_json,
    lattice_join,
    lattice_meet,
    lattice_to_json,
    random_step,
    step_to_line,
    step_to_plane,
    steps,
)
from .cli import main, run
from .errors import (
    InvalidChain,
    LocalRuleViolation,
    MalformedDiskoid,
    NoDoubleElbow,
    NotAPartitionAfterSort,
    NotAPath,
    NotVerticalStrip,
    PreconditionViolated,
    RankDeficient,
    RealizationFailed,
    SingularMatrix,
)
from .growth import (
    GrowthDiagram,
    complete_from_row,
    diagram_from_json,
    dif,
    dim_inv,
    enumerate_diagrams,
    parse_word,
    promotion,
    row_to_tableau,
)
from .hulls import (
    SimplicialComplex2,
    conv,
    conv_pair,
    induced_complex,
    maxconv,
    maxconv_pair,
    minconv,
    minconv_pair,
    path_hull_fastpath,
)
from .series import (
    DEFAULT_PRIME,
    GF,
    QQ,
    CoefficientField,
    LaurentMatrix,
    LaurentScalar,
    hermite_over_O,
    smith_exponents,
    unit_inverse_trunc,
)
from .synthesis import (
    MoveLog,
    RealizedPolygon,
    basis_webs,
    cross_validate,
    diskoid_from_diagram,
    elbow_move,
    realize_polygon,
    reduce_to_base,
    remove_sharp,
    remove_uturn,
)
from .webs import (
    Diskoid,
    Web,
    WebCombination,
    boundary_word,
    canonical_encoding,
    diskoid_from_json,
    diskoid_to_json,
    dualize,
    empty_web,
    is_cat0,
    is_nonelliptic,
    iso,
    reduce_web,
    rotate,
    web_from_edges,
    web_from_json,
    web_to_json,
)

__all__ = [
    "CoefficientField",
    "DEFAULT_PRIME",
    "Diskoid",
    "GF",
    "GrowthDiagram",
    "InvalidChain",
    "LatticeClass",
    "LaurentMatrix",
    "LaurentScalar",
    "LocalRuleViolation",
    "MalformedDiskoid",
    "MoveLog",
    "NoDoubleElbow",
    "NotAPartitionAfterSort",
    "NotAPath",
    "NotVerticalStrip",
    "OMEGA1",
    "OMEGA2",
    "PreconditionViolated",
    "QQ",
    "RankDeficient",
    "RealizationFailed",
    "RealizedPolygon",
    "SimplicialComplex2",
    "SingularMatrix",
    "Web",
    "WebCombination",
    "ZERO_WEIGHT",
    "adjacent",
    "basis_webs",
    "boundary_word",
    "canonical_encoding",
    "class_from_generators",
    "class_from_json",
    "complete_from_row",
    "conv",
    "conv_pair",
    "cross_validate",
    "diagram_from_json",
    "dif",
    "dim_inv",
    "diskoid_from_diagram",
    "diskoid_from_json",
    "diskoid_to_json",
    "distance",
    "dual_weight",
    "dualize",
    "elbow_move",
    "empty_web",
    "enumerate_diagrams",
    "hermite_over_O",
    "induced_complex",
    "is_cat0",
    "is_nonelliptic",
    "iso",
    "lattice_dual",
    "lattice_from_json",
    "lattice_join",
    "lattice_meet",
    "lattice_to_json",
    "main",
    "maxconv",
    "maxconv_pair",
    "minconv",
    "minconv_pair",
    "parse_word",
    "path_hull_fastpath",
    "promotion",
    "random_step",
    "realize_polygon",
    "reduce_to_base",
    "reduce_web",
    "remove_sharp",
    "remove_uturn",
    "rotate",
    "row_to_tableau",
    "run",
    "smith_exponents",
    "step_to_line",
    "step_to_plane",
    "steps",
    "unit_inverse_trunc",
    "web_from_edges",
    "web_from_json",
    "web_to_json",
]
