"""Exact bookkeeping for genus-one standard versus reduced Gromov-Witten invariants
of complete intersections in projective space.

Submodules:

* :mod:`redgw.ring` truncated graded rings over the rationals
* :mod:`redgw.bundles` Chern and Segre classes, twists, projective completions
* :mod:`redgw.trees` weighted rooted trees, advancing, strata
* :mod:`redgw.charts` local chart equations and branch labels
* :mod:`redgw.audit` dimension audit of the rational-part strata
* :mod:`redgw.comparison` the standard-minus-reduced coefficient
* :mod:`redgw.lines` line counts via Schubert calculus
"""

from .audit import AuditReport, ScopeError, rank_table, stratum_dim, vanishing_verdicts
from .bundles import (
    BundleError,
    BundleExpr,
    ProjectiveCompletion,
    dual,
    euler_of_twist,
    euler_top,
    from_roots,
    line_bundle,
    pushforward_proj,
    segre,
    total_segre,
    trivial,
    twist_by_line,
    whitney_sum,
)
from .charts import ChartAtlas, build_atlas, cosection_expr
from .comparison import (
    ComparisonInput,
    ComparisonReport,
    coefficient_closed,
    coefficient_symbolic,
    compare,
    comparison,
    golden_intermediates,
    raw_coefficient,
    sign_factor,
)
from .lines import DimensionMismatch, catalan, line_count, sigma1_power_degree
from .ring import (
    GradedClass,
    RingMismatchError,
    RingPresentation,
    format_class,
    parse_class,
    simple_ring,
)
from .trees import (
    AdvancingSequence,
    Stratum,
    TreeError,
    WeightedTree,
    advancing_sequences,
    all_strata,
    assign_strata,
    enumerate_S,
    enumerate_strata,
    random_tree,
    run_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "advancing_sequences",
    "AdvancingSequence",
    "all_strata",
    "assign_strata",
    "AuditReport",
    "build_atlas",
    "BundleError",
    "BundleExpr",
    "catalan",
    "ChartAtlas",
    "coefficient_closed",
    "coefficient_symbolic",
    "compare",
    "comparison",
    "ComparisonInput",
    "ComparisonReport",
    "cosection_expr",
    "DimensionMismatch",
    "dual",
    "enumerate_S",
    "enumerate_strata",
    "euler_of_twist",
    "euler_top",
    "format_class",
    "from_roots",
    "golden_intermediates",
    "GradedClass",
    "line_bundle",
    "line_count",
    "parse_class",
    "ProjectiveCompletion",
    "pushforward_proj",
    "random_tree",
    "rank_table",
    "raw_coefficient",
    "RingMismatchError",
    "RingPresentation",
    "run_sequence",
    "ScopeError",
    "segre",
    "sigma1_power_degree",
    "sign_factor",
    "simple_ring",
    "Stratum",
    "stratum_dim",
    "total_segre",
    "TreeError",
    "trivial",
    "twist_by_line",
    "vanishing_verdicts",
    "WeightedTree",
    "whitney_sum",
]
