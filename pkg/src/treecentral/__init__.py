"""Center, centroid and subtree core of binary trees.

Library for the three central parts of binary trees (all degrees 1 or 3),
the extremal families that pull them apart, exact subtree counting with the
growth constant of complete rgood trees, exhaustive enumeration at desk
scale, and a verification engine for the extremal-distance claims.
"""

from .central import (
    CentralParts,
    EdgeSideReport,
    branch_weights,
    center,
    center_by_stripping,
    central_parts,
    centroid,
    edge_side_report,
    subtree_core,
)
from .counting import (
    BigCount,
    K_DIGITS_CAP,
    KEstimate,
    SubtreeProfile,
    complete_rgood_recurrence,
    estimate_k,
    k_floor_power,
    pair_subtree_count,
    r_threshold,
    rgood_root_count_bounds,
    rooted_subtree_count,
    side_subtree_count,
    subtree_profile,
    two_per_level_closed_form,
)
from .enumeration import (
    FREE_CAP,
    ROOTED_CAP,
    EnumerationStream,
    count_rooted_binary,
    enumerate_free_binary,
    enumerate_rooted_binary,
)
from .families import (
    CrgSpec,
    LabeledFamilyTree,
    crg_family,
    make_caterpillar,
    make_crg,
    make_rgood,
    make_two_per_level,
)
from .trees import (
    BinaryCheck,
    CanonicalCode,
    EdgeListError,
    RootedView,
    Tree,
    canonical_code,
    distances_from,
    eccentricities,
    format_edge_list,
    parse_edge_list,
    root_at,
    rooted_code,
    set_distance,
    strip_center,
    tree_from_edges,
    validate_binary,
    validate_rooted_binary,
)
from .verification import (
    CheckResult,
    ExtremalRecord,
    VerificationReport,
    c_cd_bound,
    c_cd_witness_l,
    cd_sc_bound,
    crg_distance_table,
    verify_cd_sc_bound,
    verify_conjecture,
    verify_crg_structure,
)

__version__ = "0.1.0"
