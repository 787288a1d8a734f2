"""framedsurf: framings of surfaces as winding number functions, Dehn twist
actions, Arf invariants, strata component classification, generating
configurations, and one-cylinder flat geometry."""

from .core import (
    ABSOLUTE,
    RELATIVE,
    AbsoluteFraming,
    FramedSurface,
    HomologyClass,
    PartitionKappa,
    SurfaceType,
    intersection,
    new_framed_surface,
)
from .engine import (
    EngineState,
    FractionalTwist,
    Push,
    Twist,
    apply_fractional_twist,
    apply_push,
    apply_twist,
    apply_word,
    curve_arc_sum,
    orbit_wn_values,
    prong_rotation_image,
    stabilizes,
    verify_relation,
)
from .arf import (
    ARF_ONE_PLUS,
    SeparatingCurveType,
    are_equivalent,
    arf,
    arf1,
    arf_additive_split,
    maximal_chain_arf,
    septwist_type_in_admissible,
)
from .config import (
    Configuration,
    Crossing,
    build_genset,
    classify_sidedness,
    complementary_regions,
    config_arf,
    intersection_graph,
    is_E_arboreal_spanning,
    is_h_assemblage_type_E,
)
from .strata import (
    ComponentDescriptor,
    ProngGroup,
    absolute_generating_descriptor,
    boissy_components,
    components,
    cover_component_counts,
    framed_to_absolute_surjective,
    pr_prime,
    prototype_arf,
    quotient_pr_prime,
    shear_generation_obstruction,
    stratum_partitions,
)
from .flat import (
    FlatPath,
    OneCylinderSurface,
    blowup_boundary_wn,
    cone_loop,
    from_permutation,
    path_from_vectors,
    saddle_arc_wns,
    shear_twist,
    turning_wn,
)

__version__ = "0.1.0"
