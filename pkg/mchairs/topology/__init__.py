from .complex import (
    BadInitials,
    ConfigurationComplex,
    Pseudomanifold,
    TwoColoring,
    Vertex,
    default_pairing,
    facet_key,
    initial_psm,
    mono_count,
    partition_chairs,
    rainbow_count,
    validate_psm,
)
from .subdivision import (
    NotAnEdgeConflict,
    Split,
    SubdivisionTree,
    random_subdivide,
    subdivide,
    subdivide_edge,
    unsafe_pairs,
)
from .adversary import (
    Adversary,
    ChoiceResult,
    Reduction,
    adversary,
    lift_choice,
    reduce_team_strategy,
    search_losing_choice,
)
