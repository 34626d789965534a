from .recursive import RecursivePair, build_recursive, recursive_lengths, restriction_families
from .field import (
    Field,
    FieldPermutationFamily,
    Unsupported,
    admissible_polynomials,
    block_points,
    ff_permutations,
)
from .lcs import (
    LcsCertificate,
    check_lcs_certificate,
    cyclic_lcs,
    cyclic_lcs_exhaustive,
    lcs_length,
    pairwise_cyclic_lcs,
)
from .random_systems import random_perms, random_words, search_permutation_system
from .potential import (
    MonteCarloDrop,
    PotentialParams,
    critical_ratio,
    drop_bound,
    min_drop_bound,
    optimal_x,
    sample_potential_drop,
)
from .fixed_start import first_letter_system
