from .base import (
    AlphabetError,
    EmptyWordError,
    NotPresent,
    Word,
    WordLike,
    WordSystem,
    as_word,
)
from .algebra import (
    concat,
    concat_all,
    interleave,
    is_full,
    is_permutation,
    power,
    prefix_of_power,
    relabel,
    restrict,
    rotate,
    rotate_to_first,
    shift,
)
from .codec import (
    ParseError,
    load_system,
    parse_system,
    save_system,
    serialize_system,
)
