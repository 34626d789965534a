from .common import (
    Configuration,
    IllegalMove,
    NoConflict,
    PlayerState,
    SchedulerModel,
    Step,
    Trace,
)
from .game import (
    apply_move,
    canonical_pair,
    chair_of,
    conflict_pairs,
    conflicted,
    is_legal,
    is_safe,
    legal_moves,
    potential,
    replay,
    successors,
)
from .strategies import (
    CanonicalFirstStrategy,
    InteractiveStrategy,
    RandomStrategy,
    ScriptedStrategy,
    StopSimulation,
    Strategy,
    parse_move,
)
from .simulation import simulate
from .trace_format import format_trace, load_trace, parse_trace, save_trace
