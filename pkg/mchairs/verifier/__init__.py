from .graph import ConfigurationGraph, estimate_transitions, moved_sets
from .verdict import Cyclic, TerminalityReport, Verdict, Winner
from .solver import decide, duplicate_witness, is_terminal, max_run
from .transforms import (
    BoundViolated,
    EveryNReport,
    SubsetResult,
    extend,
    extension_length,
    lift_concat,
    lift_power,
    power_lift,
    verify_every_n,
)
