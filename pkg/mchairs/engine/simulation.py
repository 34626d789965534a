from typing import Optional, Sequence

from mchairs.utils import DEFAULT_MAX_STEPS
from mchairs.words import WordSystem
from .common import Configuration, IllegalMove, SchedulerModel, Trace
from .game import legal_moves
from .strategies import StopSimulation, Strategy


def simulate(system: WordSystem,
             subset: Optional[Sequence[int]],
             starts: Optional[Sequence[int]],
             strategy: Strategy,
             max_steps: int = DEFAULT_MAX_STEPS,
             model: SchedulerModel = SchedulerModel.IMMEDIATE) -> Trace:
    """Plays the game until a safe configuration, max_steps moves, or the strategy stops.

    params:
      system: Word system the players draw their words from.
      subset: Indices of the words in play. All words when None.
      starts: Start offset of every player on its word. Zeros when None.
      strategy: Scheduler policy choosing among the legal moves of the model.
      max_steps: Maximum number of scheduler moves.
      model: Scheduler model defining the legal moves.
    """
    configuration = Configuration.initial(system, starts, subset)
    trace = Trace(configuration, model)
    while len(trace) < max_steps:
        moves = legal_moves(configuration, model)
        if not moves:
            break
        try:
            moved = strategy.choose(configuration, moves)
        except StopSimulation:
            break
        if moved not in moves:
            raise IllegalMove(f'{strategy.name} chose an illegal move {sorted(i + 1 for i in moved)}')
        configuration = configuration.advance(moved)
        trace.append(moved, configuration)
    return trace
