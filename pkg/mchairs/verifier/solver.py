"""Deciding the winner, bounding run lengths and checking terminality."""

import itertools
from typing import Optional, Sequence, Tuple

import numpy as np

from mchairs.engine import Configuration, IllegalMove, SchedulerModel, Trace, replay
from mchairs.words import WordSystem
from .graph import ConfigurationGraph
from .verdict import Cyclic, TerminalityReport, Verdict, Winner

_WHITE, _GRAY, _BLACK = 0, 1, 2


def _word_indices(system: WordSystem, word_indices: Optional[Sequence[int]]) -> Tuple[int, ...]:
    return tuple(range(len(system))) if word_indices is None else tuple(word_indices)


def duplicate_witness(system: WordSystem,
                      model: SchedulerModel = SchedulerModel.IMMEDIATE,
                      word_indices: Optional[Sequence[int]] = None) -> Optional[Trace]:
    """Lock-step cycle of two identical words, found without graph search.

    Both copies start on their first letter and move together for one lap. Under the
    canonical model the pair must stay canonical along the lap, which is checked by replay.
    """
    word_indices = _word_indices(system, word_indices)
    for a, b in itertools.combinations(range(len(word_indices)), 2):
        word = system[word_indices[a]]
        if word.is_empty or word != system[word_indices[b]]:
            continue
        configuration = Configuration.initial(system, [0] * len(word_indices), word_indices)
        trace = Trace(configuration, model)
        moved = frozenset([a, b])
        for _ in range(len(word)):
            configuration = configuration.advance(moved)
            trace.append(moved, configuration)
        try:
            replay(trace)
        except IllegalMove:
            continue
        return trace
    return None


def _search_from(graph: ConfigurationGraph, start: int):
    """Iterative three-color depth-first search of the states reachable from start.

    Returns (longest run, None) when acyclic, or (None, (prefix edges, cycle edges)).
    """
    pointers, targets, move_ids = graph.forward()
    color = bytearray(graph.num_states)
    longest = {}
    stack = [[start, int(pointers[start])]]
    stack_index = {start: 0}
    color[start] = _GRAY
    while stack:
        frame = stack[-1]
        node, edge = frame
        if edge < pointers[node + 1]:
            frame[1] += 1
            target = int(targets[edge])
            if color[target] == _WHITE:
                color[target] = _GRAY
                stack_index[target] = len(stack)
                stack.append([target, int(pointers[target])])
            elif color[target] == _GRAY:
                taken = [(f[0], int(move_ids[f[1] - 1])) for f in stack]
                entry = stack_index[target]
                return None, (taken[:entry], taken[entry:])
        else:
            color[node] = _BLACK
            stack.pop()
            del stack_index[node]
            best = 0
            for e in range(pointers[node], pointers[node + 1]):
                best = max(best, longest[int(targets[e])] + 1)
            longest[node] = best
    return longest[start], None


def decide(system: WordSystem,
           model: SchedulerModel = SchedulerModel.CANONICAL,
           starts: Optional[Sequence[int]] = None,
           word_indices: Optional[Sequence[int]] = None,
           budget: Optional[int] = None) -> Verdict:
    """Decides who wins the game on a team of words.

    params:
      system: Word system holding the words of the team.
      model: Scheduler model.
      starts: Fixed start offsets. When None the scheduler chooses the starts and every
        position vector is searched.
      word_indices: Indices of the team's words. All words when None.
      budget: Maximum number of graph transitions.
    """
    word_indices = _word_indices(system, word_indices)
    if starts is None:
        witness = duplicate_witness(system, model, word_indices)
        if witness is not None:
            return Verdict(Winner.SCHEDULER, model, word_indices, cycle=witness)
    graph = ConfigurationGraph(system, model, word_indices, budget)
    if starts is None:
        heights = graph.heights()
        if (heights < 0).any():
            edges = graph.find_cycle()
            return Verdict(Winner.SCHEDULER, model, word_indices,
                           cycle=graph.trace_of(edges[0][0], edges),
                           states=graph.num_states)
        top = int(np.argmax(heights))
        return Verdict(Winner.TEAM, model, word_indices,
                       max_run=int(heights[top]),
                       longest_from=graph.positions_of(top),
                       states=graph.num_states)
    starts = tuple(int(s) for s in starts)
    if len(starts) != graph.n:
        raise ValueError(f'Expected {graph.n} starts, got {len(starts)}')
    start = graph.index_of(starts)
    longest, cycle = _search_from(graph, start)
    if cycle is None:
        return Verdict(Winner.TEAM, model, word_indices, starts=starts, max_run=longest,
                       longest_from=graph.positions_of(start), states=graph.num_states)
    prefix_edges, cycle_edges = cycle
    prefix = Trace(Configuration.initial(system, starts, word_indices), model)
    for _, move_id in prefix_edges:
        moved = graph.moved_sets[move_id]
        prefix.append(moved, prefix.final.advance(moved))
    return Verdict(Winner.SCHEDULER, model, word_indices, starts=starts,
                   cycle=graph.trace_of(cycle_edges[0][0], cycle_edges),
                   prefix=prefix,
                   states=graph.num_states)


def max_run(system: WordSystem,
            model: SchedulerModel = SchedulerModel.CANONICAL,
            starts: Optional[Sequence[int]] = None,
            word_indices: Optional[Sequence[int]] = None,
            budget: Optional[int] = None) -> int:
    """Longest schedule before a safe configuration. Raises Cyclic when the scheduler wins."""
    verdict = decide(system, model, starts, word_indices, budget)
    if verdict.winner == Winner.SCHEDULER:
        raise Cyclic(f'Scheduler forces an infinite run on words {[i + 1 for i in verdict.word_indices]}')
    return verdict.max_run


def is_terminal(system: WordSystem,
                model: SchedulerModel = SchedulerModel.IMMEDIATE,
                word_indices: Optional[Sequence[int]] = None,
                budget: Optional[int] = None) -> TerminalityReport:
    """Checks that no schedule, from any starts, moves a player through its whole word.

    On an acyclic graph the most moves each player can be forced to make is a longest
    path weighted by that player's moves. A cycle returns every moved player to its
    position, so one lap already completes a word.
    """
    word_indices = _word_indices(system, word_indices)
    graph = ConfigurationGraph(system, model, word_indices, budget)
    if not graph.is_acyclic:
        edges = graph.find_cycle()
        witness = graph.trace_of(edges[0][0], edges)
        moved = set().union(*(step.moved for step in witness.steps))
        return TerminalityReport(False, model, witness, min(moved), graph.num_states)
    best = graph.player_progress()
    for player in range(graph.n):
        goal = graph.lengths[player]
        top = int(np.argmax(best[player]))
        if best[player][top] >= goal:
            edges = graph.progress_path(best, player, top, goal)
            return TerminalityReport(False, model, graph.trace_of(top, edges), player, graph.num_states)
    return TerminalityReport(True, model, states=graph.num_states)
