"""Constructive scheduler for m = 2n - 2 chairs.

The number of monochromatic facets stays even and exactly one of them is auxiliary,
so some non-auxiliary monochromatic facet always exists. It is an unsafe reachable
configuration; subdividing its conflict edge grows the subdivision tree one level
deeper below it. The root path of a deep facet is a long schedule.
"""

import collections
import itertools
import os
from typing import Dict, List, Optional, Sequence, Tuple

from mchairs.engine import Configuration, PlayerState, SchedulerModel, Trace, replay
from mchairs.utils import DEFAULT_FACET_BUDGET, BudgetExceeded, logging_config
from mchairs.verifier import Verdict, decide
from mchairs.words import WordSystem, rotate_to_first
from .complex import Facet, default_pairing, facet_key, initial_psm
from .subdivision import SubdivisionTree, subdivide_edge, unsafe_pairs

Reduction = collections.namedtuple('Reduction', ['words', 'pairing', 'owners', 'offsets'])
ChoiceResult = collections.namedtuple('ChoiceResult', ['word_indices', 'verdict'])


class Adversary:

    def __init__(self,
                 words: WordSystem,
                 pairing: Optional[Sequence[Tuple[int, int]]] = None,
                 t: int = 10,
                 facet_budget: Optional[int] = None,
                 logging_file: Optional[str] = None) -> None:
        if t < 1:
            raise ValueError(f'Schedule length must be positive, got {t}')
        self._t = t
        self._facet_budget = facet_budget or DEFAULT_FACET_BUDGET
        self.complex, self.delta, self.proper_coloring = initial_psm(words, pairing)
        self.tree = SubdivisionTree(self.complex.facets)
        self._mono = {f for f in self.complex.facets if self._is_target(f)}
        name = 'adversary' if logging_file is None else f'adversary.{os.path.basename(logging_file)}'
        self._logger = logging_config(logging_file, detail=False, name=name)
        self.stats: List[Dict[str, int]] = []

    def _is_target(self, facet: Facet) -> bool:
        return not self.complex.is_auxiliary(facet) and self.complex.is_monochromatic(facet)

    def run(self) -> Trace:
        step = 0
        while True:
            assert self._mono, 'No non-auxiliary monochromatic facet left'
            facet = min(self._mono, key=facet_key)
            node = self.tree.leaves[facet]
            if node.depth >= self._t + 1:
                break
            if len(self.complex) >= self._facet_budget:
                raise BudgetExceeded(f'Facet count with selected depth {node.depth} of {self._t + 1}',
                                     len(self.complex), self._facet_budget)
            pairs = unsafe_pairs(facet)
            assert pairs, 'Monochromatic facet without a conflict'
            split = subdivide_edge(self.complex, *pairs[0])
            self.tree.apply(split)
            for old, children in split.children.items():
                self._mono.discard(old)
                self._mono.update(child for _, child in children if self._is_target(child))
            step += 1
            self.stats.append({'step': step,
                               'facets': len(self.complex),
                               'split_facets': len(split.children),
                               'mono': len(self._mono),
                               'depth': node.depth + 1,
                               'max_depth': self.tree.max_depth})
            self._logger.debug('Step %d: %d facets, %d split, %d monochromatic, depth %d, max depth %d',
                               *self.stats[-1].values())
        trace = self.trace_of(facet)
        replay(trace, SchedulerModel.PAIRWISE)
        self._logger.info('Schedule of %d moves after %d subdivisions, %d facets',
                          len(trace), step, len(self.complex))
        return trace

    def trace_of(self, facet: Facet) -> Trace:
        nodes = self.tree.path(facet)
        trace = Trace(self.complex.configuration_of(nodes[0].facet), SchedulerModel.PAIRWISE)
        for node in nodes[1:]:
            trace.append(node.moved, self.complex.configuration_of(node.facet))
        return trace


def adversary(words: WordSystem,
              pairing: Optional[Sequence[Tuple[int, int]]] = None,
              t: int = 10,
              facet_budget: Optional[int] = None,
              logging_file: Optional[str] = None) -> Trace:
    """Schedule of at least t moves from first letters, every configuration unsafe.

    params:
      words: 2n - 2 words over [2n - 2] where only the first two share a first letter.
      pairing: Pairs of 0-based word indices covering words 3..2n-2. Consecutive by default.
      t: Number of moves.
      facet_budget: Largest complex to build before raising BudgetExceeded.
      logging_file: File for the per-step complex statistics.
    """
    return Adversary(words, pairing, t, facet_budget, logging_file).run()


def reduce_team_strategy(taus: WordSystem) -> Reduction:
    """Rotates n words over [2n - 2] into the 2n - 2 words the adversary works on.

    The first two words are rotated to their first chair 1. Word i >= 3 (1-based)
    yields the pair of rotations starting at chairs 2i - 4 and 2i - 3.
    """
    n = len(taus)
    if n < 2 or taus.m != 2 * n - 2:
        raise ValueError(f'Expected n >= 2 words over [2n - 2], got {n} words over [{taus.m}]')
    owners, chairs = [0, 1], [1, 1]
    for k in range(2, n):
        owners += [k, k]
        chairs += [2 * k - 2, 2 * k - 1]
    words = tuple(rotate_to_first(taus[k], c) for k, c in zip(owners, chairs))
    offsets = tuple(taus[k].letters.index(c) for k, c in zip(owners, chairs))
    return Reduction(WordSystem(taus.m, words), default_pairing(len(words)), tuple(owners), offsets)


def lift_choice(taus: WordSystem, reduction: Reduction, trace: Trace) -> Trace:
    """Replays a schedule on the reduced words as a schedule on the original team."""
    players = tuple(PlayerState(reduction.owners[p.word_index], reduction.offsets[p.word_index], p.moves)
                    for p in trace.initial.players)
    lifted = Trace(Configuration(taus, players), trace.model)
    for step in trace.steps:
        lifted.append(step.moved, lifted.final.advance(step.moved))
        assert lifted.final.chairs == step.configuration.chairs
    return lifted


def search_losing_choice(words: WordSystem,
                         pairing: Optional[Sequence[Tuple[int, int]]] = None,
                         model: SchedulerModel = SchedulerModel.PAIRWISE,
                         budget: Optional[int] = None) -> List[ChoiceResult]:
    """Decides, from first letters, every team of the first two words and one word per pair."""
    pairing = list(pairing) if pairing is not None else default_pairing(len(words))
    results = []
    for choice in itertools.product(*pairing):
        word_indices = (0, 1) + tuple(choice)
        verdict: Verdict = decide(words, model, starts=[0] * len(word_indices),
                                  word_indices=word_indices, budget=budget)
        results.append(ChoiceResult(word_indices, verdict))
    return results
