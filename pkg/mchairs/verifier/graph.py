"""Explicit configuration graph over every position vector of a team.

States are flattened position vectors. Edges are the legal scheduler moves of one
model, generated for all states at once with numpy.
"""

import itertools
import math
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from mchairs.engine import Configuration, PlayerState, SchedulerModel, Trace
from mchairs.utils import BudgetExceeded, get_budget
from mchairs.words import EmptyWordError, WordSystem


def moved_sets(n: int, model: SchedulerModel) -> List[FrozenSet[int]]:
    """Every moved set the model can ever use for a team of n players."""
    if model == SchedulerModel.IMMEDIATE:
        return [frozenset(c) for size in range(1, n + 1)
                for c in itertools.combinations(range(n), size)]
    return ([frozenset([i]) for i in range(n)] +
            [frozenset(p) for p in itertools.combinations(range(n), 2)])


def moves_per_state(n: int, model: SchedulerModel) -> int:
    if model == SchedulerModel.IMMEDIATE:
        return 2 ** n - 1
    if model == SchedulerModel.PAIRWISE:
        return n + n * (n - 1) // 2
    return 3


def estimate_transitions(lengths: Sequence[int], model: SchedulerModel) -> int:
    return math.prod(lengths) * moves_per_state(len(lengths), model)


class ConfigurationGraph:

    def __init__(self,
                 system: WordSystem,
                 model: SchedulerModel,
                 word_indices: Optional[Sequence[int]] = None,
                 budget: Optional[int] = None) -> None:
        if word_indices is None:
            word_indices = range(len(system))
        self.system = system
        self.model = model
        self.word_indices = tuple(word_indices)
        words = [system[i] for i in self.word_indices]
        for i, word in zip(self.word_indices, words):
            if word.is_empty:
                raise EmptyWordError(f'Word {i + 1} is empty')
        self.n = len(words)
        self.lengths = tuple(len(w) for w in words)
        self.num_states = math.prod(self.lengths)
        budget = get_budget(budget)
        estimate = estimate_transitions(self.lengths, model)
        if estimate > budget:
            raise BudgetExceeded(f'Configuration graph over word lengths {list(self.lengths)}',
                                 estimate, budget)
        strides = [1] * self.n
        for i in range(self.n - 2, -1, -1):
            strides[i] = strides[i + 1] * self.lengths[i + 1]
        self.strides = tuple(strides)
        self.moved_sets = moved_sets(self.n, model)
        self._member = np.array([[i in moved for i in range(self.n)] for moved in self.moved_sets],
                                dtype=np.int64).reshape(len(self.moved_sets), self.n)
        self._build(words)
        self._heights = None
        self._forward = None

    def _build(self, words) -> None:
        index = np.arange(self.num_states, dtype=np.int64)
        positions = [(index // self.strides[i]) % self.lengths[i] for i in range(self.n)]
        chairs = [words[i].array[positions[i]] for i in range(self.n)]
        same = {}
        conflicted = [np.zeros(self.num_states, dtype=bool) for _ in range(self.n)]
        for i, j in itertools.combinations(range(self.n), 2):
            same[(i, j)] = chairs[i] == chairs[j]
            conflicted[i] |= same[(i, j)]
            conflicted[j] |= same[(i, j)]
        self.unsafe = np.zeros(self.num_states, dtype=bool)
        for mask in conflicted:
            self.unsafe |= mask

        if self.model == SchedulerModel.CANONICAL:
            canonical = np.full(self.num_states, -1, dtype=np.int64)
            pairs = list(itertools.combinations(range(self.n), 2))
            for k, pair in enumerate(pairs):
                canonical[same[pair] & (canonical < 0)] = k

        sources, targets, moves = [], [], []
        for k, moved in enumerate(self.moved_sets):
            members = sorted(moved)
            if self.model == SchedulerModel.IMMEDIATE:
                legal = np.ones(self.num_states, dtype=bool)
                for i in members:
                    legal &= conflicted[i]
            elif self.model == SchedulerModel.PAIRWISE:
                legal = conflicted[members[0]] if len(members) == 1 else same[tuple(members)]
            else:
                if len(members) == 1:
                    ids = [p for p, pair in enumerate(pairs) if members[0] in pair]
                    legal = np.isin(canonical, ids)
                else:
                    legal = canonical == pairs.index(tuple(members))
            src = np.flatnonzero(legal)
            dst = src.copy()
            for i in members:
                wrap = positions[i][src] == self.lengths[i] - 1
                dst += np.where(wrap, -(self.lengths[i] - 1) * self.strides[i], self.strides[i])
            sources.append(src)
            targets.append(dst)
            moves.append(np.full(src.size, k, dtype=np.int64))
        self.src = np.concatenate(sources) if sources else np.zeros(0, dtype=np.int64)
        self.dst = np.concatenate(targets) if targets else np.zeros(0, dtype=np.int64)
        self.move = np.concatenate(moves) if moves else np.zeros(0, dtype=np.int64)

    @property
    def num_edges(self) -> int:
        return int(self.src.size)

    def index_of(self, positions: Sequence[int]) -> int:
        return int(sum((int(p) % length) * stride
                       for p, length, stride in zip(positions, self.lengths, self.strides)))

    def positions_of(self, index: int) -> Tuple[int, ...]:
        return tuple((int(index) // stride) % length for stride, length in zip(self.strides, self.lengths))

    def configuration_of(self, index: int) -> Configuration:
        players = tuple(PlayerState(w, p, 0) for w, p in zip(self.word_indices, self.positions_of(index)))
        return Configuration(self.system, players)

    def forward(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Successor lists in CSR form: (pointers, targets, moved-set ids)."""
        if self._forward is None:
            order = np.argsort(self.src, kind='stable')
            pointers = np.zeros(self.num_states + 1, dtype=np.int64)
            pointers[1:] = np.cumsum(np.bincount(self.src, minlength=self.num_states))
            self._forward = (pointers, self.dst[order], self.move[order])
        return self._forward

    def heights(self) -> np.ndarray:
        """Longest number of moves from every state to a safe one; -1 for states that reach a cycle.

        Sinks are peeled round by round, so the round in which a state loses its last
        successor is exactly its longest-path height.
        """
        if self._heights is not None:
            return self._heights
        size = self.num_states
        remaining = np.bincount(self.src, minlength=size).astype(np.int64)
        order = np.argsort(self.dst, kind='stable')
        predecessors = self.src[order]
        pointers = np.zeros(size + 1, dtype=np.int64)
        pointers[1:] = np.cumsum(np.bincount(self.dst, minlength=size))
        heights = np.full(size, -1, dtype=np.int64)
        frontier = np.flatnonzero(remaining == 0)
        height = 0
        while frontier.size:
            heights[frontier] = height
            begins = pointers[frontier]
            counts = pointers[frontier + 1] - begins
            total = int(counts.sum())
            if total == 0:
                break
            bases = np.cumsum(counts) - counts
            offsets = np.repeat(begins - bases, counts) + np.arange(total, dtype=np.int64)
            touched, hits = np.unique(predecessors[offsets], return_counts=True)
            remaining[touched] -= hits
            frontier = touched[remaining[touched] == 0]
            height += 1
        self._heights = heights
        return heights

    @property
    def is_acyclic(self) -> bool:
        return bool((self.heights() >= 0).all())

    def max_run(self) -> int:
        return int(self.heights().max()) if self.num_states else 0

    def find_cycle(self, start: Optional[int] = None) -> Optional[List[Tuple[int, int]]]:
        """A cycle as (state, moved-set id) edges, walking states that never peel."""
        heights = self.heights()
        stuck = np.flatnonzero(heights < 0)
        if not stuck.size:
            return None
        node = int(stuck[0]) if start is None else int(start)
        assert heights[node] < 0
        pointers, targets, move_ids = self.forward()
        seen = {}
        walk = []
        while node not in seen:
            seen[node] = len(walk)
            for e in range(pointers[node], pointers[node + 1]):
                if heights[targets[e]] < 0:
                    walk.append((node, int(move_ids[e])))
                    node = int(targets[e])
                    break
            else:
                raise AssertionError('Cyclic state without a cyclic successor')
        return walk[seen[node]:]

    def trace_of(self, start: int, edges: Sequence[Tuple[int, int]]) -> Trace:
        """Replays moved-set ids from a state as a trace of fresh configurations."""
        configuration = self.configuration_of(start)
        trace = Trace(configuration, self.model)
        for _, move_id in edges:
            moved = self.moved_sets[move_id]
            configuration = configuration.advance(moved)
            trace.append(moved, configuration)
        return trace

    def player_progress(self) -> np.ndarray:
        """Most moves each player can be forced to make from every state, shape (n, states).

        Requires an acyclic graph. Edges are relaxed in order of the height of their source.
        """
        heights = self.heights()
        assert (heights >= 0).all(), 'Progress is unbounded on a cyclic graph'
        best = np.zeros((self.n, self.num_states), dtype=np.int64)
        if not self.num_edges:
            return best
        edge_heights = heights[self.src]
        order = np.argsort(edge_heights, kind='stable')
        sorted_heights = edge_heights[order]
        src, dst = self.src[order], self.dst[order]
        increments = self._member[self.move[order]]
        bounds = np.searchsorted(sorted_heights, np.arange(1, int(sorted_heights.max()) + 2))
        for h in range(1, int(sorted_heights.max()) + 1):
            lo, hi = bounds[h - 1], bounds[h]
            if lo == hi:
                continue
            for i in range(self.n):
                np.maximum.at(best[i], src[lo:hi], best[i][dst[lo:hi]] + increments[lo:hi, i])
        return best

    def progress_path(self, best: np.ndarray, player: int, start: int, goal: int) -> List[Tuple[int, int]]:
        """Edges from start along which player makes goal moves, following the progress table."""
        pointers, targets, move_ids = self.forward()
        node, done, path = start, 0, []
        member = self._member
        while done < goal:
            for e in range(pointers[node], pointers[node + 1]):
                inc = int(member[move_ids[e], player])
                if best[player][targets[e]] + inc == best[player][node]:
                    path.append((node, int(move_ids[e])))
                    node = int(targets[e])
                    done += inc
                    break
            else:
                raise AssertionError('Progress table is inconsistent')
        return path
