"""Pseudomanifolds whose facets are configurations of a team.

Every vertex is the state of one player (or one of the two immobile auxiliaries).
Player vertices are paired into n classes; a facet picks one vertex of every class.
"""

import collections
import itertools
from dataclasses import dataclass
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Hashable,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from mchairs.engine import Configuration, PlayerState
from mchairs.utils import MchairsError
from mchairs.words import WordSystem

Facet = FrozenSet[Hashable]
Coloring = Union[Mapping[Hashable, Hashable], Callable[[Hashable], Hashable]]


class BadInitials(MchairsError):
    """Words violate the first-letter requirements of the lower-bound setting."""


@dataclass(frozen=True)
class Vertex:
    player: int
    word_index: int
    steps: int
    serial: int
    chair: int
    auxiliary: bool = False

    @property
    def key(self) -> Tuple[int, int, int]:
        return self.player, self.steps, self.serial

    def __repr__(self):
        if self.auxiliary:
            return f'A{self.player + 1}'
        return f'P{self.player + 1}[w{self.word_index + 1}+{self.steps}@{self.chair}]'


class Pseudomanifold:
    """Pure simplicial complex given by its facets, with a vertex-to-facets index."""

    def __init__(self, facets: Iterable[Iterable[Hashable]] = (),
                 class_of: Optional[Callable[[Hashable], Hashable]] = None) -> None:
        self.facets: Set[Facet] = set()
        self._vertex_facets: Dict[Hashable, Set[Facet]] = collections.defaultdict(set)
        self.class_of = class_of
        for facet in facets:
            self.add_facet(frozenset(facet))

    @property
    def dim(self) -> int:
        return len(next(iter(self.facets))) - 1 if self.facets else -1

    @property
    def vertices(self) -> Set[Hashable]:
        return {v for v, facets in self._vertex_facets.items() if facets}

    def add_facet(self, facet: Facet) -> None:
        self.facets.add(facet)
        for v in facet:
            self._vertex_facets[v].add(facet)

    def remove_facet(self, facet: Facet) -> None:
        self.facets.remove(facet)
        for v in facet:
            self._vertex_facets[v].discard(facet)

    def facets_with(self, *vertices: Hashable) -> Set[Facet]:
        sets = [self._vertex_facets.get(v, set()) for v in vertices]
        return set.intersection(*sets) if sets else set(self.facets)

    def __len__(self) -> int:
        return len(self.facets)


def _facets_of(X: Union[Pseudomanifold, Iterable[Iterable[Hashable]]]) -> List[Facet]:
    if isinstance(X, Pseudomanifold):
        return list(X.facets)
    return [frozenset(f) for f in X]


def _color_function(coloring: Coloring) -> Callable[[Hashable], Hashable]:
    return coloring.__getitem__ if isinstance(coloring, Mapping) else coloring


def validate_psm(X: Union[Pseudomanifold, Iterable[Iterable[Hashable]]]) -> bool:
    """Pure, every codimension-one face in exactly two facets, and one vertex per class."""
    facets = _facets_of(X)
    if not facets:
        return False
    size = len(facets[0])
    if any(len(f) != size for f in facets):
        return False
    faces = collections.Counter()
    for facet in facets:
        for v in facet:
            faces[facet - {v}] += 1
    if any(count != 2 for count in faces.values()):
        return False
    class_of = X.class_of if isinstance(X, Pseudomanifold) else None
    if class_of is not None:
        classes = {class_of(v) for f in facets for v in f}
        if len(classes) != size:
            return False
        if any(len({class_of(v) for v in f}) != size for f in facets):
            return False
    return True


def rainbow_count(X, coloring: Coloring) -> int:
    color = _color_function(coloring)
    return sum(1 for f in _facets_of(X) if len({color(v) for v in f}) == len(f))


def mono_count(X, coloring: Coloring) -> int:
    color = _color_function(coloring)
    return sum(1 for f in _facets_of(X) if len({color(v) for v in f}) == 1)


@dataclass(frozen=True)
class TwoColoring:
    """Balanced split of the chairs; a vertex takes the class of its chair, auxiliaries 0."""
    zero_chairs: FrozenSet[int]
    one_chairs: FrozenSet[int]
    aux_chair: int

    def chair_color(self, chair: int) -> int:
        return 1 if chair in self.one_chairs else 0

    def __call__(self, vertex: Vertex) -> int:
        if vertex.auxiliary:
            return 0
        return self.chair_color(vertex.chair)


def default_pairing(count: int) -> List[Tuple[int, int]]:
    return [(k, k + 1) for k in range(2, count, 2)]


def _check_setting(words: WordSystem, pairing: Sequence[Tuple[int, int]]) -> int:
    count = len(words)
    if count < 2 or count % 2:
        raise BadInitials(f'Expected an even number of at least two words, got {count}')
    n = (count + 2) // 2
    if words.m != 2 * n - 2:
        raise BadInitials(f'Expected m = 2n - 2 = {2 * n - 2} chairs, got {words.m}')
    words.check_nonempty()
    paired = sorted(k for pair in pairing for k in pair)
    if len(pairing) != n - 2 or paired != list(range(2, count)):
        raise BadInitials(f'Pairing {pairing} does not split words 3..{count} into pairs')
    initials = [w[0] for w in words]
    if initials[0] != initials[1]:
        raise BadInitials('The first two words must start on the same chair')
    rest = initials[2:]
    if len(set(rest)) != len(rest) or initials[0] in rest:
        raise BadInitials('The only repeated first letter must be that of the first two words')
    return n


def partition_chairs(words: WordSystem, pairing: Optional[Sequence[Tuple[int, int]]] = None) -> TwoColoring:
    pairing = list(pairing) if pairing is not None else default_pairing(len(words))
    n = _check_setting(words, pairing)
    one = {words[0][0]}
    zero = set()
    for pair in pairing:
        zero.add(words[min(pair)][0])
        one.add(words[max(pair)][0])
    spare = []
    for chair in range(1, words.m + 1):
        if chair in one or chair in zero:
            continue
        if len(zero) < n - 1:
            zero.add(chair)
            spare.append(chair)
        else:
            one.add(chair)
    assert len(zero) == len(one) == n - 1 and spare
    return TwoColoring(frozenset(zero), frozenset(one), spare[0])


class ConfigurationComplex(Pseudomanifold):
    """Pseudomanifold over player states of a word system, classes given by players."""

    def __init__(self, words: WordSystem, pairing: Sequence[Tuple[int, int]], delta: TwoColoring) -> None:
        super().__init__(class_of=lambda v: v.player)
        self.words = words
        self.pairing = list(pairing)
        self.delta = delta
        self._serials = itertools.count()

    @property
    def n(self) -> int:
        return len(self.pairing) + 2

    def new_vertex(self, player: int, word_index: int, steps: int) -> Vertex:
        chair = self.words[word_index].at(steps)
        return Vertex(player, word_index, steps, next(self._serials), chair)

    def new_auxiliary(self, player: int) -> Vertex:
        return Vertex(player, -1, 0, next(self._serials), self.delta.aux_chair, auxiliary=True)

    def advance(self, vertex: Vertex) -> Vertex:
        assert not vertex.auxiliary
        return self.new_vertex(vertex.player, vertex.word_index, vertex.steps + 1)

    @staticmethod
    def is_auxiliary(facet: Facet) -> bool:
        return any(v.auxiliary for v in facet)

    def is_monochromatic(self, facet: Facet) -> bool:
        return len({self.delta(v) for v in facet}) == 1

    def configuration_of(self, facet: Facet) -> Configuration:
        assert not self.is_auxiliary(facet)
        ordered = sorted(facet, key=lambda v: v.player)
        return Configuration(self.words, tuple(PlayerState(v.word_index, 0, v.steps) for v in ordered))


def facet_key(facet: Facet) -> Tuple[Tuple[int, int, int], ...]:
    return tuple(sorted(v.key for v in facet))


def initial_psm(words: WordSystem, pairing: Optional[Sequence[Tuple[int, int]]] = None):
    """The 2^n facets choosing one vertex of every class, all players on their first letter.

    Returns the complex, the chair two-coloring, and the proper coloring by class.
    """
    pairing = list(pairing) if pairing is not None else default_pairing(len(words))
    delta = partition_chairs(words, pairing)
    X = ConfigurationComplex(words, pairing, delta)
    classes = [(X.new_vertex(0, 0, 0), X.new_auxiliary(0)),
               (X.new_vertex(1, 1, 0), X.new_auxiliary(1))]
    for c, (k1, k2) in enumerate(pairing, start=2):
        classes.append((X.new_vertex(c, k1, 0), X.new_vertex(c, k2, 0)))
    for facet in itertools.product(*classes):
        X.add_facet(frozenset(facet))
    return X, delta, X.class_of
