import collections
from typing import Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from mchairs.utils import MchairsError
from .complex import ConfigurationComplex, Facet, Vertex, facet_key

# children: old facet -> [(moved classes, new facet)] in the order first, second, both.
Split = collections.namedtuple('Split', ['edge', 'new_vertices', 'children'])


class NotAnEdgeConflict(MchairsError):
    """Edge endpoints are not two players sharing a chair."""


def subdivide_edge(X: ConfigurationComplex, v1: Vertex, v2: Vertex) -> Split:
    """Splits every facet through the edge (v1, v2) into the three moves of the pair.

    Each endpoint gets a successor one letter further on its word. A facet through the
    edge is replaced by the facets where v1 advanced, v2 advanced, or both advanced.
    """
    if v1.auxiliary or v2.auxiliary or v1.player == v2.player:
        raise NotAnEdgeConflict(f'{v1!r} and {v2!r} are not two players')
    if v1.chair != v2.chair:
        raise NotAnEdgeConflict(f'{v1!r} and {v2!r} sit on different chairs')
    if v1.player > v2.player:
        v1, v2 = v2, v1
    facets = sorted(X.facets_with(v1, v2), key=facet_key)
    if not facets:
        raise NotAnEdgeConflict(f'{v1!r} and {v2!r} span no edge of the complex')
    w1, w2 = X.advance(v1), X.advance(v2)
    children: Dict[Facet, List[Tuple[FrozenSet[int], Facet]]] = {}
    for facet in facets:
        rest = facet - {v1, v2}
        new = [(frozenset([v1.player]), rest | {w1, v2}),
               (frozenset([v2.player]), rest | {v1, w2}),
               (frozenset([v1.player, v2.player]), rest | {w1, w2})]
        X.remove_facet(facet)
        for _, child in new:
            X.add_facet(child)
        children[facet] = new
    return Split((v1, v2), (w1, w2), children)


def subdivide(X: ConfigurationComplex, edge: Tuple[Vertex, Vertex]) -> ConfigurationComplex:
    subdivide_edge(X, *edge)
    return X


class TreeNode:
    __slots__ = ('parent', 'depth', 'moved', 'facet')

    def __init__(self, parent: Optional['TreeNode'], depth: int,
                 moved: FrozenSet[int], facet: Optional[Facet]) -> None:
        self.parent = parent
        self.depth = depth
        self.moved = moved
        self.facet = facet


class SubdivisionTree:
    """Genealogy of facets: the root, the initial facets at depth 1, then three children per split."""

    def __init__(self, facets) -> None:
        self.root = TreeNode(None, 0, frozenset(), None)
        self.leaves: Dict[Facet, TreeNode] = {}
        for facet in sorted(facets, key=facet_key):
            self.leaves[facet] = TreeNode(self.root, 1, frozenset(), facet)
        self.initial_count = len(self.leaves)
        self.splits = 0
        self.max_depth = 1 if self.leaves else 0

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    def apply(self, split: Split) -> None:
        for facet, children in split.children.items():
            node = self.leaves.pop(facet)
            for moved, child in children:
                self.leaves[child] = TreeNode(node, node.depth + 1, moved, child)
            self.splits += 1
            self.max_depth = max(self.max_depth, node.depth + 1)
        assert self.leaf_count == self.initial_count + 2 * self.splits

    def path(self, facet: Facet) -> List[TreeNode]:
        """Nodes from depth 1 down to the leaf of the facet."""
        node = self.leaves[facet]
        nodes = []
        while node.parent is not None:
            nodes.append(node)
            node = node.parent
        return nodes[::-1]


def unsafe_pairs(facet: Facet) -> List[Tuple[Vertex, Vertex]]:
    players = sorted((v for v in facet if not v.auxiliary), key=lambda v: v.player)
    return [(a, b) for k, a in enumerate(players) for b in players[k + 1:] if a.chair == b.chair]


def random_subdivide(X: ConfigurationComplex,
                     rng: np.random.Generator,
                     tree: Optional[SubdivisionTree] = None) -> Optional[Split]:
    """Subdivides a random conflicting edge of a random unsafe facet. None when every facet is safe."""
    candidates = sorted((f for f in X.facets if not X.is_auxiliary(f) and unsafe_pairs(f)), key=facet_key)
    if not candidates:
        return None
    facet = candidates[rng.integers(len(candidates))]
    pairs = unsafe_pairs(facet)
    split = subdivide_edge(X, *pairs[rng.integers(len(pairs))])
    if tree is not None:
        tree.apply(split)
    return split
