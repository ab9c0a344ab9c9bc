"""
Stallings Foldings
Folded core graphs of finitely generated subgroups of free groups
"""

import logging
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import RankMismatch
from .words import FreeHom, FreeWord, letter_name, reduce_letters

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]


class _UnionFind:
    """Union-find over integer states with path compression"""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        # the basepoint 0 always stays a root
        if b == 0:
            a, b = b, a
        self.parent[b] = a
        return True


@dataclass(frozen=True)
class SubgroupGraph:
    """
    Folded core graph with basepoint 0, canonically numbered.

    Edges are stored once with a positive label; the inverse edge is implied.
    """
    rank: int
    size: int
    edges: Tuple[Edge, ...]
    _delta: Dict[Tuple[int, int], int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        delta: Dict[Tuple[int, int], int] = {}
        for u, a, v in self.edges:
            for key, target in (((u, a), v), ((v, -a), u)):
                if delta.setdefault(key, target) != target:
                    raise ValueError(f"graph is not folded at state {key[0]}")
        object.__setattr__(self, "_delta", delta)

    @classmethod
    def full(cls, rank: int) -> "SubgroupGraph":
        return cls(rank, 1, tuple((0, a, 0) for a in range(1, rank + 1)))

    @classmethod
    def trivial(cls, rank: int) -> "SubgroupGraph":
        return cls(rank, 1, ())

    def step(self, state: int, letter: int) -> Optional[int]:
        return self._delta.get((state, letter))

    def read(self, word: FreeWord) -> Optional[int]:
        state = 0
        for letter in word.letters:
            state = self.step(state, letter)
            if state is None:
                return None
        return state

    def contains(self, word: FreeWord) -> bool:
        if word.rank != self.rank:
            raise RankMismatch(f"word of rank {word.rank} tested against a subgroup of F{self.rank}")
        return self.read(word) == 0

    @property
    def graph_rank(self) -> int:
        """Free rank of the subgroup, |E| - |V| + 1"""
        return len(self.edges) - self.size + 1

    @property
    def is_full(self) -> bool:
        return self == SubgroupGraph.full(self.rank)

    @property
    def is_trivial(self) -> bool:
        return not self.edges

    def generators(self) -> List[FreeWord]:
        """Free basis read off a BFS spanning tree from the basepoint"""
        paths: Dict[int, Tuple[int, ...]] = {0: ()}
        tree = set()
        queue = deque([0])
        while queue:
            state = queue.popleft()
            for letter in _letter_order(self.rank):
                target = self.step(state, letter)
                if target is not None and target not in paths:
                    paths[target] = paths[state] + (letter,)
                    tree.add(_edge_key(state, letter, target))
                    queue.append(target)
        basis = []
        for u, a, v in self.edges:
            if (u, a, v) in tree:
                continue
            inverse_path = tuple(-x for x in reversed(paths[v]))
            basis.append(FreeWord(self.rank, reduce_letters(paths[u] + (a,) + inverse_path)))
        return basis

    def is_subgroup_of(self, other: "SubgroupGraph") -> bool:
        if other.rank != self.rank:
            raise RankMismatch(f"subgroups of F{self.rank} and F{other.rank}")
        return all(other.contains(g) for g in self.generators())

    def to_text(self) -> str:
        """Adjacency list, one state per line"""
        lines = [f"subgroup of F{self.rank}: {self.size} states, rank {self.graph_rank}"]
        for state in range(self.size):
            out = [f"{letter_name(a)}->{v}" for (u, a, v) in self.edges if u == state]
            lines.append(f"{state}{'*' if state == 0 else ''}: {', '.join(out)}")
        return "\n".join(lines)


def _letter_order(rank: int) -> List[int]:
    return [s * a for a in range(1, rank + 1) for s in (1, -1)]


def _edge_key(u: int, letter: int, v: int) -> Edge:
    return (u, letter, v) if letter > 0 else (v, -letter, u)


def _flower(rank: int, words: Sequence[FreeWord]) -> Tuple[int, List[Edge]]:
    size = 1
    edges: List[Edge] = []
    for word in words:
        if word.rank != rank:
            raise RankMismatch(f"generator {word} is not in F{rank}")
        if word.is_identity:
            continue
        current = 0
        for position, letter in enumerate(word.letters):
            if position == len(word.letters) - 1:
                target = 0
            else:
                target = size
                size += 1
            edges.append(_edge_key(current, letter, target))
            current = target
    return size, edges


def _fold(size: int, edges: List[Edge]) -> Tuple[_UnionFind, set]:
    classes = _UnionFind(size)
    changed = True
    while changed:
        changed = False
        current = list(dict.fromkeys((classes.find(u), a, classes.find(v)) for u, a, v in edges))
        seen: Dict[Tuple[int, int], int] = {}
        for u, a, v in current:
            for key, target in (((u, a), v), ((v, -a), u)):
                other = seen.setdefault(key, target)
                if other != target:
                    classes.union(other, target)
                    changed = True
                    break
            if changed:
                break
    return classes, {(classes.find(u), a, classes.find(v)) for u, a, v in edges}


def _trim(edges: set) -> set:
    """Remove hanging trees: non-basepoint states of degree 1"""
    while True:
        degree: Dict[int, int] = {}
        for u, _, v in edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        leaves = {s for s, d in degree.items() if d == 1 and s != 0}
        if not leaves:
            return edges
        edges = {(u, a, v) for u, a, v in edges if u not in leaves and v not in leaves}


def _canonical(rank: int, edges: set) -> SubgroupGraph:
    delta: Dict[Tuple[int, int], int] = {}
    for u, a, v in edges:
        delta[(u, a)] = v
        delta[(v, -a)] = u
    numbering = {0: 0}
    queue = deque([0])
    while queue:
        state = queue.popleft()
        for letter in _letter_order(rank):
            target = delta.get((state, letter))
            if target is not None and target not in numbering:
                numbering[target] = len(numbering)
                queue.append(target)
    relabeled = sorted((numbering[u], a, numbering[v]) for u, a, v in edges)
    return SubgroupGraph(rank, len(numbering), tuple(relabeled))


def fold(rank: int, generators: Sequence[FreeWord], seed: Optional[int] = None) -> SubgroupGraph:
    """
    Folded core graph of the subgroup generated by the words.

    Args:
        rank: Ambient free rank
        generators: Words in F(rank); an empty list gives the trivial subgroup
        seed: If given, shuffles the order in which folds are performed

    Returns:
        Canonically numbered SubgroupGraph
    """
    size, edges = _flower(rank, generators)
    if seed is not None:
        random.Random(seed).shuffle(edges)
    _, folded = _fold(size, edges)
    return _canonical(rank, _trim(folded))


def image(f: FreeHom, subgroup: Optional[SubgroupGraph] = None) -> SubgroupGraph:
    """Folded graph of f(subgroup); None stands for the whole source group"""
    if subgroup is None:
        subgroup = SubgroupGraph.full(f.source_rank)
    if subgroup.rank != f.source_rank:
        raise RankMismatch(f"subgroup of F{subgroup.rank} but the map starts at F{f.source_rank}")
    return fold(f.target_rank, [f.apply(g) for g in subgroup.generators()])


def equal_subgroups(first: SubgroupGraph, second: SubgroupGraph) -> bool:
    if first.rank != second.rank:
        raise RankMismatch(f"subgroups of F{first.rank} and F{second.rank} are not comparable")
    return first == second
