"""Minimum-distance graphs and the perfect / MDS classifications.

Two codewords are adjacent when they sit at exactly the minimum distance.
If that graph has Q components, no function with more than Q values can be
protected beyond the minimum distance, because some edge must join two
codewords carrying different values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Sequence

import numpy as np

from .gfcore import FccCode, LinearCode, Word, as_word, pairwise_distances

MAX_GRAPH_WORDS = 1 << 13


class Verdict(str, Enum):
    RULED_OUT = "RuledOut"
    NOT_RULED_OUT = "NotRuledOut"


class NotApplicable(ValueError):
    """Raised when a classification needs an odd minimum distance."""


@dataclass(frozen=True)
class MinDistGraph:
    vertices: tuple[Word, ...]
    d_min: int
    adjacency: tuple[tuple[int, ...], ...]
    components: tuple[int, ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j]

    @property
    def num_components(self) -> int:
        return max(self.components) + 1

    @property
    def connected(self) -> bool:
        return self.num_components == 1

    def to_json(self) -> dict:
        return {
            "d_min": self.d_min,
            "vertices": [str(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "components": list(self.components),
            "num_components": self.num_components,
        }


def _codeword_list(code: FccCode | LinearCode | Sequence[Word | str], q: int = 2) -> list[Word]:
    if isinstance(code, FccCode):
        return list(code.codewords)
    if isinstance(code, LinearCode):
        return [Word(tuple(int(x) for x in row), code.q) for row in code.codewords()]
    return [as_word(w, q) for w in code]


def _label_components(adjacency: Sequence[Sequence[int]]) -> tuple[int, ...]:
    labels = [-1] * len(adjacency)
    current = 0
    for start in range(len(adjacency)):
        if labels[start] >= 0:
            continue
        labels[start] = current
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adjacency[v]:
                if labels[w] < 0:
                    labels[w] = current
                    queue.append(w)
        current += 1
    return tuple(labels)


def build_min_distance_graph(code: FccCode | LinearCode | Sequence[Word | str], q: int = 2) -> MinDistGraph:
    words = _codeword_list(code, q)
    if len(set(words)) < 2:
        raise ValueError("need at least two distinct codewords")
    if len(set(words)) != len(words):
        raise ValueError("codewords must be distinct")
    if len(words) > MAX_GRAPH_WORDS:
        raise ValueError(f"{len(words)} codewords exceed the graph limit {MAX_GRAPH_WORDS}")
    arr = np.array([w.symbols for w in words], dtype=np.int64)
    dist = pairwise_distances(arr, words[0].q)
    off = dist + np.eye(len(words), dtype=np.int64) * (arr.shape[1] + 1)
    d_min = int(off.min())
    adjacency = tuple(tuple(int(j) for j in np.flatnonzero(row == d_min)) for row in off)
    return MinDistGraph(tuple(words), d_min, adjacency, _label_components(adjacency))


def component_count(g: MinDistGraph) -> int:
    return g.num_components


def strict_fcc_feasible(code: FccCode | LinearCode | Sequence[Word | str] | MinDistGraph, E: int) -> Verdict:
    """Necessary condition only: RuledOut when the values outnumber the components.

    NotRuledOut never claims that a strict FCC exists.
    """
    if E < 2:
        raise ValueError("need at least two function values")
    g = code if isinstance(code, MinDistGraph) else build_min_distance_graph(code)
    return Verdict.RULED_OUT if E > g.num_components else Verdict.NOT_RULED_OUT


def _parameters(code: LinearCode | Sequence[Word | str], q: int) -> tuple[int, int, int, int]:
    """(n, M, d, q) of a code."""
    if isinstance(code, LinearCode):
        return code.n, code.q**code.k, code.min_distance(), code.q
    words = _codeword_list(code, q)
    g = build_min_distance_graph(words)
    return len(words[0]), len(set(words)), g.d_min, words[0].q


def is_perfect(code: LinearCode | Sequence[Word | str], q: int = 2) -> bool:
    """M times the radius-t ball volume equals q^n, with d = 2t + 1."""
    n, m, d, q = _parameters(code, q)
    if d % 2 == 0:
        raise NotApplicable(f"minimum distance {d} is even; perfection needs d = 2t + 1")
    t = (d - 1) // 2
    return m * sum(comb(n, i) * (q - 1) ** i for i in range(t + 1)) == q**n


def is_mds(code: LinearCode | Sequence[Word | str], q: int = 2) -> bool:
    """Singleton bound with equality: M = q^(n - d + 1)."""
    n, m, d, q = _parameters(code, q)
    return m == q ** (n - d + 1)


def to_dot(g: MinDistGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{", f'  label="d_min = {g.d_min}, components = {g.num_components}";']
    for i, v in enumerate(g.vertices):
        lines.append(f'  {i} [label="{v}", group={g.components[i]}];')
    for i, j in g.edges:
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
