"""Exact minimum-length search for irregular-distance codes.

Given an M x M requirement matrix D, a D-code of length r is a list of M
words p_1..p_M in GF(q)^r with d(p_i, p_j) >= D[i, j]. :func:`min_length_dcode`
finds the least such r by depth-first backtracking with forward checking.

Words of length r are handled as integers in [0, q^r) so that a domain is a
boolean mask over all q^r words. Two symmetries are factored out, both of
which map D-codes to D-codes:

* translation: p_1 is fixed to the zero word;
* coordinate permutation: every assigned word must be non-increasing inside
  each block of coordinates on which all earlier words agree. For q > 2 the
  first free word is further restricted to symbols {0, 1}, which a
  per-coordinate symbol permutation fixing 0 always achieves.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .distmat import DistanceMatrix
from .gfcore import CapacityError, DimensionError, Word, as_word

DEFAULT_NODE_BUDGET = 2_000_000
MAX_SEARCH_WORDS = 1 << 20


def default_node_budget() -> int:
    value = os.environ.get("FCCDP_NODE_BUDGET")
    if value is None:
        return DEFAULT_NODE_BUDGET
    try:
        return max(1, int(value))
    except ValueError:
        raise ValueError(f"FCCDP_NODE_BUDGET must be an integer, got {value!r}") from None


class SearchStatus(str, Enum):
    EXACT = "Exact"
    LOWER_BOUND_ONLY = "LowerBoundOnly"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a minimum-length search.

    ``length`` is N(D) when the status is Exact. For LowerBoundOnly it is the
    best proven lower bound: every shorter length was refuted exhaustively.
    A length-0 result has an empty witness.
    """

    status: SearchStatus
    length: int
    witness: tuple[Word, ...] | None = None
    nodes: int = 0
    elapsed: float = 0.0
    start_length: int = 0

    @property
    def exact(self) -> bool:
        return self.status is SearchStatus.EXACT

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "length": self.length,
            "witness": None if self.witness is None else [str(w) for w in self.witness],
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 6),
            "start_length": self.start_length,
        }


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    distance: int
    required: int

    def __str__(self) -> str:
        return f"rows {self.i},{self.j}: distance {self.distance} < required {self.required}"


def _entries(D: DistanceMatrix | np.ndarray | Sequence[Sequence[int]]) -> np.ndarray:
    if isinstance(D, DistanceMatrix):
        return D.entries
    e = np.asarray(D, dtype=np.int64)
    if e.ndim != 2 or e.shape[0] != e.shape[1]:
        raise DimensionError("requirement matrix must be square")
    return e


def find_violation(P: Sequence[Word | str], D: DistanceMatrix | np.ndarray, q: int = 2) -> Violation | None:
    """First pair (row-major over i < j) whose distance falls short of D."""
    e = _entries(D)
    if len(P) != e.shape[0]:
        raise DimensionError(f"{len(P)} words for a {e.shape[0]}x{e.shape[0]} matrix")
    words = [None if (isinstance(p, str) and p == "") else as_word(p, q) for p in P]
    lengths = {0 if w is None else len(w) for w in words}
    if len(lengths) > 1:
        raise DimensionError("D-code words must share one length")
    for i in range(len(words)):
        if e[i, i] > 0:
            return Violation(i, i, 0, int(e[i, i]))
        for j in range(i + 1, len(words)):
            a, b = words[i], words[j]
            d = 0 if a is None else sum(x != y for x, y in zip(a.symbols, b.symbols))
            if d < e[i, j]:
                return Violation(i, j, d, int(e[i, j]))
    return None


def is_dcode(P: Sequence[Word | str], D: DistanceMatrix | np.ndarray, q: int = 2) -> tuple[bool, Violation | None]:
    """Check d(p_i, p_j) >= D[i, j] for every pair, in the given order."""
    v = find_violation(P, D, q)
    return v is None, v


# --------------------------------------------------------------------------
# backtracking


class _BudgetExceeded(Exception):
    pass


class _Space:
    """All words of length r over GF(q), with fast distance-to-all."""

    def __init__(self, q: int, r: int):
        size = q**r
        if size > MAX_SEARCH_WORDS:
            raise CapacityError(f"{q}^{r} words exceed the search limit")
        self.q, self.r, self.size = q, r, size
        idx = np.arange(size, dtype=np.int64)
        powers = q ** np.arange(r - 1, -1, -1, dtype=np.int64)
        self.digits = ((idx[:, None] // powers[None, :]) % q).astype(np.int8)
        if q == 2:
            self.popcount = self.digits.sum(axis=1).astype(np.int16)
        self.idx = idx

    def distances_from(self, a: int) -> np.ndarray:
        if self.q == 2:
            return self.popcount[self.idx ^ a]
        return (self.digits != self.digits[a]).sum(axis=1)

    def canonical_mask(self, blocks: list[list[int]], binary_only: bool) -> np.ndarray:
        mask = np.ones(self.size, dtype=bool)
        for block in blocks:
            for c0, c1 in zip(block, block[1:]):
                mask &= self.digits[:, c0] >= self.digits[:, c1]
        if binary_only:
            mask &= (self.digits <= 1).all(axis=1)
        return mask

    def refine(self, blocks: list[list[int]], a: int) -> list[list[int]]:
        out = []
        row = self.digits[a]
        for block in blocks:
            groups: dict[int, list[int]] = {}
            for c in block:
                groups.setdefault(int(row[c]), []).append(c)
            out.extend(groups[v] for v in sorted(groups, reverse=True))
        return out

    def word(self, a: int) -> Word:
        return Word(tuple(int(x) for x in self.digits[a]), self.q)


class _Search:
    def __init__(self, entries: np.ndarray, q: int, r: int, budget: int, symmetry: bool = True):
        self.e = entries
        self.m = entries.shape[0]
        self.space = _Space(q, r)
        self.budget = budget
        self.nodes = 0
        self.symmetry = symmetry

    def run(self, prefix: Sequence[int] = ()) -> list[int] | None:
        """Complete an assignment that starts with ``prefix`` (anchor included)."""
        sp = self.space
        m = self.m
        doms = np.ones((m, sp.size), dtype=bool)
        blocks = [list(range(sp.r))]
        assigned: list[int] = []
        for i, a in enumerate(prefix):
            if not doms[i, a]:
                return None
            if self.symmetry and not sp.canonical_mask(blocks, q_binary_only(sp.q, i))[a]:
                return None
            doms = self._propagate(doms, i, a)
            if doms is None:
                return None
            blocks = sp.refine(blocks, a)
            assigned.append(a)
        return self._dfs(doms, len(assigned), assigned, blocks)

    def _propagate(self, doms: np.ndarray, i: int, a: int) -> np.ndarray | None:
        rest = np.arange(i + 1, self.m)
        if rest.size == 0:
            return doms
        req = self.e[i, rest]
        active = req > 0
        if not active.any():
            return doms
        dv = self.space.distances_from(a)
        rows = rest[active]
        new = doms.copy()
        new[rows] &= dv[None, :] >= req[active][:, None]
        if not new[rows].any(axis=1).all():
            return None
        return new

    def _dfs(self, doms: np.ndarray, i: int, assigned: list[int], blocks: list[list[int]]) -> list[int] | None:
        if i == self.m:
            return list(assigned)
        sp = self.space
        dom = doms[i]
        if self.symmetry:
            dom = dom & sp.canonical_mask(blocks, q_binary_only(sp.q, i))
        for a in np.flatnonzero(dom):
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExceeded
            a = int(a)
            new = self._propagate(doms, i, a)
            if new is None:
                continue
            assigned.append(a)
            found = self._dfs(new, i + 1, assigned, sp.refine(blocks, a) if self.symmetry else blocks)
            if found is not None:
                return found
            assigned.pop()
        return None


def q_binary_only(q: int, depth: int) -> bool:
    # the first word after the anchor may be normalised to symbols {0, 1}
    return q > 2 and depth == 1


def _run_branch(args: tuple) -> tuple[list[int] | None, int, bool]:
    entries, q, r, budget, symmetry, prefix = args
    s = _Search(entries, q, r, budget, symmetry)
    try:
        return s.run(prefix), s.nodes, False
    except _BudgetExceeded:
        return None, s.nodes, True


def _row_order(entries: np.ndarray, by_row_sum: bool) -> list[int]:
    m = entries.shape[0]
    if not by_row_sum:
        return list(range(m))
    sums = entries.sum(axis=1)
    return sorted(range(m), key=lambda i: (-int(sums[i]), i))


def plotkin_start(entries: np.ndarray, q: int) -> int:
    from .bounds import plotkin_irregular_entries

    return math.ceil(plotkin_irregular_entries(entries, q))


def min_length_dcode(
    D: DistanceMatrix | np.ndarray,
    q: int = 2,
    r_max: int = 16,
    *,
    node_budget: int | None = None,
    order_by_row_sum: bool = False,
    parallel: int = 1,
    symmetry: bool = True,
) -> SearchResult:
    """Smallest r admitting a D-code over GF(q), with a witness.

    Lengths are tried upward from max(ceil(Plotkin bound), largest entry).
    The node budget is shared by all lengths; when it runs out the result
    is LowerBoundOnly at the first length that was not settled.
    """
    t0 = time.perf_counter()
    e = _entries(D)
    m = e.shape[0]
    budget = default_node_budget() if node_budget is None else node_budget
    if np.any(np.diag(e) > 0):
        return SearchResult(SearchStatus.INFEASIBLE, 0, None, 0, time.perf_counter() - t0)
    if m <= 1 or not e.any():
        return SearchResult(SearchStatus.EXACT, 0, (), 0, time.perf_counter() - t0)

    order = _row_order(e, order_by_row_sum)
    pe = e[np.ix_(order, order)]
    start = max(plotkin_start(pe, q), int(pe.max()))
    nodes = 0
    for r in range(start, r_max + 1):
        if q**r > MAX_SEARCH_WORDS:
            return SearchResult(SearchStatus.LOWER_BOUND_ONLY, r, None, nodes, time.perf_counter() - t0, start)
        remaining = budget - nodes
        if parallel > 1:
            found, used, exhausted = _parallel_search(pe, q, r, remaining, symmetry, parallel)
        else:
            found, used, exhausted = _run_branch((pe, q, r, remaining, symmetry, (0,)))
        nodes += used
        if found is not None:
            space = _Space(q, r)
            witness = [None] * m
            for pos, row in enumerate(order):
                witness[row] = space.word(found[pos])
            return SearchResult(SearchStatus.EXACT, r, tuple(witness), nodes, time.perf_counter() - t0, start)
        if exhausted:
            return SearchResult(SearchStatus.LOWER_BOUND_ONLY, r, None, nodes, time.perf_counter() - t0, start)
    return SearchResult(SearchStatus.LOWER_BOUND_ONLY, r_max + 1, None, nodes, time.perf_counter() - t0, start)


def _parallel_search(e: np.ndarray, q: int, r: int, budget: int, symmetry: bool, workers: int):
    """Split on the second word; the lowest-indexed successful branch wins."""
    space = _Space(q, r)
    dom = space.distances_from(0) >= e[0, 1]
    if symmetry:
        dom &= space.canonical_mask([list(range(r))], q_binary_only(q, 1))
    branches = [(e, q, r, budget, symmetry, (0, int(a))) for a in np.flatnonzero(dom)]
    if not branches:
        return None, 0, False
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_branch, branches))
    nodes = sum(n for _, n, _ in results) + len(branches)
    for found, _, _ in results:
        if found is not None:
            return found, nodes, False
    return None, nodes, any(ex for _, _, ex in results)


def min_length_code(M: int, D: int, q: int = 2, r_max: int = 16, **kwargs) -> SearchResult:
    """N(M, D): shortest code with M words at pairwise distance >= D."""
    if M < 1 or D < 0:
        raise ValueError("need M >= 1 and D >= 0")
    return min_length_dcode(DistanceMatrix.constant(M, D), q, r_max, **kwargs)


# --------------------------------------------------------------------------
# linear codes


@dataclass(frozen=True)
class LinearLengthResult:
    """Bracket on the shortest [n, k, >= d] linear code over GF(q)."""

    lower: int
    upper: int
    construction: str = ""
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"length only known to lie in [{self.lower}, {self.upper}]")
        return self.lower

    def to_json(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact, "construction": self.construction}


def _ball(n: int, t: int, q: int) -> int:
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(min(t, n) + 1))


def hamming_singleton_length(k: int, d: int, q: int = 2) -> int:
    """Smallest n passing both the sphere-packing and Singleton conditions."""
    t = (d - 1) // 2
    n = k + d - 1
    while q ** (n - k) < _ball(n, t, q):
        n += 1
    return n


def _hamming_redundancy(k: int, q: int) -> int:
    m = 2
    while (q**m - 1) // (q - 1) - m < k:
        m += 1
    return m


def min_length_linear(k: int, d: int, q: int = 2) -> LinearLengthResult:
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    lower = hamming_singleton_length(k, d, q)
    options: list[tuple[int, str]] = [(k * d, "repetition")]
    if d == 1:
        options.append((k, "identity"))
    if d == 2:
        options.append((k + 1, "single parity"))
    if d == 3:
        options.append((k + _hamming_redundancy(k, q), "shortened Hamming"))
    if d == 4 and q == 2:
        options.append((k + _hamming_redundancy(k, q) + 1, "extended shortened Hamming"))
    if k == 1:
        options.append((d, "repetition"))
    upper, name = min(options)
    return LinearLengthResult(lower, upper, name)
