"""Distance requirement matrices and function distances.

A distance requirement matrix lists, for every ordered pair of messages (or
function values), how far apart their redundancy vectors must be so that the
full codewords reach the target distance. All variants share one container,
:class:`DistanceMatrix`, tagged by ``kind``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

import numpy as np

from .gfcore import (
    DimensionError,
    FunctionSpec,
    LinearCode,
    Word,
    as_word,
    format_value,
    pairwise_distances,
    word_array,
)

KINDS = ("DRM_t", "DRM_dp", "FDM", "CDRM", "CFDM", "const")


@dataclass(frozen=True)
class DistanceMatrix:
    labels: tuple[str, ...]
    entries: np.ndarray
    kind: str = "DRM_t"

    def __post_init__(self) -> None:
        e = np.array(self.entries, dtype=np.int64)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise DimensionError(f"distance matrix must be square, got shape {e.shape}")
        if len(self.labels) != e.shape[0]:
            raise DimensionError(f"{len(self.labels)} labels for a {e.shape[0]}x{e.shape[0]} matrix")
        if np.any(e < 0):
            raise ValueError("entries must be nonnegative")
        if not np.array_equal(e, e.T):
            raise ValueError("distance matrix must be symmetric")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    @property
    def has_zero_diagonal(self) -> bool:
        return not np.any(np.diag(self.entries))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.labels == other.labels and self.kind == other.kind and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.labels, self.kind, self.entries.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def submatrix(self, idx: Sequence[int]) -> DistanceMatrix:
        idx = list(idx)
        return DistanceMatrix(tuple(self.labels[i] for i in idx), self.entries[np.ix_(idx, idx)], self.kind)

    def permuted(self, perm: Sequence[int]) -> DistanceMatrix:
        return self.submatrix(perm)

    def to_json(self) -> dict:
        return {"kind": self.kind, "labels": list(self.labels), "entries": self.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> DistanceMatrix:
        entries = data["entries"]
        labels = data.get("labels") or [str(i) for i in range(len(entries))]
        return cls(tuple(labels), np.array(entries, dtype=np.int64), data.get("kind", "DRM_t"))

    @classmethod
    def constant(cls, m: int, d: int) -> DistanceMatrix:
        e = np.full((m, m), d, dtype=np.int64)
        np.fill_diagonal(e, 0)
        return cls(tuple(str(i) for i in range(m)), e, "const")


def _message_rows(f: FunctionSpec, vectors: Sequence[Word | str] | None) -> tuple[list[Word], np.ndarray]:
    if vectors is None:
        arr = word_array(f.k, f.q)
        words = [Word(tuple(int(x) for x in row), f.q) for row in arr]
        return words, arr
    words = [as_word(v, f.q) for v in vectors]
    for w in words:
        if len(w) != f.k or w.q != f.q:
            raise DimensionError(f"vector {w} is not in GF({f.q})^{f.k}")
    if len(set(words)) != len(words):
        raise ValueError("vectors must be distinct")
    return words, np.array([w.symbols for w in words], dtype=np.int64).reshape(len(words), f.k)


def _values_of(f: FunctionSpec, words: Sequence[Word]) -> np.ndarray:
    labels = f.value_labels()
    return np.array([labels[w.index()] for w in words], dtype=np.int64)


def _requirement(dist: np.ndarray, t: int) -> np.ndarray:
    return np.maximum(2 * t + 1 - dist, 0)


def build_drm(f: FunctionSpec, t: int, vectors: Sequence[Word | str] | None = None) -> DistanceMatrix:
    """Redundancy distances needed to separate differing function values.

    ``vectors=None`` uses all q^k messages in lexicographic order.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    words, arr = _message_rows(f, vectors)
    vals = _values_of(f, words)
    differ = vals[:, None] != vals[None, :]
    entries = np.where(differ, _requirement(pairwise_distances(arr, f.q), t), 0)
    return DistanceMatrix(tuple(str(w) for w in words), entries, "DRM_t")


def build_drm_dp(f: FunctionSpec, t_d: int, t_f: int, vectors: Sequence[Word | str] | None = None) -> DistanceMatrix:
    """Requirement matrix protecting data up to t_d errors and f up to t_f errors."""
    if t_d < 0 or t_f < 0:
        raise ValueError("error radii must be nonnegative")
    if t_d > t_f:
        raise ValueError(f"need t_d <= t_f, got t_d={t_d}, t_f={t_f}")
    words, arr = _message_rows(f, vectors)
    vals = _values_of(f, words)
    dist = pairwise_distances(arr, f.q)
    differ = vals[:, None] != vals[None, :]
    entries = np.where(differ, _requirement(dist, t_f), _requirement(dist, t_d))
    np.fill_diagonal(entries, 0)
    return DistanceMatrix(tuple(str(w) for w in words), entries, "DRM_dp")


def _value_distance_matrix(f: FunctionSpec, rows: np.ndarray) -> np.ndarray:
    """E x E matrix of min distance between rows of differing value classes.

    ``rows[i]`` is the (possibly encoded) image of message i in lexicographic order.
    """
    labels = f.value_labels()
    e = f.num_values
    dist = pairwise_distances(rows, f.q)
    out = np.zeros((e, e), dtype=np.int64)
    classes = [np.flatnonzero(labels == i) for i in range(e)]
    for i in range(e):
        for j in range(i + 1, e):
            out[i, j] = out[j, i] = dist[np.ix_(classes[i], classes[j])].min()
    return out


def _value_index(f: FunctionSpec, value: Hashable) -> int:
    if isinstance(value, list):
        value = tuple(value)
    try:
        return f.image.index(value)
    except ValueError:
        raise ValueError(f"{value!r} is not in the image of f") from None


def function_distance(f: FunctionSpec, f_i: Hashable, f_j: Hashable) -> int:
    """Minimum distance between a preimage of f_i and a preimage of f_j."""
    i, j = _value_index(f, f_i), _value_index(f, f_j)
    if i == j:
        return 0
    return int(_value_distance_matrix(f, word_array(f.k, f.q))[i, j])


def build_fdm(f: FunctionSpec, t: int) -> DistanceMatrix:
    """E x E requirement matrix over function distances, values ascending."""
    d = _value_distance_matrix(f, word_array(f.k, f.q))
    entries = _requirement(d, t)
    np.fill_diagonal(entries, 0)
    return DistanceMatrix(tuple(format_value(v) for v in f.image), entries, "FDM")


def _check_code(code: LinearCode, f: FunctionSpec) -> None:
    if code.k != f.k or code.q != f.q:
        raise DimensionError(f"code is [{code.n},{code.k}] over GF({code.q}) but f lives on GF({f.q})^{f.k}")


def build_cdrm(code: LinearCode, f: FunctionSpec, t_f: int, vectors: Sequence[Word | str] | None = None) -> DistanceMatrix:
    """Like :func:`build_drm`, but measured between the codewords uG."""
    _check_code(code, f)
    if t_f < 0:
        raise ValueError("t_f must be nonnegative")
    words, _ = _message_rows(f, vectors)
    cw = code.codewords()[[w.index() for w in words]]
    vals = _values_of(f, words)
    differ = vals[:, None] != vals[None, :]
    entries = np.where(differ, _requirement(pairwise_distances(cw, f.q), t_f), 0)
    return DistanceMatrix(tuple(str(w) for w in words), entries, "CDRM")


def coded_function_distance(code: LinearCode, f: FunctionSpec, f_i: Hashable, f_j: Hashable) -> int:
    _check_code(code, f)
    i, j = _value_index(f, f_i), _value_index(f, f_j)
    if i == j:
        return 0
    return int(_value_distance_matrix(f, code.codewords())[i, j])


def build_cfdm(code: LinearCode, f: FunctionSpec, t_f: int) -> DistanceMatrix:
    """E x E requirement matrix over coded function distances."""
    _check_code(code, f)
    d = _value_distance_matrix(f, code.codewords())
    entries = _requirement(d, t_f)
    np.fill_diagonal(entries, 0)
    return DistanceMatrix(tuple(format_value(v) for v in f.image), entries, "CFDM")


def representatives(f: FunctionSpec) -> list[Word]:
    """First message (lexicographically) of each value class, values ascending."""
    labels = f.value_labels()
    first = [int(np.flatnonzero(labels == i)[0]) for i in range(f.num_values)]
    return [Word.from_index(i, f.k, f.q) for i in first]
