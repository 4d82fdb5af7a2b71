"""Prime-field words, linear codes and message functions.

Everything else in the package is built on the three value types defined
here: :class:`Word` (a vector over GF(q), q prime), :class:`LinearCode`
(a k x n generator matrix) and the :class:`FunctionSpec` family (the function
``f`` whose value needs the extra protection).

Messages are always enumerated lexicographically with coordinate 1 as the
most significant symbol, so for q=2, k=3 the order is 000, 001, 010, ..., 111.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Iterable, Iterator, Sequence

import numpy as np

# Exhaustive sweeps over q^k messages are refused beyond this many messages.
MAX_EXHAUSTIVE_MESSAGES = 1 << 20


class DimensionError(ValueError):
    """Length or field mismatch between words, codes and functions."""


class CapacityError(RuntimeError):
    """An exhaustive computation would exceed the configured size guard."""


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, math.isqrt(q) + 1))


def _check_field(q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"field order must be prime, got q={q}")


# --------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class Word:
    """A vector over GF(q); ``symbols[0]`` is coordinate 1."""

    symbols: tuple[int, ...]
    q: int = 2

    def __post_init__(self) -> None:
        syms = tuple(int(s) for s in self.symbols)
        object.__setattr__(self, "symbols", syms)
        _check_field(self.q)
        if len(syms) == 0:
            raise DimensionError("a word needs at least one symbol")
        bad = [s for s in syms if not 0 <= s < self.q]
        if bad:
            raise ValueError(f"symbols {bad} out of range for q={self.q}")

    @classmethod
    def parse(cls, text: str, q: int = 2) -> Word:
        """Parse ``"0110"`` (one digit per symbol) or ``"0,1,12"``."""
        text = text.strip()
        if "," in text:
            return cls(tuple(int(s) for s in text.split(",")), q)
        return cls(tuple(int(c) for c in text.replace(" ", "")), q)

    @classmethod
    def zero(cls, n: int, q: int = 2) -> Word:
        return cls((0,) * n, q)

    @classmethod
    def from_index(cls, index: int, n: int, q: int = 2) -> Word:
        """Inverse of :meth:`index`."""
        if not 0 <= index < q**n:
            raise ValueError(f"index {index} out of range for q^n={q**n}")
        digits = []
        for _ in range(n):
            index, r = divmod(index, q)
            digits.append(r)
        return cls(tuple(reversed(digits)), q)

    def index(self) -> int:
        """Lexicographic position among all words of this length."""
        idx = 0
        for s in self.symbols:
            idx = idx * self.q + s
        return idx

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self) -> str:
        if self.q <= 10:
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)

    def __repr__(self) -> str:
        return f"Word('{self}', q={self.q})"

    def _check_compatible(self, other: Word) -> None:
        if not isinstance(other, Word):
            raise TypeError(f"expected Word, got {type(other).__name__}")
        if self.q != other.q or len(self) != len(other):
            raise DimensionError(
                f"incompatible words: length {len(self)} over GF({self.q}) "
                f"vs length {len(other)} over GF({other.q})"
            )

    def __add__(self, other: Word) -> Word:
        self._check_compatible(other)
        return Word(tuple((a + b) % self.q for a, b in zip(self, other)), self.q)

    def __sub__(self, other: Word) -> Word:
        self._check_compatible(other)
        return Word(tuple((a - b) % self.q for a, b in zip(self, other)), self.q)

    def scale(self, c: int) -> Word:
        return Word(tuple((c * a) % self.q for a in self), self.q)

    def concat(self, other: Word) -> Word:
        if self.q != other.q:
            raise DimensionError("cannot concatenate words over different fields")
        return Word(self.symbols + other.symbols, self.q)

    def to_array(self) -> np.ndarray:
        return np.array(self.symbols, dtype=np.int64)


def as_word(value: Word | str | Sequence[int], q: int = 2) -> Word:
    if isinstance(value, Word):
        return value
    if isinstance(value, str):
        return Word.parse(value, q)
    return Word(tuple(value), q)


def words_from_array(arr: np.ndarray, q: int) -> list[Word]:
    return [Word(tuple(int(x) for x in row), q) for row in np.asarray(arr)]


def hamming_distance(a: Word, b: Word) -> int:
    a._check_compatible(b)
    return sum(x != y for x, y in zip(a.symbols, b.symbols))


def hamming_weight(a: Word) -> int:
    return sum(1 for s in a.symbols if s)


def word_array(n: int, q: int = 2) -> np.ndarray:
    """All q^n words of length n as rows, lexicographic order."""
    if q**n > MAX_EXHAUSTIVE_MESSAGES:
        raise CapacityError(f"{q}^{n} words exceed the exhaustive limit")
    idx = np.arange(q**n, dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def all_words(n: int, q: int = 2) -> list[Word]:
    return [Word(t, q) for t in itertools.product(range(q), repeat=n)]


def pairwise_distances(rows: np.ndarray, q: int) -> np.ndarray:
    """Hamming distance matrix between the rows of an integer array.

    Uses a one-hot inner product so it runs through BLAS; exact for
    lengths far below float precision limits.
    """
    rows = np.asarray(rows, dtype=np.int64)
    m, n = rows.shape
    if n == 0:
        return np.zeros((m, m), dtype=np.int64)
    onehot = np.zeros((m, n * q), dtype=np.float64)
    cols = np.arange(n) * q
    onehot[np.arange(m)[:, None], cols[None, :] + rows] = 1.0
    agree = onehot @ onehot.T
    return n - np.rint(agree).astype(np.int64)


def cross_distances(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    """Distances between every row of ``a`` and every row of ``b``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    n = a.shape[1]
    if b.shape[1] != n:
        raise DimensionError("row lengths differ")
    cols = np.arange(n) * q
    oa = np.zeros((a.shape[0], n * q))
    ob = np.zeros((b.shape[0], n * q))
    oa[np.arange(a.shape[0])[:, None], cols[None, :] + a] = 1.0
    ob[np.arange(b.shape[0])[:, None], cols[None, :] + b] = 1.0
    return n - np.rint(oa @ ob.T).astype(np.int64)


# --------------------------------------------------------------------------
# linear algebra over GF(q)


def row_reduce(matrix: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod q and the pivot columns."""
    a = np.array(matrix, dtype=np.int64) % q
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, q)) % q
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % q
        pivots.append(c)
        r += 1
    return a, pivots


def rank_mod(matrix: np.ndarray, q: int) -> int:
    return len(row_reduce(matrix, q)[1])


def nullspace_mod(matrix: np.ndarray, q: int) -> np.ndarray:
    """Basis of {x : matrix @ x = 0 mod q}, one basis vector per row."""
    a = np.atleast_2d(np.array(matrix, dtype=np.int64))
    ncols = a.shape[1]
    rref, pivots = row_reduce(a, q)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[fcol] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-rref[i, fcol]) % q
        basis.append(v)
    if not basis:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(basis)


def span_mod(basis: np.ndarray, q: int) -> np.ndarray:
    """All q^dim linear combinations of the basis rows (lexicographic in the coefficients)."""
    basis = np.atleast_2d(np.asarray(basis, dtype=np.int64))
    dim, n = basis.shape
    if dim == 0:
        return np.zeros((1, n), dtype=np.int64)
    return (word_array(dim, q) @ basis) % q


# --------------------------------------------------------------------------
# functions on messages


def value_sort_key(value: Hashable) -> tuple:
    """Total order on function values: numbers, then strings, then vectors."""
    if isinstance(value, bool):
        return (0, int(value))
    if isinstance(value, (int, float, np.integer)):
        return (0, value)
    if isinstance(value, str):
        return (1, value)
    if isinstance(value, tuple):
        return (2, value)
    return (3, repr(value))


def format_value(value: Hashable) -> str:
    if isinstance(value, tuple):
        return "".join(str(v) for v in value) if all(0 <= v < 10 for v in value) else ",".join(map(str, value))
    return str(value)


class FunctionSpec:
    """A function on GF(q)^k with a finite image.

    Subclasses implement :meth:`_evaluate_array`, which maps the
    lexicographic message array to a list of hashable values.
    """

    q: int
    k: int
    kind: str = ""

    def __call__(self, u: Word | str | Sequence[int]) -> Hashable:
        u = as_word(u, self.q)
        if len(u) != self.k or u.q != self.q:
            raise DimensionError(f"function expects a length-{self.k} word over GF({self.q}), got {u!r}")
        return self.values[u.index()]

    def _evaluate_array(self, messages: np.ndarray) -> list[Hashable]:
        raise NotImplementedError

    @cached_property
    def values(self) -> tuple:
        """f(u) for every message u, in lexicographic message order."""
        return tuple(self._evaluate_array(word_array(self.k, self.q)))

    @cached_property
    def image(self) -> tuple:
        return tuple(sorted(set(self.values), key=value_sort_key))

    @property
    def num_values(self) -> int:
        return len(self.image)

    def preimage_sizes(self) -> dict:
        sizes: dict = {}
        for v in self.values:
            sizes[v] = sizes.get(v, 0) + 1
        return sizes

    def value_labels(self) -> np.ndarray:
        """Index of f(u) within :attr:`image`, per message."""
        pos = {v: i for i, v in enumerate(self.image)}
        return np.array([pos[v] for v in self.values], dtype=np.int64)

    def to_json(self) -> dict:
        raise NotImplementedError

    @staticmethod
    def from_json(data: dict) -> FunctionSpec:
        kind = data.get("kind")
        q, k = int(data["q"]), int(data["k"])
        if kind == "table":
            vals = [tuple(v) if isinstance(v, list) else v for v in data["values"]]
            return TableFunction(q, k, tuple(vals))
        if kind == "weight":
            return HammingWeight(q, k)
        if kind == "weight_mod":
            return WeightMod(q, k, int(data["m"]))
        if kind == "linear":
            return LinearMap(q, k, tuple(tuple(int(x) for x in row) for row in data["matrix"]))
        raise ValueError(f"unknown function kind {kind!r}")


def _validate_qk(q: int, k: int) -> None:
    _check_field(q)
    if k < 1:
        raise ValueError("k must be at least 1")


@dataclass(frozen=True, eq=True)
class TableFunction(FunctionSpec):
    q: int
    k: int
    table: tuple
    kind: str = field(default="table", init=False)

    def __post_init__(self) -> None:
        _validate_qk(self.q, self.k)
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.q**self.k:
            raise DimensionError(f"table needs {self.q ** self.k} entries, got {len(self.table)}")

    def _evaluate_array(self, messages: np.ndarray) -> list[Hashable]:
        return list(self.table)

    def to_json(self) -> dict:
        vals = [list(v) if isinstance(v, tuple) else v for v in self.table]
        return {"q": self.q, "k": self.k, "kind": "table", "values": vals}

    @classmethod
    def from_mapping(cls, mapping: dict, q: int = 2) -> TableFunction:
        """Build from ``{"00": 0, "01": 1, ...}``; every message must be present."""
        words = {as_word(key, q): v for key, v in mapping.items()}
        k = len(next(iter(words)))
        table = []
        for u in all_words(k, q):
            if u not in words:
                raise ValueError(f"mapping has no value for message {u}")
            table.append(words[u])
        return cls(q, k, tuple(table))


@dataclass(frozen=True, eq=True)
class HammingWeight(FunctionSpec):
    q: int
    k: int
    kind: str = field(default="weight", init=False)

    def __post_init__(self) -> None:
        _validate_qk(self.q, self.k)

    def _evaluate_array(self, messages: np.ndarray) -> list[Hashable]:
        return [int(w) for w in (messages != 0).sum(axis=1)]

    def to_json(self) -> dict:
        return {"q": self.q, "k": self.k, "kind": "weight"}


@dataclass(frozen=True, eq=True)
class WeightMod(FunctionSpec):
    q: int
    k: int
    m: int
    kind: str = field(default="weight_mod", init=False)

    def __post_init__(self) -> None:
        _validate_qk(self.q, self.k)
        if self.m < 1:
            raise ValueError("modulus must be positive")

    def _evaluate_array(self, messages: np.ndarray) -> list[Hashable]:
        return [int(w) % self.m for w in (messages != 0).sum(axis=1)]

    def to_json(self) -> dict:
        return {"q": self.q, "k": self.k, "kind": "weight_mod", "m": self.m}


@dataclass(frozen=True, eq=True)
class LinearMap(FunctionSpec):
    """u -> A u over GF(q) with an l x k matrix A; values are l-tuples."""

    q: int
    k: int
    matrix: tuple
    kind: str = field(default="linear", init=False)

    def __post_init__(self) -> None:
        _validate_qk(self.q, self.k)
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        if not mat or any(len(row) != self.k for row in mat):
            raise DimensionError(f"linear map needs rows of length k={self.k}")
        if any(not 0 <= x < self.q for row in mat for x in row):
            raise ValueError("matrix entries must lie in [0, q)")

    @property
    def ell(self) -> int:
        return len(self.matrix)

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def apply(self, u: Word) -> Word:
        """f(u) as a Word of length l (handy for encoding with a second code)."""
        return Word(self(u), self.q)

    def _evaluate_array(self, messages: np.ndarray) -> list[Hashable]:
        out = (messages @ self.as_array().T) % self.q
        return [tuple(int(x) for x in row) for row in out]

    def to_json(self) -> dict:
        return {"q": self.q, "k": self.k, "kind": "linear", "matrix": [list(r) for r in self.matrix]}


def eval_function(f: FunctionSpec, u: Word | str) -> Hashable:
    return f(u)


def kernel_of_linear_map(f: FunctionSpec) -> tuple[list[Word], list[Word]]:
    """Basis of Ker(f) and the full enumerated kernel (size q^(k - rank))."""
    if not isinstance(f, LinearMap):
        raise TypeError(f"kernel is only defined for linear maps, got {f.kind!r}")
    basis = nullspace_mod(f.as_array(), f.q)
    kernel = span_mod(basis, f.q) if len(basis) else np.zeros((1, f.k), dtype=np.int64)
    kernel_words = sorted(words_from_array(kernel, f.q), key=Word.index)
    return words_from_array(basis, f.q), kernel_words


# --------------------------------------------------------------------------
# linear codes


class LinearCode:
    """Linear [n, k] code over GF(q) given by a full-rank generator matrix."""

    def __init__(self, generator: Any, q: int = 2, *, name: str | None = None):
        _check_field(q)
        g = np.atleast_2d(np.array(generator, dtype=np.int64))
        if g.ndim != 2 or g.size == 0:
            raise DimensionError("generator must be a non-empty k x n matrix")
        if np.any((g < 0) | (g >= q)):
            raise ValueError(f"generator entries must lie in [0, {q})")
        k, n = g.shape
        if n < k:
            raise DimensionError(f"need n >= k, got {k} x {n}")
        if rank_mod(g, q) != k:
            raise ValueError("generator matrix is rank deficient")
        g.setflags(write=False)
        self._g = g
        self.q = q
        self.k = k
        self.n = n
        self.name = name
        self._dmin: int | None = None
        self._codewords: np.ndarray | None = None

    @property
    def generator(self) -> np.ndarray:
        return self._g

    @classmethod
    def identity(cls, k: int, q: int = 2) -> LinearCode:
        return cls(np.eye(k, dtype=np.int64), q, name=f"identity[{k}]")

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<LinearCode{label} [{self.n},{self.k}] over GF({self.q})>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.q == other.q and np.array_equal(self._g, other._g)

    def __hash__(self) -> int:
        return hash((self.q, self._g.tobytes(), self._g.shape))

    def encode(self, u: Word | str | Sequence[int]) -> Word:
        u = as_word(u, self.q)
        if len(u) != self.k or u.q != self.q:
            raise DimensionError(f"message must have length {self.k} over GF({self.q})")
        return Word(tuple(int(x) for x in (u.to_array() @ self._g) % self.q), self.q)

    def codewords(self) -> np.ndarray:
        """uG for every message u in lexicographic order (q^k x n)."""
        if self._codewords is None:
            if self.q**self.k > MAX_EXHAUSTIVE_MESSAGES:
                raise CapacityError(f"{self.q}^{self.k} codewords exceed the exhaustive limit")
            cw = (word_array(self.k, self.q) @ self._g) % self.q
            cw.setflags(write=False)
            self._codewords = cw
        return self._codewords

    def min_distance(self) -> int:
        """Minimum weight over the q^k - 1 nonzero codewords."""
        if self._dmin is None:
            weights = (self.codewords()[1:] != 0).sum(axis=1)
            self._dmin = int(weights.min())
        return self._dmin

    @property
    def is_systematic(self) -> bool:
        return np.array_equal(self._g[:, : self.k], np.eye(self.k, dtype=np.int64))

    def systematic_form(self) -> tuple[LinearCode, tuple[int, ...]]:
        """Row-reduce to [I_k | P], moving pivot columns to the front.

        Returns the new code and ``perm`` such that column j of the new
        generator spans the same code as column ``perm[j]`` of the old one.
        """
        rref, pivots = row_reduce(self._g, self.q)
        rest = [c for c in range(self.n) if c not in pivots]
        perm = tuple(pivots + rest)
        g = rref[: self.k][:, list(perm)]
        return LinearCode(g, self.q, name=self.name), perm

    def parity_part(self, u: Word | str) -> Word | None:
        """Non-systematic tail of the codeword of ``u`` (None when n = k)."""
        if not self.is_systematic:
            raise ValueError("parity part needs a systematic generator")
        if self.n == self.k:
            return None
        c = self.encode(u)
        return Word(c.symbols[self.k :], self.q)

    def to_json(self) -> dict:
        return {"q": self.q, "k": self.k, "n": self.n, "generator": self._g.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> LinearCode:
        code = cls(data["generator"], int(data.get("q", 2)), name=data.get("name"))
        for key, val in (("k", code.k), ("n", code.n)):
            if key in data and int(data[key]) != val:
                raise DimensionError(f"declared {key}={data[key]} but generator gives {val}")
        return code


def encode_linear(code: LinearCode, u: Word | str) -> Word:
    return code.encode(u)


def min_distance_linear(code: LinearCode) -> int:
    return code.min_distance()


def systematic_form(code: LinearCode) -> tuple[LinearCode, tuple[int, ...]]:
    return code.systematic_form()


def repetition_code(n: int, q: int = 2) -> LinearCode:
    return LinearCode(np.ones((1, n), dtype=np.int64), q, name=f"repetition[{n}]")


def single_parity_code(k: int, q: int = 2) -> LinearCode:
    """[k+1, k, 2] code; the check symbol makes the coordinate sum zero."""
    g = np.hstack([np.eye(k, dtype=np.int64), np.full((k, 1), q - 1, dtype=np.int64)])
    return LinearCode(g, q, name=f"parity[{k + 1},{k}]")


def hamming_code(m: int, q: int = 2) -> LinearCode:
    """Systematic [(q^m-1)/(q-1), n-m, 3] Hamming code."""
    # columns of H: nonzero vectors whose first nonzero entry is 1
    cols = [v for v in itertools.product(range(q), repeat=m) if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1]
    # unit columns form the identity part of H; the rest give the parity block
    others = [c for c in cols if sum(1 for x in c if x) > 1]
    a = np.array(others, dtype=np.int64).T  # m x k
    k = a.shape[1]
    g = np.hstack([np.eye(k, dtype=np.int64), (-a.T) % q])
    return LinearCode(g, q, name=f"hamming[{g.shape[1]},{k}]")


def shortened_hamming_code(k: int, q: int = 2) -> LinearCode:
    """Shortest systematic distance-3 code of dimension k from a shortened Hamming code."""
    m = 2
    while (q**m - 1) // (q - 1) - m < k:
        m += 1
    full = hamming_code(m, q)
    g = full.generator[:k]
    keep = list(range(k)) + list(range(full.k, full.n))
    return LinearCode(g[:, keep], q, name=f"shortened-hamming[{k + m},{k}]")


# --------------------------------------------------------------------------
# explicit encodings


@dataclass(frozen=True)
class FccCode:
    """An explicit encoding message -> codeword with its declared parameters.

    ``codewords[i]`` is the codeword of the i-th message in lexicographic
    order, so the map is stored positionally rather than as a dict.
    """

    q: int
    k: int
    codewords: tuple[Word, ...]
    f: FunctionSpec
    d_d: int
    d_f: int | None = None
    provenance: str = "explicit"

    def __post_init__(self) -> None:
        cws = tuple(self.codewords)
        object.__setattr__(self, "codewords", cws)
        if len(cws) != self.q**self.k:
            raise DimensionError(f"need {self.q ** self.k} codewords, got {len(cws)}")
        n = len(cws[0])
        if any(len(c) != n or c.q != self.q for c in cws):
            raise DimensionError("codewords must share one length and field")
        if len(set(cws)) != len(cws):
            raise ValueError("encoding is not injective")
        if self.f.q != self.q or self.f.k != self.k:
            raise DimensionError("function domain does not match the message space")

    @property
    def n(self) -> int:
        return len(self.codewords[0])

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def messages(self) -> list[Word]:
        return all_words(self.k, self.q)

    @property
    def t_d(self) -> int:
        return (self.d_d - 1) // 2

    @property
    def t_f(self) -> int | None:
        return None if self.d_f is None else (self.d_f - 1) // 2

    def encode(self, u: Word | str) -> Word:
        u = as_word(u, self.q)
        if len(u) != self.k:
            raise DimensionError(f"message must have length {self.k}")
        return self.codewords[u.index()]

    def items(self) -> Iterator[tuple[Word, Word]]:
        return zip(self.messages, self.codewords)

    def as_array(self) -> np.ndarray:
        return np.array([c.symbols for c in self.codewords], dtype=np.int64)

    def with_params(self, d_d: int, d_f: int | None) -> FccCode:
        return FccCode(self.q, self.k, self.codewords, self.f, d_d, d_f, self.provenance)

    @classmethod
    def from_mapping(cls, mapping: dict, f: FunctionSpec, d_d: int, d_f: int | None = None, provenance: str = "explicit") -> FccCode:
        words = {as_word(m, f.q): as_word(c, f.q) for m, c in mapping.items()}
        missing = [str(u) for u in all_words(f.k, f.q) if u not in words]
        if missing:
            raise DimensionError(f"no codeword for messages {missing[:4]}")
        return cls(f.q, f.k, tuple(words[u] for u in all_words(f.k, f.q)), f, d_d, d_f, provenance)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "d_d": self.d_d,
            "d_f": self.d_f,
            "provenance": self.provenance,
            "function": self.f.to_json(),
            "entries": {str(u): str(c) for u, c in self.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> FccCode:
        f = FunctionSpec.from_json(data["function"])
        d_f = data.get("d_f")
        return cls.from_mapping(
            data["entries"], f, int(data["d_d"]), None if d_f is None else int(d_f), data.get("provenance", "explicit")
        )
