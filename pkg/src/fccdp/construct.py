"""Code constructions.

Every construction here is systematic concatenation: a message u is sent as
``(c_u, p_u)`` where ``c_u = uG`` comes from a linear code protecting the data
and the tail ``p_u`` adds distance between messages whose function values
differ. The constructions only differ in how the tail is chosen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Sequence

import numpy as np

from .distmat import build_cdrm, build_cfdm, build_drm_dp
from .dsearch import find_violation, min_length_code, min_length_dcode
from .gfcore import (
    DimensionError,
    FccCode,
    FunctionSpec,
    HammingWeight,
    LinearCode,
    LinearMap,
    Word,
    all_words,
    as_word,
    format_value,
    kernel_of_linear_map,
    pairwise_distances,
    value_sort_key,
    word_array,
)

# --------------------------------------------------------------------------
# function balls and colourings


@dataclass(frozen=True)
class FunctionBall:
    center: Word
    radius: int
    values: frozenset

    def __len__(self) -> int:
        return len(self.values)

    def sorted_values(self, order: Sequence[Hashable] | None = None) -> list:
        if order is None:
            return sorted(self.values, key=value_sort_key)
        pos = {v: i for i, v in enumerate(order)}
        return sorted(self.values, key=pos.__getitem__)


def _message_distances(f: FunctionSpec) -> np.ndarray:
    return pairwise_distances(word_array(f.k, f.q), f.q)


def _membership(f: FunctionSpec, rho: int) -> np.ndarray:
    """Row u, column i: does value i of f.image occur within distance rho of u."""
    near = (_message_distances(f) <= rho).astype(np.int64)
    labels = f.value_labels()
    onehot = np.zeros((labels.size, f.num_values), dtype=np.int64)
    onehot[np.arange(labels.size), labels] = 1
    return (near @ onehot) > 0


def function_ball(f: FunctionSpec, u: Word | str, rho: int) -> FunctionBall:
    """The set of values f takes within distance rho of u."""
    if rho < 0:
        raise ValueError("radius must be nonnegative")
    u = as_word(u, f.q)
    if len(u) != f.k:
        raise DimensionError(f"message must have length {f.k}")
    words = word_array(f.k, f.q)
    dist = (words != np.array(u.symbols)).sum(axis=1)
    vals = {f.values[i] for i in np.flatnonzero(dist <= rho)}
    return FunctionBall(u, rho, frozenset(vals))


def max_ball_values(f: FunctionSpec, rho: int) -> int:
    """max over u of |B_f(u, rho)|."""
    return int(_membership(f, rho).sum(axis=1).max())


def is_locally_bounded(f: FunctionSpec, rho: int, lam: int) -> bool:
    """True when every function ball of radius rho holds at most lam values."""
    if rho < 0 or lam < 1:
        raise ValueError("need rho >= 0 and lam >= 1")
    return max_ball_values(f, rho) <= lam


def is_locally_binary(f: FunctionSpec, rho: int) -> bool:
    return is_locally_bounded(f, rho, 2)


def _order_positions(f: FunctionSpec, value_order: Sequence[Hashable] | None) -> np.ndarray:
    """Position of each image value (in f.image order) inside value_order."""
    if value_order is None:
        return np.arange(f.num_values)
    order = [tuple(v) if isinstance(v, list) else v for v in value_order]
    if sorted(order, key=value_sort_key) != list(f.image):
        raise ValueError("value order must list every image value exactly once")
    pos = {v: i for i, v in enumerate(order)}
    return np.array([pos[v] for v in f.image], dtype=np.int64)


def contiguity_violation(f: FunctionSpec, rho: int, value_order: Sequence[Hashable] | None = None) -> Word | None:
    """First message whose function ball is not a contiguous run of the order."""
    member = _membership(f, rho)
    ranks = _order_positions(f, value_order)
    reordered = np.zeros_like(member)
    reordered[:, ranks] = member
    for idx, row in enumerate(reordered):
        present = np.flatnonzero(row)
        if present[-1] - present[0] + 1 != present.size:
            return Word.from_index(idx, f.k, f.q)
    return None


def is_contiguous(f: FunctionSpec, rho: int, value_order: Sequence[Hashable] | None = None) -> bool:
    return contiguity_violation(f, rho, value_order) is None


@dataclass(frozen=True)
class ColorMap:
    """Colour per message (lexicographic order) separating nearby differing values."""

    lam: int
    rho: int
    colors: tuple[int, ...]
    value_order: tuple

    def __call__(self, u: Word | str) -> int:
        return self.colors[as_word(u).index() if isinstance(u, str) else u.index()]


def color_map(
    f: FunctionSpec, rho: int, lam: int, value_order: Sequence[Hashable] | None = None
) -> ColorMap:
    """Colour u by (rank of f(u) in the order) mod lam.

    Needs every radius-rho function ball to hold at most lam values and to
    be contiguous in the order; then two messages within distance rho with
    different values have ranks differing by 1..lam-1 and so differ in colour.
    """
    if not is_locally_bounded(f, rho, lam):
        raise ValueError(f"f is not ({rho}, {lam})-bounded")
    bad = contiguity_violation(f, rho, value_order)
    if bad is not None:
        raise ValueError(f"function ball around {bad} is not contiguous in the value order")
    ranks = _order_positions(f, value_order)
    colors = tuple(int(c) for c in ranks[f.value_labels()] % lam)
    order = tuple(value_order) if value_order is not None else tuple(f.image)
    cmap = ColorMap(lam, rho, colors, order)
    if not is_proper_coloring(f, cmap):
        raise AssertionError("colouring is improper despite the contiguity check")
    return cmap


def is_proper_coloring(f: FunctionSpec, cmap: ColorMap) -> bool:
    dist = _message_distances(f)
    labels = f.value_labels()
    colors = np.array(cmap.colors)
    clash = (dist <= cmap.rho) & (labels[:, None] != labels[None, :]) & (colors[:, None] == colors[None, :])
    return not clash.any()


# --------------------------------------------------------------------------
# generic two-step construction

ParityInput = Mapping | Sequence | Callable | None


def _require_systematic(code: LinearCode) -> None:
    if not code.is_systematic:
        raise ValueError("inner code must have a systematic generator [I | P]; see LinearCode.systematic_form")


def _parity_list(parity: ParityInput, f_or_k: FunctionSpec, q: int) -> list[Word | None]:
    messages = all_words(f_or_k.k, q)
    if parity is None:
        return [None] * len(messages)
    if callable(parity) and not isinstance(parity, Mapping):
        raw = [parity(u) for u in messages]
    elif isinstance(parity, Mapping):
        lookup = {as_word(key, q): v for key, v in parity.items()}
        missing = [str(u) for u in messages if u not in lookup]
        if missing:
            raise DimensionError(f"parity map misses messages {missing[:4]}")
        raw = [lookup[u] for u in messages]
    else:
        raw = list(parity)
        if len(raw) != len(messages):
            raise DimensionError(f"need {len(messages)} parities, got {len(raw)}")
    out = [None if (p is None or p == "") else as_word(p, q) for p in raw]
    lengths = {0 if p is None else len(p) for p in out}
    if len(lengths) != 1:
        raise DimensionError("all parities must share one length")
    return out


def construct_two_step(
    code: LinearCode,
    parity: ParityInput,
    f: FunctionSpec,
    *,
    d_d: int | None = None,
    d_f: int | None = None,
    provenance: str = "two-step",
) -> FccCode:
    """Encode u as (uG, parity(u)).

    ``parity`` may be a dict keyed by message, a list in lexicographic
    message order, a callable, or None for no tail. ``d_d`` defaults to the
    inner code's minimum distance; ``d_f`` is recorded but not assumed.
    """
    _require_systematic(code)
    if code.k != f.k or code.q != f.q:
        raise DimensionError("inner code does not match the message space")
    tails = _parity_list(parity, f, f.q)
    cw = code.codewords()
    words = []
    for i, tail in enumerate(tails):
        c = Word(tuple(int(x) for x in cw[i]), f.q)
        words.append(c if tail is None else c.concat(tail))
    return FccCode(f.q, f.k, tuple(words), f, code.min_distance() if d_d is None else d_d, d_f, provenance)


def value_indexed_parities(code: LinearCode, f: FunctionSpec, t_f: int, **search) -> list[Word | None]:
    """Tails from a shortest D-code of the coded value matrix, one word per value."""
    res = min_length_dcode(build_cfdm(code, f, t_f), f.q, **search)
    if not res.exact:
        raise RuntimeError(f"value matrix search did not finish ({res.status.value}, length >= {res.length})")
    labels = f.value_labels()
    if res.length == 0:
        return [None] * labels.size
    return [res.witness[i] for i in labels]


def message_indexed_parities(code: LinearCode, f: FunctionSpec, t_f: int, **search) -> list[Word | None]:
    """Tails from a shortest D-code of the full coded requirement matrix."""
    res = min_length_dcode(build_cdrm(code, f, t_f), f.q, **search)
    if not res.exact:
        raise RuntimeError(f"coded matrix search did not finish ({res.status.value}, length >= {res.length})")
    if res.length == 0:
        return [None] * f.q**f.k
    return list(res.witness)


def construct_two_step_search(
    code: LinearCode, f: FunctionSpec, t_d: int, t_f: int, *, per_message: bool = False, **search
) -> FccCode:
    """Two-step construction with the tail found by exact search."""
    if code.min_distance() < 2 * t_d + 1:
        raise ValueError(f"inner code distance {code.min_distance()} < {2 * t_d + 1}")
    code = code if code.is_systematic else code.systematic_form()[0]
    finder = message_indexed_parities if per_message else value_indexed_parities
    tails = finder(code, f, t_f, **search)
    return construct_two_step(code, tails, f, d_d=2 * t_d + 1, d_f=2 * t_f + 1, provenance="two-step")


def lift_dcode(code: LinearCode, P2: Sequence[Word | str], f: FunctionSpec, t_d: int, t_f: int) -> list[Word]:
    """Prefix each coded-matrix parity with the inner code's parity part.

    Returns the words (w_u, p_u) in lexicographic message order and checks
    them against the full data-and-function requirement matrix.
    """
    _require_systematic(code)
    if code.min_distance() < 2 * t_d + 1:
        raise ValueError(f"inner code distance {code.min_distance()} < {2 * t_d + 1}")
    tails = _parity_list(list(P2), f, f.q)
    cw = code.codewords()
    lifted = []
    for i, tail in enumerate(tails):
        w = tuple(int(x) for x in cw[i, code.k :])
        t = () if tail is None else tail.symbols
        if not w and not t:
            raise ValueError("lifted parities would be empty; nothing to lift")
        lifted.append(Word(w + t, f.q))
    bad = find_violation(lifted, build_drm_dp(f, t_d, t_f), f.q)
    if bad is not None:
        raise ValueError(f"lifted parities violate the requirement matrix at {bad}")
    return lifted


# --------------------------------------------------------------------------
# specialised constructions


def _value_rank(f: FunctionSpec, value_order: Sequence[Hashable] | None) -> np.ndarray:
    """Rank of f(u) in the chosen order, per message."""
    return _order_positions(f, value_order)[f.value_labels()]


def construct_locally_binary(
    f: FunctionSpec,
    code: LinearCode,
    d_f: int,
    *,
    d_d: int | None = None,
    value_order: Sequence[Hashable] | None = None,
) -> FccCode:
    """Append d_f - d_d ones when f(u) is the largest value near u, else zeros."""
    _require_systematic(code)
    dist = code.min_distance()
    d_d = dist if d_d is None else d_d
    if dist < d_d:
        raise ValueError(f"inner code distance {dist} < d_d={d_d}")
    if d_f <= d_d:
        raise ValueError(f"need d_f > d_d, got d_d={d_d}, d_f={d_f}")
    rho = d_f - 1
    if not is_locally_binary(f, rho):
        raise ValueError(f"f is not {rho}-locally binary")
    member = _membership(f, rho)
    ranks = _order_positions(f, value_order)
    own = _value_rank(f, value_order)
    # rank of the largest value present in each ball
    top = np.where(member, ranks[None, :], -1).max(axis=1)
    width = d_f - d_d
    one, zero = Word((1,) * width, f.q), Word((0,) * width, f.q)
    tails = [one if own[i] == top[i] else zero for i in range(own.size)]
    return construct_two_step(code, tails, f, d_d=d_d, d_f=d_f, provenance="locally-binary")


def _auxiliary_code(size: int, distance: int, q: int, words: Sequence[Word | str] | None) -> list[Word]:
    if words is None:
        res = min_length_code(size, distance, q)
        if not res.exact:
            raise RuntimeError(f"could not settle N({size}, {distance})")
        if res.length == 0:
            raise ValueError("auxiliary code would be empty")
        return list(res.witness)
    out = [as_word(w, q) for w in words]
    if len(out) < size:
        raise ValueError(f"auxiliary code has {len(out)} words, need {size}")
    d = pairwise_distances(np.array([w.symbols for w in out]), q)
    np.fill_diagonal(d, distance)
    if d.min() < distance:
        raise ValueError(f"auxiliary code distance {int(d.min())} < {distance}")
    return out


def construct_locally_bounded(
    f: FunctionSpec,
    code: LinearCode,
    t_d: int,
    t_f: int,
    *,
    color: ColorMap | None = None,
    aux: Sequence[Word | str] | None = None,
) -> FccCode:
    """Append the auxiliary codeword indexed by a proper colour of u."""
    _require_systematic(code)
    if t_f <= t_d:
        raise ValueError("need t_f > t_d")
    if code.min_distance() < 2 * t_d + 1:
        raise ValueError(f"inner code distance {code.min_distance()} < {2 * t_d + 1}")
    if color is None:
        color = color_map(f, 2 * t_f, max_ball_values(f, 2 * t_f))
    if color.rho < 2 * t_f or not is_proper_coloring(f, ColorMap(color.lam, 2 * t_f, color.colors, color.value_order)):
        raise ValueError(f"colouring is not proper at radius {2 * t_f}")
    words = _auxiliary_code(color.lam, 2 * (t_f - t_d), f.q, aux)
    tails = [words[c] for c in color.colors]
    return construct_two_step(code, tails, f, d_d=2 * t_d + 1, d_f=2 * t_f + 1, provenance="locally-bounded")


def construct_hamming_weight(
    code: LinearCode,
    t_d: int,
    t_f: int,
    *,
    aux: Sequence[Word | str] | None = None,
    f: FunctionSpec | None = None,
) -> FccCode:
    """Append the auxiliary codeword indexed by wt(u) mod (2t_f + 1)."""
    _require_systematic(code)
    if t_f <= t_d:
        raise ValueError("need t_f > t_d")
    if code.min_distance() < 2 * t_d + 1:
        raise ValueError(f"inner code distance {code.min_distance()} < {2 * t_d + 1}")
    f = HammingWeight(code.q, code.k) if f is None else f
    words = _auxiliary_code(2 * t_f + 1, 2 * (t_f - t_d), code.q, aux)
    weights = (word_array(code.k, code.q) != 0).sum(axis=1)
    tails = [words[int(w) % (2 * t_f + 1)] for w in weights]
    return construct_two_step(code, tails, f, d_d=2 * t_d + 1, d_f=2 * t_f + 1, provenance="hamming-weight")


# --------------------------------------------------------------------------
# linear functions


def concatenated_generator(f: LinearMap, code: LinearCode, outer: LinearCode) -> LinearCode:
    """Generator of u -> (uG_C, f(u) G_D), i.e. [G_C | A^T G_D]."""
    if outer.k != f.ell:
        raise DimensionError(f"outer code dimension {outer.k} != number of function outputs {f.ell}")
    if code.k != f.k or code.q != f.q or outer.q != f.q:
        raise DimensionError("codes and function disagree on field or dimension")
    tail = (f.as_array().T @ outer.generator) % f.q
    return LinearCode(np.hstack([code.generator, tail]), f.q)


def construct_linear_fcc(f: LinearMap, code: LinearCode, outer: LinearCode) -> FccCode:
    """Concatenate data encoding with an encoding of the function value.

    Codewords of messages with different values differ in both halves, so
    d_f = d(C) + d(D) while d_d = d(C).
    """
    if not isinstance(f, LinearMap):
        raise TypeError("the concatenation needs a linear function")
    gen = concatenated_generator(f, code, outer)
    words = tuple(Word(tuple(int(x) for x in row), f.q) for row in gen.codewords())
    d_d = code.min_distance()
    return FccCode(f.q, f.k, words, f, d_d, d_d + outer.min_distance(), "linear")


def is_linear_code(words: Sequence[Word]) -> bool:
    """Closure of a word set under addition and scalar multiplication."""
    if not words:
        return False
    q = words[0].q
    pool = set(words)
    if Word.zero(len(words[0]), q) not in pool:
        return False
    for a in words:
        for c in range(2, q):
            if a.scale(c) not in pool:
                return False
        for b in words:
            if a + b not in pool:
                return False
    return True


@dataclass(frozen=True)
class CosetReport:
    subcode: tuple[Word, ...]
    basis: tuple[Word, ...]
    min_distance: int
    coset_distance: float

    def to_json(self) -> dict:
        return {
            "subcode": [str(w) for w in self.subcode],
            "basis": [str(w) for w in self.basis],
            "min_distance": self.min_distance,
            "coset_distance": None if math.isinf(self.coset_distance) else int(self.coset_distance),
        }


def coset_subcode_distance(code: FccCode) -> CosetReport:
    """Subcode over Ker(f), minimum distance and minimum distance between its cosets.

    The coset distance is the least weight of a codeword outside the
    subcode, since every codeword of a non-trivial coset lies outside it.
    It is ``math.inf`` when the subcode is the whole code.
    """
    if not isinstance(code.f, LinearMap):
        raise TypeError("coset analysis needs a linear function")
    if not is_linear_code(list(code.codewords)):
        raise ValueError("code is not linear")
    kbasis, kernel = kernel_of_linear_map(code.f)
    subcode = tuple(code.encode(u) for u in kernel)
    basis = tuple(code.encode(u) for u in kbasis)
    inside = set(subcode)
    weights = [sum(1 for s in c.symbols if s) for c in code.codewords]
    nonzero = [w for w in weights if w > 0]
    outside = [w for c, w in zip(code.codewords, weights) if c not in inside]
    return CosetReport(subcode, basis, min(nonzero), min(outside) if outside else math.inf)
