"""Ground-truth checks: pair sweeps, nearest-codeword decoding and error injection."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Hashable, Iterator

import numpy as np

from .gfcore import DimensionError, FccCode, FunctionSpec, Word, as_word, cross_distances, format_value, pairwise_distances

MAX_SWEEP_RECEIVED = 1 << 22
MAX_LISTED_VIOLATIONS = 64
_CHUNK = 4096


class _AmbiguousType:
    """Sentinel returned when nearest-codeword decoding ties."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Ambiguous"

    def __bool__(self) -> bool:
        return False


Ambiguous = _AmbiguousType()


@dataclass(frozen=True)
class PairViolation:
    u: Word
    v: Word
    distance: int
    required: int

    def to_json(self) -> dict:
        return {"u": str(self.u), "v": str(self.v), "distance": self.distance, "required": self.required}

    def __str__(self) -> str:
        return f"d({self.u}, {self.v}) = {self.distance} < {self.required}"


@dataclass(frozen=True)
class VerificationReport:
    is_valid: bool
    d_d: int
    d_f: int | None
    declared_d_d: int
    declared_d_f: int | None
    violations: tuple[PairViolation, ...]
    violation_count: int
    pairs_checked: int

    def to_json(self) -> dict:
        return {
            "is_valid": self.is_valid,
            "measured_d_d": self.d_d,
            "measured_d_f": self.d_f,
            "declared_d_d": self.declared_d_d,
            "declared_d_f": self.declared_d_f,
            "violation_count": self.violation_count,
            "violations": [v.to_json() for v in self.violations],
            "pairs_checked": self.pairs_checked,
        }

    def summary(self) -> str:
        head = "valid" if self.is_valid else f"INVALID ({self.violation_count} violating pairs)"
        d_f = "n/a" if self.d_f is None else self.d_f
        lines = [f"{head}: measured d_d={self.d_d}, d_f={d_f} over {self.pairs_checked} pairs"]
        lines += [f"  {v}" for v in self.violations[:8]]
        return "\n".join(lines)


def check_fcc(code: FccCode, f: FunctionSpec | None = None, d_d: int | None = None, d_f: int | None = None) -> VerificationReport:
    """Sweep every message pair against the data and function distance targets.

    Parameters default to those declared on the code. Measured d_f is None
    when f is constant, since no pair differs in value.
    """
    f = code.f if f is None else f
    if f.k != code.k or f.q != code.q:
        raise DimensionError("function domain does not match the code")
    d_d = code.d_d if d_d is None else d_d
    d_f = code.d_f if d_f is None else d_f
    dist = pairwise_distances(code.as_array(), code.q)
    labels = f.value_labels()
    m = dist.shape[0]
    iu, ju = np.triu_indices(m, k=1)
    pd = dist[iu, ju]
    differ = labels[iu] != labels[ju]
    required = np.full(pd.shape, d_d, dtype=np.int64)
    if d_f is not None:
        required = np.where(differ, max(d_f, d_d), d_d)
    bad = np.flatnonzero(pd < required)
    measured_dd = int(pd.min()) if pd.size else 0
    measured_df = int(pd[differ].min()) if differ.any() else None
    listed = tuple(
        PairViolation(code.messages[iu[b]], code.messages[ju[b]], int(pd[b]), int(required[b]))
        for b in bad[:MAX_LISTED_VIOLATIONS]
    )
    return VerificationReport(bad.size == 0, measured_dd, measured_df, d_d, d_f, listed, int(bad.size), int(pd.size))


# --------------------------------------------------------------------------
# decoding


def _nearest(code: FccCode, received: Word) -> np.ndarray:
    received = as_word(received, code.q)
    if len(received) != code.n:
        raise DimensionError(f"received word has length {len(received)}, code length is {code.n}")
    d = cross_distances(np.array([received.symbols]), code.as_array(), code.q)[0]
    return np.flatnonzero(d == d.min())


def decode_data(code: FccCode, received: Word | str) -> Word | _AmbiguousType:
    near = _nearest(code, as_word(received, code.q))
    if near.size > 1:
        return Ambiguous
    return code.messages[int(near[0])]


def decode_function(code: FccCode, f: FunctionSpec, received: Word | str) -> Hashable | _AmbiguousType:
    near = _nearest(code, as_word(received, code.q))
    values = {f.values[int(i)] for i in near}
    if len(values) > 1:
        return Ambiguous
    return values.pop()


# --------------------------------------------------------------------------
# error-injection sweeps


@dataclass
class SweepReport:
    mode: str
    t_d: int
    t_f: int
    trials: int = 0
    data_successes: int = 0
    data_failures: int = 0
    function_successes: int = 0
    function_failures: int = 0
    ambiguous: int = 0
    seed: int | None = None
    first_failures: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return self.data_failures + self.function_failures

    @property
    def clean(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "t_d": self.t_d,
            "t_f": self.t_f,
            "trials": self.trials,
            "data_successes": self.data_successes,
            "data_failures": self.data_failures,
            "function_successes": self.function_successes,
            "function_failures": self.function_failures,
            "ambiguous": self.ambiguous,
            "seed": self.seed,
            "first_failures": self.first_failures,
        }

    def summary(self) -> str:
        return (
            f"{self.mode}: {self.trials} received words; data {self.data_successes} ok / {self.data_failures} failed "
            f"(t_d={self.t_d}); function {self.function_successes} ok / {self.function_failures} failed "
            f"(t_f={self.t_f}); ambiguous ties {self.ambiguous}"
        )


def _ball_volume(n: int, t: int, q: int) -> int:
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(min(t, n) + 1))


def error_patterns(n: int, t: int, q: int = 2) -> Iterator[np.ndarray]:
    """Every error vector of weight at most t, as int arrays."""
    for w in range(min(t, n) + 1):
        for support in itertools.combinations(range(n), w):
            for values in itertools.product(range(1, q), repeat=w):
                e = np.zeros(n, dtype=np.int64)
                e[list(support)] = values
                yield e


def _score(report: SweepReport, code: FccCode, f: FunctionSpec, sent: np.ndarray, received: np.ndarray, weights: np.ndarray) -> None:
    """Decode a batch and add it to the report.

    ``sent`` holds message indices. Data decoding is scored for weights up
    to t_d and function decoding for weights up to t_f.
    """
    d = cross_distances(received, code.as_array(), code.q)
    best = d.min(axis=1, keepdims=True)
    at_min = d == best
    ties = at_min.sum(axis=1) > 1
    first = at_min.argmax(axis=1)
    labels = f.value_labels()
    lab = np.where(at_min, labels[None, :], -1)
    lab_max = lab.max(axis=1)
    lab_min = np.where(at_min, labels[None, :], labels.size + 1).min(axis=1)
    func_tie = lab_max != lab_min

    data_rows = weights <= report.t_d
    data_ok = (~ties) & (first == sent)
    func_ok = (~func_tie) & (lab_max == labels[sent])
    report.trials += int(received.shape[0])
    report.data_successes += int((data_ok & data_rows).sum())
    report.data_failures += int((~data_ok & data_rows).sum())
    func_rows = weights <= report.t_f
    report.function_successes += int((func_ok & func_rows).sum())
    report.function_failures += int((~func_ok & func_rows).sum())
    report.ambiguous += int(((ties & data_rows) | (func_tie & func_rows)).sum())
    fails = np.flatnonzero((~data_ok & data_rows) | (~func_ok & func_rows))
    for i in fails[: max(0, 8 - len(report.first_failures))]:
        report.first_failures.append(
            {"message": str(code.messages[sent[i]]), "received": "".join(map(str, received[i])), "weight": int(weights[i])}
        )


def exhaustive_error_sweep(
    code: FccCode, f: FunctionSpec | None, t_d: int, t_f: int, *, budget: int = MAX_SWEEP_RECEIVED
) -> SweepReport:
    """Inject every error of weight up to max(t_d, t_f) into every codeword."""
    f = code.f if f is None else f
    if t_d < 0 or t_f < 0:
        raise ValueError("error radii must be nonnegative")
    radius = max(t_d, t_f)
    total = _ball_volume(code.n, radius, code.q) * len(code.codewords)
    if total > budget:
        raise RuntimeError(f"{total} received words exceed the sweep budget {budget}; use monte_carlo_sweep")
    report = SweepReport("exhaustive", t_d, t_f)
    cw = code.as_array()
    patterns = np.array(list(error_patterns(code.n, radius, code.q)), dtype=np.int64).reshape(-1, code.n)
    pw = (patterns != 0).sum(axis=1)
    per = max(1, _CHUNK // max(1, patterns.shape[0]))
    for start in range(0, cw.shape[0], per):
        idx = np.arange(start, min(start + per, cw.shape[0]))
        received = ((cw[idx][:, None, :] + patterns[None, :, :]) % code.q).reshape(-1, code.n)
        sent = np.repeat(idx, patterns.shape[0])
        _score(report, code, f, sent, received, np.tile(pw, idx.size))
    return report


def _sample_ball(rng: np.random.Generator, n: int, t: int, q: int, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Uniform samples from the radius-t ball around zero."""
    t = min(t, n)
    sizes = np.array([math.comb(n, i) * (q - 1) ** i for i in range(t + 1)], dtype=np.float64)
    weights = rng.choice(t + 1, size=count, p=sizes / sizes.sum())
    errors = np.zeros((count, n), dtype=np.int64)
    for row, w in enumerate(weights):
        if w:
            pos = rng.choice(n, size=w, replace=False)
            errors[row, pos] = rng.integers(1, q, size=w)
    return errors, weights


def monte_carlo_sweep(
    code: FccCode, f: FunctionSpec | None, t_d: int, t_f: int, trials: int, seed: int = 0
) -> SweepReport:
    """Random codeword plus uniform error from the radius-max(t_d, t_f) ball, per trial."""
    f = code.f if f is None else f
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    report = SweepReport("monte-carlo", t_d, t_f, seed=seed)
    cw = code.as_array()
    radius = max(t_d, t_f)
    for start in range(0, trials, _CHUNK):
        count = min(_CHUNK, trials - start)
        sent = rng.integers(0, cw.shape[0], size=count)
        errors, weights = _sample_ball(rng, code.n, radius, code.q, count)
        _score(report, code, f, sent, (cw[sent] + errors) % code.q, weights)
    return report


def describe_value(value: Hashable | _AmbiguousType) -> str:
    return "Ambiguous" if value is Ambiguous else format_value(value)
