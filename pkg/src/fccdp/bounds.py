"""Redundancy bounds: ball counting, Plotkin and Hamming variants, bound suites.

All values are :class:`fractions.Fraction`. Integer rounding (ceiling for
lower bounds, floor for upper bounds on an integer quantity) happens only
when a :class:`BoundReport` picks its best entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .distmat import DistanceMatrix, build_cdrm, build_cfdm, build_drm_dp
from .dsearch import _Space, min_length_code, min_length_dcode, min_length_linear
from .gfcore import CapacityError, FunctionSpec, HammingWeight, LinearCode, Word

# --------------------------------------------------------------------------
# ball counting


def ball_size(n: int, t: int, q: int = 2) -> int:
    """|B(v, t)| in GF(q)^n; radii beyond n cover the whole space."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if t < 0:
        return 0
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(min(t, n) + 1))


def _binom_sum(n: int, upto: int, q: int = 2) -> int:
    # sum_{i=0}^{upto} C(n, i) (q-1)^i, empty when upto < 0
    if upto < 0 or n < 0:
        return 0
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(upto + 1))


def _comb(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def union2_dist1(n: int, t: int, q: int = 2) -> int:
    """|B(u,t) u B(v,t)| for d(u,v) = 1."""
    if n < 1 or t < 0:
        raise ValueError("need n >= 1 and t >= 0")
    return 2 * _binom_sum(n, t, q) - q * _binom_sum(n - 1, t - 1, q)


def inter2_dist2_binary(n: int, t: int, q: int = 2) -> int:
    """|B(u,t) n B(v,t)| for binary u, v with d(u,v) = 2."""
    if q != 2:
        raise ValueError("this count is only valid for q = 2")
    if n < 2 or t < 0:
        raise ValueError("need n >= 2 and t >= 0")
    return 2 * _binom_sum(n - 1, t - 1)


def union3_112_binary(n: int, t: int, q: int = 2) -> int:
    """Union of three binary balls whose centres have pairwise distances 1, 1, 2."""
    if q != 2:
        raise ValueError("this count is only valid for q = 2")
    if t < 1 or n < 2:
        raise ValueError("need t >= 1 and n >= 2")
    return 3 * _binom_sum(n, t) - 6 * _binom_sum(n - 1, t - 1) + _comb(n - 2, t - 1) + 4 * _binom_sum(n - 2, t - 2)


def union2_dist3_binary(n: int, t: int, q: int = 2) -> int:
    """|B(u,t) u B(v,t)| for binary u, v with d(u,v) = 3."""
    if q != 2:
        raise ValueError("this count is only valid for q = 2")
    if t < 2:
        raise ValueError("this count needs t >= 2")
    if n < 3:
        raise ValueError("need n >= 3")
    return 2 * _binom_sum(n, t) - 8 * _binom_sum(n - 3, t - 3) - 6 * _comb(n - 3, t - 2)


def union_size(centers: Sequence[Word | Sequence[int]], t: int, q: int = 2) -> int:
    """Enumerate the union of radius-t balls around explicit centres."""
    rows = np.array([tuple(c) for c in centers], dtype=np.int64)
    n = rows.shape[1]
    space = _Space(q, n)
    covered = np.zeros(space.size, dtype=bool)
    for row in rows:
        idx = int(np.dot(row, q ** np.arange(n - 1, -1, -1)))
        covered |= space.distances_from(idx) <= t
    return int(covered.sum())


def min_ball_union(n: int, t: int, q: int, ell: int, min_dist: int = 1, *, max_words: int = 1 << 16) -> int:
    """Smallest |union of ell radius-t balls| over centres pairwise >= min_dist apart.

    Exhaustive branch and bound with the first centre at zero and later
    centres canonical under the coordinate permutations that fix the
    earlier ones. Raises :class:`ValueError` when no placement exists.
    """
    if ell < 1:
        raise ValueError("need at least one centre")
    if q**n > max_words:
        raise CapacityError(f"{q}^{n} words exceed the exact-centre limit")
    space = _Space(q, n)
    balls: dict[int, np.ndarray] = {}

    def ball(a: int) -> np.ndarray:
        if a not in balls:
            balls[a] = space.distances_from(a) <= t
        return balls[a]

    best = [None]

    def rec(depth: int, covered: np.ndarray, allowed: np.ndarray, blocks: list[list[int]]) -> None:
        size = int(covered.sum())
        if best[0] is not None and size >= best[0]:
            return
        if depth == ell:
            best[0] = size
            return
        cand = allowed & space.canonical_mask(blocks, q > 2 and depth == 1)
        for a in np.flatnonzero(cand):
            a = int(a)
            nxt_allowed = allowed & (space.distances_from(a) >= min_dist)
            rec(depth + 1, covered | ball(a), nxt_allowed, space.refine(blocks, a))

    start_allowed = space.distances_from(0) >= min_dist
    rec(1, ball(0).copy(), start_allowed, space.refine([list(range(n))], 0))
    if best[0] is None:
        raise ValueError(f"no {ell} centres in GF({q})^{n} are pairwise {min_dist} apart")
    return best[0]


# --------------------------------------------------------------------------
# Plotkin-type bounds


def plotkin_irregular_entries(entries: np.ndarray, q: int = 2) -> Fraction:
    e = np.asarray(entries, dtype=np.int64)
    m = e.shape[0]
    if m < 2:
        return Fraction(0)
    a = m % q
    total = int(np.triu(e, 1).sum())
    return Fraction(2 * q * total, m * m * (q - 1) - a * (q - a))


def plotkin_irregular(D: DistanceMatrix | np.ndarray, q: int = 2) -> Fraction:
    """Lower bound on N(D) from averaging the pairwise distance per coordinate."""
    entries = D.entries if isinstance(D, DistanceMatrix) else np.asarray(D)
    return plotkin_irregular_entries(entries, q)


def plotkin_fcc_dp(k: int, q: int, L: int, d_d: int, d_f: int) -> Fraction:
    """Lower bound on the redundancy from the largest preimage size L."""
    if d_f <= d_d:
        raise ValueError(f"need d_f > d_d, got d_d={d_d}, d_f={d_f}")
    if not 1 <= L <= q**k:
        raise ValueError(f"L must lie in [1, {q ** k}]")
    return Fraction((L - 1) * d_d + (q**k - L) * d_f, q ** (k - 1) * (q - 1)) - k


def largest_preimage(f: FunctionSpec) -> int:
    return max(f.preimage_sizes().values())


def smallest_preimage(f: FunctionSpec) -> int:
    return min(f.preimage_sizes().values())


def hamming_weight_lower(t: int) -> Fraction:
    """Lower bound on the redundancy of a weight-protecting code (k > t)."""
    return Fraction(10 * t**3 + 30 * t**2 + 20 * t + 12, 3 * t**2 + 12 * t + 12)


def gv_length(entries: np.ndarray, q: int = 2, r_max: int = 4096) -> int:
    """Greedy-existence upper bound on N(D) for the given row order."""
    e = np.asarray(entries, dtype=np.int64)
    m = e.shape[0]
    if m < 2 or not e.any():
        return 0
    for r in range(int(e.max()), r_max + 1):
        vols = {}
        worst = 0
        for j in range(m):
            s = 0
            for i in range(j):
                d = int(e[i, j])
                if d not in vols:
                    vols[d] = ball_size(r, d - 1, q)
                s += vols[d]
            worst = max(worst, s)
        if q**r > worst:
            return r
    raise ValueError("no length up to r_max satisfies the greedy condition")


def asymptotic_code_length(M: int, D: int) -> Fraction | None:
    """Floor of 2D / (1 - 2 sqrt(ln D / D)), or None outside D >= 10, M <= D^2."""
    if D < 10 or M > D * D:
        return None
    return Fraction(math.floor(2 * D / (1 - 2 * math.sqrt(math.log(D) / D))))


def binary_log_redundancy(k: int, t: int) -> Fraction | None:
    """Floor of (t log k + t) / (1 - (t/k) log e), logs base 2; None if undefined."""
    if t < 1 or k < 2:
        return None
    denom = 1 - (t / k) * math.log2(math.e)
    if denom <= 0:
        return None
    return Fraction(math.floor((t * math.log2(k) + t) / denom))


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str  # "lower" or "upper"
    value: Fraction
    note: str = ""
    basis: str = ""

    @property
    def rounded(self) -> int:
        return math.ceil(self.value) if self.kind == "lower" else math.floor(self.value)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "value": str(self.value),
            "decimal": float(self.value),
            "rounded": self.rounded,
            "note": self.note,
            "basis": self.basis,
        }


@dataclass
class BoundReport:
    entries: list[BoundEntry] = field(default_factory=list)

    def add(self, name: str, kind: str, value: Fraction | int, note: str = "", basis: str = "") -> None:
        if kind not in ("lower", "upper"):
            raise ValueError(f"bad bound kind {kind!r}")
        self.entries.append(BoundEntry(name, kind, Fraction(value), note, basis))

    def extend(self, other: BoundReport) -> BoundReport:
        self.entries.extend(other.entries)
        return self

    def get(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    @property
    def lower(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.kind == "lower"]

    @property
    def upper(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.kind == "upper"]

    @property
    def best_lower(self) -> int | None:
        vals = [e.rounded for e in self.lower]
        return max(vals) if vals else None

    @property
    def best_upper(self) -> int | None:
        vals = [e.rounded for e in self.upper]
        return min(vals) if vals else None

    @property
    def tight(self) -> bool:
        return self.best_lower is not None and self.best_lower == self.best_upper

    def to_json(self) -> dict:
        return {
            "entries": [e.to_json() for e in self.entries],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
        }

    def table(self) -> str:
        rows = [("bound", "kind", "exact", "decimal", "rounded", "note")]
        for e in self.entries:
            rows.append((e.name, e.kind, str(e.value), f"{float(e.value):.4f}", str(e.rounded), e.note))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        lines.append(f"best lower: {self.best_lower}   best upper: {self.best_upper}")
        return "\n".join(lines)


# --------------------------------------------------------------------------
# bound suites


def _strict_parameters(q: int, k: int, t_d: int) -> int | None:
    """n with q^(n-k) equal to the radius-t_d ball volume, if such n exists."""
    n = k
    while q ** (n - k) < ball_size(n, t_d, q):
        n += 1
    return n if q ** (n - k) == ball_size(n, t_d, q) else None


def lower_bound_suite(
    f: FunctionSpec,
    t_d: int,
    t_f: int,
    sample_sets: Iterable[Sequence[Word | str]] | None = None,
    *,
    full_search_limit: int = 16,
    node_budget: int = 200_000,
) -> BoundReport:
    """Every applicable lower bound on the optimal redundancy r_f(k, t_d, t_f)."""
    if not 0 <= t_d <= t_f:
        raise ValueError(f"need 0 <= t_d <= t_f, got t_d={t_d}, t_f={t_f}")
    q, k, E = f.q, f.k, f.num_values
    d_d, d_f = 2 * t_d + 1, 2 * t_f + 1
    rep = BoundReport()
    rep.add("function-pair", "lower", 2 * t_f if E >= 2 else 0, "two adjacent messages with different values", "repetition argument")
    if q == 2 and 2 <= E <= k:
        rep.add("three-message", "lower", 2 * t_f + t_d, "binary, 2 <= E <= k", "three messages at distances 1, 1, 2")
    lin = min_length_linear(k, d_d, q)
    rep.add("data-distance", "lower", max(lin.lower - k, 0), f"N({q}^{k}, {d_d}) - k", "sphere packing and Singleton")
    for idx, sample in enumerate(sample_sets or ()):
        res = min_length_dcode(build_drm_dp(f, t_d, t_f, sample), q, r_max=64, node_budget=node_budget)
        rep.add(f"sample-{idx}", "lower", res.length, f"{len(sample)} messages, {res.status.value}", "sub-matrix search")
    if q**k <= full_search_limit:
        res = min_length_dcode(build_drm_dp(f, t_d, t_f), q, r_max=64, node_budget=node_budget)
        rep.add("full-search", "lower", res.length, res.status.value, "search on the full requirement matrix")
    if isinstance(f, HammingWeight) and q == 2 and k > t_f:
        rep.add("weight-function", "lower", hamming_weight_lower(t_f), f"t = {t_f}", "closed form for the weight function")
    if t_f > t_d:
        L = largest_preimage(f)
        rep.add("plotkin-dp", "lower", plotkin_fcc_dp(k, q, L, d_d, d_f), f"L = {L}", "total distance averaging")
    if q**k <= 4096:
        rep.add("plotkin-matrix", "lower", plotkin_irregular(build_drm_dp(f, t_d, t_f), q), "", "irregular Plotkin on the full matrix")
    if t_f > t_d and E >= 2:
        n_perfect = _strict_parameters(q, k, t_d)
        if n_perfect is not None:
            rep.add("perfect-length", "lower", n_perfect - k + 1, f"perfect parameters n = {n_perfect}", "connected minimum-distance graph")
        rep.add("mds-length", "lower", d_d, "strict code cannot meet Singleton", "connected minimum-distance graph")
    return rep


def locally_bounded_lambda(f: FunctionSpec, rho: int) -> int | None:
    """Smallest lambda for which f is (rho, lambda)-bounded with contiguous balls."""
    from .construct import is_contiguous, max_ball_values

    lam = max_ball_values(f, rho)
    return lam if is_contiguous(f, rho) else None


def upper_bound_suite(
    f: FunctionSpec,
    code: LinearCode,
    t_d: int,
    t_f: int,
    *,
    full_search_limit: int = 256,
    node_budget: int = 200_000,
) -> BoundReport:
    """Every applicable upper bound on r_f(k, t_d, t_f) given an inner code."""
    if not 0 <= t_d <= t_f:
        raise ValueError(f"need 0 <= t_d <= t_f, got t_d={t_d}, t_f={t_f}")
    if code.k != f.k or code.q != f.q:
        raise ValueError("inner code does not match the message space")
    if code.min_distance() < 2 * t_d + 1:
        raise ValueError(f"inner code has distance {code.min_distance()} < {2 * t_d + 1}")
    from .construct import is_locally_bounded

    q, k, E = f.q, f.k, f.num_values
    extra = code.n - k
    gap = 2 * (t_f - t_d)
    rep = BoundReport()

    if q**k <= full_search_limit:
        res = min_length_dcode(build_cdrm(code, f, t_f), q, r_max=64, node_budget=node_budget)
        if res.exact:
            rep.add("coded-matrix", "upper", res.length + extra, f"N = {res.length}, n - k = {extra}", "lifted coded requirement search")
    res = min_length_dcode(build_cfdm(code, f, t_f), q, r_max=64, node_budget=node_budget)
    if res.exact:
        rep.add("coded-values", "upper", res.length + extra, f"N = {res.length}, n - k = {extra}", "value-indexed coded search")
    if gap == 0:
        rep.add("cap", "upper", extra, "t_f = t_d", "plain inner code")
    else:
        cap = min_length_code(E, gap, q, r_max=64, node_budget=node_budget)
        if cap.exact:
            rep.add("cap", "upper", cap.length + extra, f"N({E}, {gap}) = {cap.length}", "coded entries never exceed 2(t_f - t_d)")
        asym = asymptotic_code_length(E, gap)
        if asym is not None:
            rep.add("asymptotic", "upper", asym + extra, f"D = {gap}, M = {E}", "large-distance code existence")
        if q == 2 and cap.exact:
            log_r = binary_log_redundancy(k, t_d)
            if log_r is not None:
                rep.add("binary-log", "upper", cap.length + log_r, f"t_d = {t_d}", "short-redundancy binary codes")
        if is_locally_bounded(f, 2 * t_f, 2):
            rep.add("locally-binary", "upper", extra + gap, "2t_f-locally binary", "two-word tail")
        lam = locally_bounded_lambda(f, 2 * t_f)
        if lam is not None and 3 <= lam < E:
            tail = min_length_code(lam, gap, q, r_max=64, node_budget=node_budget)
            if tail.exact:
                rep.add("locally-bounded", "upper", extra + tail.length, f"lambda = {lam}", "colour-indexed tail")
        if isinstance(f, HammingWeight):
            tail = min_length_code(2 * t_f + 1, gap, q, r_max=64, node_budget=node_budget)
            if tail.exact:
                rep.add("weight-function", "upper", extra + tail.length, f"N({2 * t_f + 1}, {gap}) = {tail.length}", "weight-residue tail")
    if q**k <= 4096:
        rep.add("gv-matrix", "upper", gv_length(build_drm_dp(f, t_d, t_f).entries, q), "", "greedy existence on the full matrix")
        rep.add("gv-coded", "upper", gv_length(build_cdrm(code, f, t_f).entries, q) + extra, "", "greedy existence on the coded matrix")
    return rep


# --------------------------------------------------------------------------
# Hamming-type feasibility


@dataclass(frozen=True)
class Feasibility:
    n: int
    feasible: bool
    union: int
    method: str
    relaxed: bool = False

    def to_json(self) -> dict:
        return {"n": self.n, "feasible": self.feasible, "union": self.union, "method": self.method, "relaxed": self.relaxed}


def _union_lower(n: int, t: int, q: int, ell: int, exact: bool) -> tuple[int, str, bool]:
    if exact:
        return min_ball_union(n, t, q, ell), "exact centres", False
    if ell == 1:
        return ball_size(n, t, q), "single ball", False
    if t == 0:
        return ell, "distinct points", False
    if ell == 2:
        return union2_dist1(n, t, q), "two adjacent balls", False
    if q == 2 and n >= 2:
        return union3_112_binary(n, t), "three balls at 1,1,2", True
    return union2_dist1(n, t, q), "two adjacent balls", True


def hamming_feasible_n(f: FunctionSpec, t: int, n: int, *, exact: bool = False) -> Feasibility:
    """Necessary condition for an (f, t) code of length n: E * |min union| <= q^n."""
    q, E = f.q, f.num_values
    ell = smallest_preimage(f)
    if ell > q**n:
        return Feasibility(n, False, 0, "too few words")
    try:
        union, method, relaxed = _union_lower(n, t, q, ell, exact)
    except ValueError:
        return Feasibility(n, False, 0, "no centre placement")
    return Feasibility(n, E * union <= q**n, union, method, relaxed)


def smallest_feasible_n(f: FunctionSpec, t: int, *, exact: bool = False, n_max: int = 256) -> int:
    for n in range(f.k, n_max + 1):
        if hamming_feasible_n(f, t, n, exact=exact).feasible:
            return n
    raise ValueError(f"no length up to {n_max} passes")


def hamming_feasible_n_dp(f: FunctionSpec, d_d: int, t_f: int, n: int, *, exact: bool = False) -> Feasibility:
    """Same test with the class centres constrained to pairwise distance >= d_d."""
    q, E = f.q, f.num_values
    ell = smallest_preimage(f)
    t_d = (d_d - 1) // 2
    if t_f < t_d:
        raise ValueError("need t_f >= t_d")
    if exact:
        try:
            union, method, relaxed = min_ball_union(n, t_f, q, ell, d_d), "exact centres", False
        except ValueError:
            return Feasibility(n, False, 0, "no centre placement")
    elif ell == 1:
        union, method, relaxed = ball_size(n, t_f, q), "single ball", False
    elif ell == 2 and q == 2 and d_d == 3 and t_f >= 2 and n >= 3:
        union, method, relaxed = union2_dist3_binary(n, t_f), "two balls at distance 3", False
    else:
        union, method, relaxed = ell * ball_size(n, t_d, q), "disjoint data balls", True
    return Feasibility(n, E * union <= q**n, union, method, relaxed)


def smallest_feasible_n_dp(f: FunctionSpec, d_d: int, t_f: int, *, exact: bool = False, n_max: int = 256) -> int:
    for n in range(f.k, n_max + 1):
        if hamming_feasible_n_dp(f, d_d, t_f, n, exact=exact).feasible:
            return n
    raise ValueError(f"no length up to {n_max} passes")
