"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line in ``RESULTS``; ``conftest.py`` prints
them in the terminal summary.
"""

from __future__ import annotations

import contextlib
import itertools
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from fccdp import catalog as cat
from fccdp.bounds import (
    inter2_dist2_binary,
    lower_bound_suite,
    plotkin_fcc_dp,
    smallest_feasible_n,
    smallest_feasible_n_dp,
    union2_dist1,
    union2_dist3_binary,
    union3_112_binary,
    upper_bound_suite,
)
from fccdp.construct import (
    construct_linear_fcc,
    construct_locally_binary,
    construct_locally_bounded,
    construct_two_step,
    construct_two_step_search,
    coset_subcode_distance,
    is_linear_code,
    lift_dcode,
)
from fccdp.distmat import build_drm, build_drm_dp
from fccdp.dsearch import is_dcode, min_length_dcode
from fccdp.gfcore import FccCode, LinearCode, TableFunction, Word, hamming_code, repetition_code, shortened_hamming_code
from fccdp.mdgraph import Verdict, build_min_distance_graph, strict_fcc_feasible
from fccdp.verify import check_fcc, exhaustive_error_sweep

from oracles import ball, dist

RESULTS: dict[int, str] = {}


@contextlib.contextmanager
def criterion(number: int, title: str):
    try:
        yield
    except BaseException as exc:
        reason = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        RESULTS[number] = f"FAIL criterion {number:2d}: {title} -- {reason}"
        raise
    RESULTS[number] = f"PASS criterion {number:2d}: {title}"


def test_criterion_01_drm_and_dcode():
    with criterion(1, "requirement matrices and N(D) = 3 for the 4x4 matrix"):
        t0 = time.perf_counter()
        f = cat.ex1_function()
        full = build_drm(f, 1)
        assert full.tolist() == cat.EX1_DRM_FULL
        assert build_drm(f, 1, ["00", "01", "11"]).tolist() == cat.EX1_DRM_124
        assert build_drm(f, 1, ["00", "01", "10"]).tolist() == cat.EX1_DRM_123
        res = min_length_dcode(full)
        assert res.exact and res.length == 3
        assert is_dcode(res.witness, full)[0]
        assert time.perf_counter() - t0 < 1.0


def test_criterion_02_two_step_weight_code():
    with criterion(2, "two-step code for the weight of 3-bit words, exact distances"):
        t0 = time.perf_counter()
        f, C = cat.weight3(), cat.code_633()
        code = construct_two_step(C, [cat.EX5_DCODE_BY_WEIGHT[v] for v in f.values], f, d_d=3, d_f=5)
        assert {str(u): str(c) for u, c in code.items()} == cat.EX5_CODE
        rep = check_fcc(code)
        trad = check_fcc(FccCode.from_mapping(cat.EX5_TRADITIONAL, f, 3, 5))
        assert trad.d_d == 2, f"traditional code measured d_d={trad.d_d}"
        assert rep.d_f == 5, f"measured d_f={rep.d_f}"
        assert rep.d_d == 3, f"measured d_d={rep.d_d}, expected exactly 3"
        assert time.perf_counter() - t0 < 1.0


def test_criterion_03_lifting_and_optimality():
    with criterion(3, "lifted parities, distance table and r_f(3,1,2) = 6"):
        f, C = cat.weight3(), cat.code_633()
        lifted = lift_dcode(C, [cat.EX5_DCODE_BY_WEIGHT[v] for v in f.values], f, 1, 2)
        order = [Word.parse(u).index() for u in cat.ORDER_K3_WEIGHT]
        words = [lifted[i] for i in order]
        assert [str(w) for w in words] == list(cat.EX7_PARITIES)
        table = [[dist(a.symbols, b.symbols) for b in words] for a in words]
        assert table == cat.EX7_DISTANCES
        lower = lower_bound_suite(f, 1, 2)
        assert lower.get("weight-function").value == Fraction(21, 4) == Fraction(cat.EX7_LOWER)
        assert lower.best_lower == 6 == len(words[0])
        assert check_fcc(construct_two_step(C, [w.symbols[3:] for w in lifted], f, d_d=3, d_f=5)).is_valid


def test_criterion_04_locally_binary_optimal():
    with criterion(4, "locally binary parity code over [7,4,3] is optimal at 5"):
        t0 = time.perf_counter()
        f = cat.parity4()
        code = construct_locally_binary(f, cat.hamming_743(), 5)
        assert {str(u): str(c) for u, c in code.items()} == cat.PARITY4_CODE
        assert check_fcc(code).is_valid
        lower = lower_bound_suite(f, 1, 2)
        assert lower.get("three-message").rounded == 2 * 2 + 1
        assert lower.best_lower == code.redundancy == 5
        assert time.perf_counter() - t0 < 1.0


def test_criterion_05_linear_code_and_cosets():
    with criterion(5, "linear [10,3,4] code, coset distance 6, closure"):
        t0 = time.perf_counter()
        code = construct_linear_fcc(cat.linear_function(), cat.code_734(), cat.code_322())
        assert {str(u): str(c) for u, c in code.items()} == cat.LINEAR_CODE
        rep = coset_subcode_distance(code)
        assert check_fcc(code).d_d == 4 and rep.min_distance == 4 and rep.coset_distance == 6
        pool = set(code.codewords)
        assert all(a + b in pool for a, b in itertools.product(code.codewords, repeat=2))
        assert is_linear_code(list(code.codewords))
        assert time.perf_counter() - t0 < 1.0


def test_criterion_06_plotkin_cells():
    with criterion(6, "eight Plotkin cells within 0.08 and with equal ceilings"):
        cells = [(6, row) for row in cat.PLOTKIN_WEIGHT4] + [(15, row) for row in cat.PLOTKIN_OR4]
        bad = []
        for L, (d_d, d_f, printed, ceiling) in cells:
            v = plotkin_fcc_dp(4, 2, L, d_d, d_f)
            assert isinstance(v, Fraction)
            if not (abs(float(v) - printed) <= 0.08 and math.ceil(v) == ceiling):
                bad.append(f"L={L} d_d={d_d}: {v} = {float(v)} vs printed {printed}")
        assert not bad, "; ".join(bad)


def test_criterion_07_hamming_type_lengths():
    with criterion(7, "feasible lengths 6 and 9, printed codes valid, n >= 9 for the linear map"):
        pos, g = cat.position_function(), cat.feasible_dp_function()
        assert pos.num_values == 4 and min(pos.preimage_sizes().values()) == 2
        assert smallest_feasible_n(pos, 1) == 6
        assert check_fcc(FccCode.from_mapping(cat.FEASIBLE_LENGTH6, pos, 1, 3)).is_valid
        assert smallest_feasible_n_dp(g, 3, 2) == 9
        assert check_fcc(FccCode.from_mapping(cat.FEASIBLE_LENGTH9, g, 3, 5)).is_valid
        assert smallest_feasible_n(cat.ex8_function(), 2) >= 9


def _word(n, ones):
    return tuple(1 if i in ones else 0 for i in range(n))


def _union(centres, t, q):
    out = set()
    for c in centres:
        out |= ball(c, t, q)
    return out


def test_criterion_08_closed_forms():
    with criterion(8, "four closed ball counts against enumeration"):
        t0 = time.perf_counter()
        mismatches, checked = [], 0
        for q in (2, 3):
            for n in range(1, 11):
                for t in range(0, 4):
                    u, v = (0,) * n, (1,) + (0,) * (n - 1)
                    checked += 1
                    if union2_dist1(n, t, q) != len(_union([u, v], t, q)):
                        mismatches.append(("union2_dist1", q, n, t))
        for n in range(1, 11):
            for t in range(0, 4):
                if n >= 2:
                    checked += 1
                    if inter2_dist2_binary(n, t) != len(ball(_word(n, ()), t) & ball(_word(n, (0, 1)), t)):
                        mismatches.append(("inter2_dist2", n, t))
                if n >= 2 and t >= 1:
                    checked += 1
                    if union3_112_binary(n, t) != len(_union([_word(n, ()), _word(n, (0,)), _word(n, (1,))], t, 2)):
                        mismatches.append(("union3_112", n, t))
                if n >= 3 and t >= 2:
                    checked += 1
                    if union2_dist3_binary(n, t) != len(_union([_word(n, ()), _word(n, (0, 1, 2))], t, 2)):
                        mismatches.append(("union2_dist3", n, t))
        assert checked == 80 + 36 + 27 + 16
        assert not mismatches, mismatches
        assert time.perf_counter() - t0 < 30.0


def test_criterion_09_connected_graphs():
    with criterion(9, "perfect and MDS codes have connected graphs, strict FCCs ruled out"):
        codes = [hamming_code(2), hamming_code(3), hamming_code(4)]
        codes += [repetition_code(n) for n in range(2, 8)]
        codes += [cat.mds_423_f5(), cat.mds_432_f5()]
        for code in codes:
            t0 = time.perf_counter()
            g = build_min_distance_graph(code)
            assert g.num_components == 1, f"[{code.n},{code.k}] has {g.num_components} components"
            assert strict_fcc_feasible(g, 2) is Verdict.RULED_OUT
            assert time.perf_counter() - t0 < 10.0


def _inner(k: int, t_d: int) -> LinearCode:
    if t_d == 0:
        return LinearCode.identity(k)
    return repetition_code(3) if k == 1 else shortened_hamming_code(k)


def test_criterion_10_random_property_suite():
    with criterion(10, "200 random table functions: validity, clean sweeps, bound brackets"):
        rng = np.random.default_rng(np.random.SeedSequence(2024))
        problems, built = [], {}
        for trial in range(200):
            k = int(rng.integers(1, 5))
            E = int(rng.integers(2, min(2**k, 5) + 1))
            vals = rng.integers(0, E, size=2**k)
            if len(set(vals.tolist())) < 2:
                vals[0], vals[-1] = 0, 1
            f = TableFunction(2, k, tuple(int(v) for v in vals))
            t_d = int(rng.integers(0, 2))
            t_f = int(rng.integers(t_d + 1, 3))
            C = _inner(k, t_d)
            lower = lower_bound_suite(f, t_d, t_f)
            upper = upper_bound_suite(f, C, t_d, t_f)
            optimum = min_length_dcode(build_drm_dp(f, t_d, t_f))
            if not (optimum.exact and lower.best_lower <= optimum.length <= upper.best_upper):
                problems.append((trial, "bracket around the optimum"))
            builds = {"two-step": construct_two_step_search(C, f, t_d, t_f)}
            for name, build in (
                ("locally-binary", lambda: construct_locally_binary(f, C, 2 * t_f + 1, d_d=2 * t_d + 1)),
                ("locally-bounded", lambda: construct_locally_bounded(f, C, t_d, t_f)),
            ):
                try:
                    builds[name] = build()
                except ValueError:
                    pass
            for name, code in builds.items():
                built[name] = built.get(name, 0) + 1
                if not check_fcc(code, d_d=2 * t_d + 1, d_f=2 * t_f + 1).is_valid:
                    problems.append((trial, name, "invalid"))
                if not exhaustive_error_sweep(code, None, t_d, t_f).clean:
                    problems.append((trial, name, "decoding failures"))
                if code.redundancy < lower.best_lower:
                    problems.append((trial, name, "beats a lower bound"))
                entry = {"two-step": "coded-values"}.get(name, name)
                if entry in upper.names() and code.redundancy > upper.get(entry).rounded:
                    problems.append((trial, name, "exceeds its upper bound"))
        assert built["two-step"] == 200
        assert not problems, problems[:5]
