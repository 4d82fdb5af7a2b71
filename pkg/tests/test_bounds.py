from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fccdp import catalog as cat
from fccdp.bounds import (
    BoundReport,
    ball_size,
    binary_log_redundancy,
    asymptotic_code_length,
    gv_length,
    hamming_feasible_n,
    hamming_weight_lower,
    inter2_dist2_binary,
    lower_bound_suite,
    min_ball_union,
    plotkin_fcc_dp,
    plotkin_irregular,
    smallest_feasible_n,
    smallest_feasible_n_dp,
    union2_dist1,
    union2_dist3_binary,
    union3_112_binary,
    union_size,
    upper_bound_suite,
)
from fccdp.distmat import build_drm_dp
from fccdp.dsearch import min_length_dcode
from fccdp.gfcore import HammingWeight, LinearCode, TableFunction, repetition_code, shortened_hamming_code

from oracles import ball, ball_volume, n_of_matrix, space, union_of_balls


def _word(n, ones):
    return tuple(1 if i in ones else 0 for i in range(n))


class TestBallCounts:
    @given(st.integers(0, 9), st.integers(-1, 10), st.sampled_from([2, 3]))
    def test_ball_size(self, n, t, q):
        expected = 0 if t < 0 else ball_volume(n, t, q)
        assert ball_size(n, t, q) == expected

    @settings(max_examples=40)
    @given(st.integers(1, 8), st.integers(0, 4), st.sampled_from([2, 3]))
    def test_union_at_distance_one(self, n, t, q):
        u = (0,) * n
        v = (1,) + (0,) * (n - 1)
        assert union2_dist1(n, t, q) == union_of_balls([u, v], t, q)

    @settings(max_examples=40)
    @given(st.integers(2, 9), st.integers(0, 4))
    def test_intersection_at_distance_two(self, n, t):
        a, b = ball(_word(n, ()), t), ball(_word(n, (0, 1)), t)
        assert inter2_dist2_binary(n, t) == len(a & b)

    @settings(max_examples=40)
    @given(st.integers(2, 9), st.integers(1, 4))
    def test_three_balls_112(self, n, t):
        centres = [_word(n, ()), _word(n, (0,)), _word(n, (1,))]
        assert union3_112_binary(n, t) == union_of_balls(centres, t)

    @settings(max_examples=40)
    @given(st.integers(3, 9), st.integers(2, 4))
    def test_union_at_distance_three(self, n, t):
        assert union2_dist3_binary(n, t) == union_of_balls([_word(n, ()), _word(n, (0, 1, 2))], t)

    def test_domain_guards(self):
        with pytest.raises(ValueError):
            union2_dist3_binary(5, 1)
        with pytest.raises(ValueError):
            union3_112_binary(4, 0)
        with pytest.raises(ValueError):
            inter2_dist2_binary(4, 1, q=3)

    @given(st.lists(st.tuples(*[st.integers(0, 1)] * 5), min_size=1, max_size=4), st.integers(0, 3))
    def test_union_size(self, centres, t):
        assert union_size(centres, t) == union_of_balls(centres, t)

    @pytest.mark.parametrize("n,t,q,ell,d", [(4, 1, 2, 2, 1), (4, 1, 2, 3, 1), (5, 2, 2, 2, 3), (3, 1, 3, 2, 1), (5, 1, 2, 3, 2)])
    def test_min_ball_union(self, n, t, q, ell, d):
        best = min(
            union_of_balls(c, t, q)
            for c in itertools.combinations(space(n, q), ell)
            if all(sum(x != y for x, y in zip(a, b)) >= d for a, b in itertools.combinations(c, 2))
        )
        assert min_ball_union(n, t, q, ell, d) == best


class TestClosedBounds:
    def test_plotkin_weight4_table(self):
        got = [plotkin_fcc_dp(4, 2, 6, dd, df) for dd, df, _, _ in cat.PLOTKIN_WEIGHT4]
        assert got == [Fraction(33, 8), Fraction(63, 8), Fraction(93, 8), Fraction(123, 8)]
        assert [math.ceil(x) for x in got] == [c for *_, c in cat.PLOTKIN_WEIGHT4]

    def test_plotkin_or4_table(self):
        got = [plotkin_fcc_dp(4, 2, 15, dd, df) for dd, df, _, _ in cat.PLOTKIN_OR4]
        assert got == [Fraction(15, 8), Fraction(45, 8), Fraction(75, 8), Fraction(105, 8)]
        assert [math.ceil(x) for x in got] == [c for *_, c in cat.PLOTKIN_OR4]

    def test_plotkin_needs_gap(self):
        with pytest.raises(ValueError):
            plotkin_fcc_dp(3, 2, 3, 5, 5)

    @settings(max_examples=40)
    @given(st.integers(2, 4), st.data())
    def test_plotkin_irregular_below_search(self, m, data):
        e = np.zeros((m, m), dtype=np.int64)
        for i, j in itertools.combinations(range(m), 2):
            e[i, j] = e[j, i] = data.draw(st.integers(0, 4))
        exact = n_of_matrix(e.tolist())
        assert plotkin_irregular(e) <= exact <= gv_length(e)

    def test_weight_lower(self):
        assert hamming_weight_lower(1) == Fraction(8, 3)
        assert hamming_weight_lower(2) == Fraction(cat.EX7_LOWER)

    def test_asymptotic_domain(self):
        assert asymptotic_code_length(4, 9) is None
        assert asymptotic_code_length(101, 10) is None
        assert asymptotic_code_length(4, 10) == math.floor(20 / (1 - 2 * math.sqrt(math.log(10) / 10)))

    def test_binary_log(self):
        assert binary_log_redundancy(8, 0) is None
        assert binary_log_redundancy(2, 2) is None
        assert binary_log_redundancy(64, 1) == math.floor(7 / (1 - math.log2(math.e) / 64))


class TestFeasibility:
    def test_position_function(self):
        assert smallest_feasible_n(cat.position_function(), 1) == 6

    def test_linear_map(self):
        assert smallest_feasible_n(cat.ex8_function(), 2) == 9

    def test_data_protecting(self):
        assert smallest_feasible_n_dp(cat.feasible_dp_function(), 3, 2) == 9

    def test_exact_never_looser(self):
        f = cat.position_function()
        for n in range(3, 8):
            if hamming_feasible_n(f, 1, n, exact=True).feasible:
                assert hamming_feasible_n(f, 1, n).feasible


@st.composite
def small_functions(draw):
    k = draw(st.integers(1, 3))
    e = draw(st.integers(2, 4))
    table = draw(st.lists(st.integers(0, e - 1), min_size=2**k, max_size=2**k))
    assume(len(set(table)) >= 2)
    return TableFunction(2, k, tuple(table))


def _inner(k, t_d):
    if t_d == 0:
        return LinearCode(np.eye(k, dtype=np.int64))
    return repetition_code(3) if k == 1 else shortened_hamming_code(k)


class TestSuites:
    @settings(max_examples=30)
    @given(small_functions(), st.integers(0, 1), st.integers(0, 1))
    def test_lower_entries_sit_below_optimum(self, f, t_d, extra):
        t_f = t_d + extra
        optimum = min_length_dcode(build_drm_dp(f, t_d, t_f))
        assert optimum.exact
        rep = lower_bound_suite(f, t_d, t_f)
        for entry in rep.lower:
            assert entry.rounded <= optimum.length, entry.name

    @settings(max_examples=30)
    @given(small_functions(), st.integers(0, 1), st.integers(0, 1))
    def test_upper_entries_sit_above_optimum(self, f, t_d, extra):
        t_f = t_d + extra
        optimum = min_length_dcode(build_drm_dp(f, t_d, t_f)).length
        rep = upper_bound_suite(f, _inner(f.k, t_d), t_d, t_f)
        for entry in rep.upper:
            assert entry.rounded >= optimum, entry.name

    def test_weight4_report(self):
        rep = lower_bound_suite(cat.weight4(), 1, 2)
        assert rep.get("plotkin-dp").value == Fraction(33, 8)
        assert rep.get("plotkin-dp").rounded == 5
        assert rep.best_lower >= 5

    def test_report_rejects_unknown_name(self):
        with pytest.raises(KeyError):
            BoundReport().get("nothing")

    def test_report_json_and_table(self):
        rep = lower_bound_suite(cat.weight3(), 1, 2).extend(upper_bound_suite(cat.weight3(), cat.code_633(), 1, 2))
        js = rep.to_json()
        assert {e["name"] for e in js["entries"]} == set(rep.names())
        assert "plotkin-dp" in rep.table()
        assert rep.best_lower <= rep.best_upper

    def test_weight3_is_tight(self):
        rep = lower_bound_suite(cat.weight3(), 1, 2).extend(upper_bound_suite(cat.weight3(), cat.code_633(), 1, 2))
        assert rep.best_lower == rep.best_upper == 6 and rep.tight

    def test_suite_rejects_bad_radii(self):
        with pytest.raises(ValueError):
            lower_bound_suite(cat.weight3(), 2, 1)
        with pytest.raises(ValueError):
            upper_bound_suite(cat.weight3(), LinearCode(np.eye(3, dtype=np.int64)), 1, 2)

    def test_big_weight_function(self):
        f = HammingWeight(2, 8)
        rep = lower_bound_suite(f, 1, 2, full_search_limit=0)
        assert rep.get("weight-function").value == Fraction(21, 4)
