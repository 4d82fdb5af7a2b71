from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fccdp import catalog as cat
from fccdp.distmat import (
    DistanceMatrix,
    build_cdrm,
    build_cfdm,
    build_drm,
    build_drm_dp,
    build_fdm,
    coded_function_distance,
    function_distance,
    representatives,
)
from fccdp.gfcore import DimensionError, HammingWeight, LinearCode, TableFunction, Word, repetition_code

from oracles import drm, drm_dp, space


@st.composite
def table_functions(draw, max_k=3):
    q = draw(st.sampled_from([2, 3]))
    k = draw(st.integers(1, max_k if q == 2 else 2))
    e = draw(st.integers(1, 4))
    table = draw(st.lists(st.integers(0, e - 1), min_size=q**k, max_size=q**k))
    return TableFunction(q, k, tuple(table))


def _value_map(f):
    return {w: f.values[i] for i, w in enumerate(space(f.k, f.q))}


class TestContainer:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            DistanceMatrix(("a", "b"), np.array([[0, 1], [2, 0]]))

    def test_rejects_label_mismatch(self):
        with pytest.raises(DimensionError):
            DistanceMatrix(("a",), np.zeros((2, 2)))

    def test_json_round_trip(self):
        d = DistanceMatrix(("x", "y", "z"), np.array(cat.EX1_DRM_124), "DRM_t")
        assert DistanceMatrix.from_json(d.to_json()) == d

    def test_constant(self):
        assert DistanceMatrix.constant(3, 4).tolist() == [[0, 4, 4], [4, 0, 4], [4, 4, 0]]


class TestWorkedMatrices:
    def test_ex1_full_drm(self):
        assert build_drm(cat.ex1_function(), 1).tolist() == cat.EX1_DRM_FULL

    def test_ex1_sub_drms(self):
        f = cat.ex1_function()
        assert build_drm(f, 1, ["00", "01", "11"]).tolist() == cat.EX1_DRM_124
        assert build_drm(f, 1, ["00", "01", "10"]).tolist() == cat.EX1_DRM_123

    def test_ex1_fdm(self):
        assert build_fdm(cat.ex1_function(), 1).tolist() == cat.EX1_FDM

    def test_position_function_matrices(self):
        f = cat.position_function()
        assert build_fdm(f, 2).tolist() == cat.EX3_FDM
        assert build_drm(f, 2, cat.EX3_VECTORS).tolist() == cat.EX3_DRM

    def test_ex5_cdrm(self):
        assert build_cdrm(cat.code_633(), cat.weight3(), 2, cat.EX5_VECTORS).tolist() == cat.EX5_CDRM

    def test_ex6_drm_dp(self):
        d = build_drm_dp(cat.weight3(), 1, 2, cat.ORDER_K3_WEIGHT)
        assert d.tolist() == cat.EX6_DRM_DP

    def test_function_distances_of_weight(self):
        f = HammingWeight(2, 3)
        assert function_distance(f, 0, 3) == 3
        assert function_distance(f, 1, 2) == 1
        assert function_distance(f, 2, 2) == 0
        with pytest.raises(ValueError):
            function_distance(f, 0, 7)

    def test_coded_function_distance(self):
        assert coded_function_distance(cat.code_633(), cat.weight3(), 0, 3) == 3

    def test_representatives(self):
        assert [str(w) for w in representatives(cat.weight3())] == ["000", "001", "011", "111"]

    def test_code_domain_mismatch(self):
        with pytest.raises(DimensionError):
            build_cdrm(repetition_code(3), cat.weight3(), 1)


class TestAgainstOracle:
    @given(table_functions(), st.integers(0, 3))
    def test_drm(self, f, t):
        words = space(f.k, f.q)
        assert build_drm(f, t).tolist() == drm(_value_map(f), t, words)

    @given(table_functions(), st.integers(0, 2), st.integers(0, 2))
    def test_drm_dp(self, f, t_d, extra):
        t_f = t_d + extra
        words = space(f.k, f.q)
        assert build_drm_dp(f, t_d, t_f).tolist() == drm_dp(_value_map(f), t_d, t_f, words)

    def test_drm_dp_needs_ordered_radii(self):
        with pytest.raises(ValueError):
            build_drm_dp(cat.weight3(), 2, 1)

    @given(table_functions(), st.integers(0, 3))
    def test_fdm_is_min_over_classes(self, f, t):
        vm = _value_map(f)
        full = drm(vm, t, list(vm))
        fdm = build_fdm(f, t).tolist()
        for i, a in enumerate(f.image):
            for j, b in enumerate(f.image):
                if i != j:
                    rows = [r for r, w in enumerate(vm) if vm[w] == a]
                    cols = [c for c, w in enumerate(vm) if vm[w] == b]
                    assert fdm[i][j] == max(full[r][c] for r in rows for c in cols)

    @given(table_functions(), st.integers(0, 3))
    def test_identity_code_cdrm_equals_drm(self, f, t):
        ident = LinearCode(np.eye(f.k, dtype=np.int64), f.q)
        assert build_cdrm(ident, f, t).tolist() == build_drm(f, t).tolist()
        assert build_cfdm(ident, f, t).tolist() == build_fdm(f, t).tolist()

    @given(table_functions(max_k=2), st.integers(0, 3))
    def test_subset_is_submatrix(self, f, t):
        full = build_drm(f, t)
        idx = [0, len(full.labels) - 1] if len(full.labels) > 1 else [0]
        sub = build_drm(f, t, [Word.from_index(i, f.k, f.q) for i in idx])
        assert sub.tolist() == full.submatrix(idx).tolist()
