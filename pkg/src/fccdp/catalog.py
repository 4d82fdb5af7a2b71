"""Worked-example fixtures: functions, generator matrices and printed code tables.

Codeword tables are stored as ``{message: codeword}`` strings exactly as they
appear in the literature, except where a printed entry is an obvious typo;
those are corrected and marked in a comment.
"""

from __future__ import annotations

from .gfcore import HammingWeight, LinearCode, LinearMap, TableFunction, WeightMod

# message orders used by the printed tables
ORDER_K2 = ("00", "01", "10", "11")
ORDER_K3_WEIGHT = ("000", "100", "010", "001", "110", "101", "011", "111")


def ex1_function() -> TableFunction:
    """f(00)=0, f(01)=f(10)=1, f(11)=2."""
    return TableFunction.from_mapping({"00": 0, "01": 1, "10": 1, "11": 2})


EX1_DRM_FULL = [[0, 2, 2, 1], [2, 0, 0, 2], [2, 0, 0, 2], [1, 2, 2, 0]]
EX1_DRM_124 = [[0, 2, 1], [2, 0, 2], [1, 2, 0]]
EX1_DRM_123 = [[0, 2, 2], [2, 0, 0], [2, 0, 0]]
EX1_FDM = [[0, 2, 1], [2, 0, 2], [1, 2, 0]]

EX2_DCODE = ("000", "110", "110", "101")
EX2_FCC = ("00000", "01110", "10110", "11101")


def position_function() -> TableFunction:
    """Position of the least frequent bit of a 3-bit word (0 when all bits agree)."""
    return TableFunction.from_mapping(
        {"000": 0, "111": 0, "100": 1, "011": 1, "010": 2, "101": 2, "001": 3, "110": 3}
    )


EX3_FDM = [[0, 4, 4, 4], [4, 0, 4, 4], [4, 4, 0, 4], [4, 4, 4, 0]]
EX3_DRM = [[0, 4, 4, 4], [4, 0, 3, 3], [4, 3, 0, 3], [4, 3, 3, 0]]
EX3_VECTORS = ("000", "100", "010", "001")
EX3_PARITY_BY_VALUE = {0: "000000", 1: "111100", 2: "110011", 3: "001111"}
EX3_CODE = {
    "000": "000000000",
    "111": "111000000",
    "100": "100111100",  # printed with a stray extra 1 (ten symbols)
    "011": "011111100",
    "010": "010110011",
    "101": "101110011",
    "001": "001001111",
    "110": "110001111",
}


def ex4_function() -> TableFunction:
    return TableFunction.from_mapping({"00": 0, "01": 1, "10": 1, "11": 1})


EX4_CODE_A = {"00": "0000", "01": "0111", "10": "1011", "11": "1111"}
EX4_CODE_B = {"00": "0000", "01": "0111", "10": "1011", "11": "1101"}


def weight3() -> HammingWeight:
    return HammingWeight(2, 3)


def code_633() -> LinearCode:
    return LinearCode([[1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]], 2, name="[6,3,3]")


EX5_VECTORS = ("000", "100", "011", "111")
EX5_CDRM = [[0, 2, 1, 2], [2, 0, 2, 1], [1, 2, 0, 2], [2, 1, 2, 0]]
EX5_DCODE_BY_WEIGHT = ("000", "110", "101", "011")
EX5_CODE = {
    "000": "000000000",
    "100": "100110110",
    "010": "010101110",
    "001": "001011110",
    "110": "110011101",
    "101": "101101101",
    "011": "011110101",
    "111": "111000011",
}
EX5_TRADITIONAL = {
    "000": "000000000",
    "100": "100111100",
    "010": "010111100",
    "001": "001111100",
    "110": "110110011",
    "101": "101110011",
    "011": "011110011",
    "111": "111001111",
}

EX6_DRM_DP = [
    [0, 4, 4, 4, 3, 3, 3, 2],
    [4, 0, 1, 1, 4, 4, 2, 3],
    [4, 1, 0, 1, 4, 2, 4, 3],
    [4, 1, 1, 0, 2, 4, 4, 3],
    [3, 4, 4, 2, 0, 1, 1, 4],
    [3, 4, 2, 4, 1, 0, 1, 4],
    [3, 2, 4, 4, 1, 1, 0, 4],
    [2, 3, 3, 3, 4, 4, 4, 0],
]

EX7_PARITIES = ("000000", "110110", "101110", "011110", "011101", "101101", "110101", "000011")
EX7_DISTANCES = [
    [0, 4, 4, 4, 4, 4, 4, 2],
    [4, 0, 2, 2, 4, 4, 2, 4],
    [4, 2, 0, 2, 4, 2, 4, 4],
    [4, 2, 2, 0, 2, 4, 4, 4],
    [4, 4, 4, 2, 0, 2, 2, 4],
    [4, 4, 2, 4, 2, 0, 2, 4],
    [4, 2, 4, 4, 2, 2, 0, 4],
    [2, 4, 4, 4, 4, 4, 4, 0],
]
EX7_LOWER = "21/4"


def ex8_function() -> LinearMap:
    return LinearMap(2, 4, ((1, 1, 1, 0), (0, 1, 1, 0)))


EX9_CODE = ("0000", "0011", "1100", "1111")


# --------------------------------------------------------------------------
# locally binary and Hamming-weight examples


def parity4() -> WeightMod:
    return WeightMod(2, 4, 2)


def hamming_743() -> LinearCode:
    return LinearCode(
        [[1, 0, 0, 0, 1, 1, 0], [0, 1, 0, 0, 1, 0, 1], [0, 0, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]], 2, name="[7,4,3]"
    )


PARITY4_CODE = {
    "0000": "000000000",
    "1000": "100011011",
    "0100": "010010111",
    "0010": "001001111",
    "0001": "000111111",
    "1100": "110001100",
    "1010": "101010100",
    "1001": "100100100",
    "0110": "011011000",
    "0101": "010101000",
    "0011": "001110000",
    "1110": "111000011",
    "1101": "110110011",
    "1011": "101101011",
    "0111": "011100111",
    "1111": "111111100",
}
WEIGHT8_K = 8
WEIGHT8_REDUNDANCY = 8


# --------------------------------------------------------------------------
# linear functions


def coset_toy_function() -> LinearMap:
    """A linear map on F_2^2 with kernel {00, 11}."""
    return LinearMap(2, 2, ((1, 1),))


COSET_TOY_CODE = {"00": "0000", "01": "0111", "10": "1011", "11": "1100"}


def linear_function() -> LinearMap:
    return LinearMap(2, 3, ((1, 1, 0), (0, 0, 1)))


def code_734() -> LinearCode:
    return LinearCode([[1, 0, 0, 1, 1, 0, 1], [0, 1, 0, 1, 0, 1, 1], [0, 0, 1, 0, 1, 1, 1]], 2, name="[7,3,4]")


def code_322() -> LinearCode:
    return LinearCode([[1, 0, 1], [0, 1, 1]], 2, name="[3,2,2]")


LINEAR_CODE = {
    "000": "0000000000",
    "110": "1100110000",
    "100": "1001101101",
    "010": "0101011101",
    "001": "0010111011",
    "111": "1110001011",
    "101": "1011010110",
    "011": "0111100110",
}


# --------------------------------------------------------------------------
# bound tables


def weight4() -> HammingWeight:
    return HammingWeight(2, 4)


def or4() -> TableFunction:
    return TableFunction(2, 4, tuple([0] + [1] * 15))


# (d_d, d_f, printed decimal, printed ceiling)
PLOTKIN_WEIGHT4 = ((3, 5, 4.1, 5), (5, 7, 7.87, 8), (7, 9, 11.6, 12), (9, 11, 15.3, 16))
PLOTKIN_OR4 = ((3, 5, 1.88, 2), (5, 7, 5.63, 6), (7, 9, 9.275, 10), (9, 11, 13.125, 14))
# (d_d, d_f, bound from the irregular Plotkin form as printed alongside)
PLOTKIN_COMPANION = ((3, 5, 5), (5, 7, 8), (7, 9, 11), (9, 11, 14))

FEASIBLE_LENGTH6 = {
    "000": "000000",
    "111": "111000",
    "100": "100110",
    "011": "011110",
    "010": "010101",
    "101": "101101",
    "001": "001011",
    "110": "110011",
}


def feasible_dp_function() -> TableFunction:
    """f(x) = 2 x1 + (x2 + x3 mod 2)."""
    return TableFunction.from_mapping(
        {"000": 0, "011": 0, "010": 1, "001": 1, "100": 2, "111": 2, "101": 3, "110": 3}
    )


# rows of (message, parity of the [6,3,3] code, function parity) as printed
FEASIBLE_LENGTH9_COLUMNS = (
    ("000", "000", "000"),
    ("011", "110", "000"),
    ("010", "101", "110"),
    ("001", "011", "110"),
    ("100", "110", "101"),
    ("111", "000", "101"),
    ("101", "101", "011"),
    ("110", "011", "011"),
)
FEASIBLE_LENGTH9 = {u: u + w + p for u, w, p in FEASIBLE_LENGTH9_COLUMNS}
# The printed codeword column does not match the concatenation of the other
# columns and, read as a map, has two same-value codewords at distance 2.
FEASIBLE_LENGTH9_PRINTED = {
    "000": "000000000",
    "011": "111000000",
    "010": "100110110",
    "001": "011110110",
    "100": "110101101",
    "111": "101101101",
    "101": "001011011",
    "110": "110011011",
}


# --------------------------------------------------------------------------
# perfect and MDS codes over F_5


def mds_423_f5() -> LinearCode:
    return LinearCode([[1, 0, 1, 1], [0, 1, 1, 2]], 5, name="[4,2,3]_5")


def mds_432_f5() -> LinearCode:
    return LinearCode([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]], 5, name="[4,3,2]_5")
