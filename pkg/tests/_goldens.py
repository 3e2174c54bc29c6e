"""Reference values shared across the test suite.

Polynomials are given as {exponent: coefficient} dicts; roots as exact
decimal digit strings (20 places).
"""

from fractions import Fraction

# f_k(n) for n = 1..12
TABLE_F0 = [1, 2, 4, 6, 8, 8, 8, 8, 8, 8, 8, 8]
TABLE_F1 = [1, 2, 4, 8, 14, 24, 40, 66, 106, 170, 270, 426]
TABLE_F2 = [1, 2, 4, 8, 16, 30, 56, 102, 186, 336, 606, 1088]

# 0-convex words on 3 letters, counts by length 0..20
WORD_GF_30 = [1, 3, 9, 16, 20] + [21] * 16

# stable 0-convex word counts for p = 1..9
G0P_STABLE = [1, 5, 21, 70, 214, 575, 1475, 3500, 7989]
G0P_STABLE_REFERENCE_P9 = 7469  # known erratum; the formula gives 7989

# reference bijection examples: (m, w1 parts, w2 parts, n, p, word)
ENCODE_EXAMPLES = [
    (3, (1,), (1, 1), 5, 3, "23321"),
    (8, (1, 1, 2, 3), (2, 4), 15, 8, "146788888888862"),
    (5, (1, 1, 1, 1), (3,), 9, 5, "123455552"),
]

# reference rational bounds on f_k, keyed by (k, side): (num, den) term dicts
BOUND_GF = {
    (1, "lower"): (
        {0: -1, 1: -1, 2: -2, 3: -2, 4: -2, 5: -2, 6: -1, 7: 1, 8: 1,
         9: 2, 10: 1, 11: 1, 14: -1},
        {0: -1, 1: 1, 3: 1, 4: 1, 8: -2, 9: -1, 10: -2, 13: 1, 15: 1},
    ),
    (1, "upper"): (
        {0: -1, 2: -1, 6: 1, 7: 2, 8: 1, 9: 2, 10: 1, 11: 1, 14: -1},
        {0: -1, 1: 2, 2: -1, 3: 1, 5: -1, 8: -1, 10: -1, 11: 1, 12: -1,
         13: 1, 15: 1},
    ),
    (2, "lower"): (
        {0: 1, 1: 1, 2: 1, 3: 2, 4: 2, 5: 2, 6: 2, 7: 1, 10: -1, 11: -1,
         12: -1},
        {0: 1, 1: -1, 2: -1, 4: -1, 5: -1, 8: 1, 9: 2, 10: 1, 11: 1,
         12: 1, 13: 1, 14: -1},
    ),
    (2, "upper"): (
        {0: 1, 3: 1, 7: -1, 8: -1, 9: -1, 10: -2, 11: -1, 12: -1},
        {0: 1, 1: -2, 3: 1, 4: -1, 6: 1, 8: 1, 11: 1, 13: 1, 14: -1},
    ),
}

# smallest positive roots of the four denominators, 20 decimal digits
ROOT_DIGITS = {
    (1, "lower"): "65149869151455837735",
    (1, "upper"): "65145978572056851317",
    (2, "lower"): "55979335021175578170",
    (2, "upper"): "55977426822528580510",
}

# reference growth-rate bounds (reciprocals of the roots, rounded)
RATES = {
    (1, "lower"): 1.5349224995,
    (1, "upper"): 1.535014167,
    (2, "lower"): 1.786373489,
    (2, "upper"): 1.786434384,
}


def root_fraction(k, side) -> Fraction:
    return Fraction(int(ROOT_DIGITS[(k, side)]), 10**20)


# reference 22x22 adjacency matrix of the truncated k=1 digraph, as
# 1-based out-neighbor lists per row
MATRIX_A_ROWS = {
    1: [2, 4], 2: [2, 4], 3: [2], 4: [3, 5], 5: [6, 8], 6: [7], 7: [4],
    8: [9, 12], 9: [10], 10: [11], 11: [5], 12: [13, 17], 13: [14],
    14: [15], 15: [16], 16: [8], 17: [18], 18: [19], 19: [20], 20: [21],
    21: [22], 22: [12],
}
