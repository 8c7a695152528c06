"""Frozen reference rows, transcribed by hand from published tables."""

# n -> row over s = 0..n
L_ROWS = {
    0: [1],
    1: [0, 1],
    2: [1, 1, 1],
    3: [5, 6, 3, 1],
    4: [36, 41, 21, 6, 1],
    5: [329, 365, 185, 55, 10, 1],
    6: [3655, 3984, 2010, 610, 120, 15, 1],
    7: [47844, 51499, 25914, 7980, 1645, 231, 21, 1],
    8: [721315, 769159, 386407, 120274, 25585, 3850, 406, 28, 1],
}

# k = 1..n
T_ROWS = {
    1: [1],
    2: [2, 1],
    3: [6, 8, 1],
    4: [24, 58, 22, 1],
    5: [120, 444, 328, 52, 1],
    6: [720, 3708, 4400, 1452, 114, 1],
    7: [5040, 33984, 58140, 32120, 5610, 240, 1],
}

# k = 0..n-1
E_ROWS = {
    1: [1],
    2: [1, 2],
    3: [1, 8, 6],
    4: [1, 22, 58, 24],
    5: [1, 52, 328, 444, 120],
    6: [1, 114, 1452, 4400, 3708, 720],
    7: [1, 240, 5610, 32120, 58140, 33984, 5040],
}

NARAYANA_ROWS = {
    1: [1],
    2: [1, 1],
    3: [1, 3, 1],
    4: [1, 6, 6, 1],
    5: [1, 10, 20, 10, 1],
}

SULLIVAN_ROWS = {
    1: [1],
    2: [3, 1],
    3: [15, 5, 1],
    4: [105, 36, 10, 1],
    5: [945, 329, 99, 20, 1],
}

# (n, k) -> coefficients of the short-chord polynomial over diagrams with all chords >= k
MINLEN_POLYS = {
    (1, 1): [0, 1],
    (2, 1): [1, 1, 1],
    (2, 2): [0, 0, 1],
    (3, 1): [5, 6, 3, 1],
    (3, 2): [1, 2, 2],
    (3, 3): [0, 0, 0, 1],
    (4, 1): [36, 41, 21, 6, 1],
    (4, 2): [10, 14, 9, 2, 1],
    (4, 3): [1, 3, 4, 2],
}
