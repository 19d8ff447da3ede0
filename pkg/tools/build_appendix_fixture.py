"""Generate src/fqlat/data/appendix_tables.tsv from the published tables.

Row syntax below: (D, [(N, vol, hind, lcm, nu, st), ...]) grouped per field
discriminant; vol is the exact coefficient of pi^2 as a string fraction;
st is '*' or ''.  Class indices are 1 except for the explicitly doubled
(d, D, N) entries, which are listed with their class index inline.
"""

from fractions import Fraction
from pathlib import Path

T = []  # (degree, d, D, N, class, vol, hind, lcm, nu, st)


def add(degree, d, D, rows):
    for row in rows:
        if len(row) == 6:
            N, vol, hind, lcm, nu, st = row
            ci = 1
        else:
            N, vol, hind, lcm, nu, st, ci = row
        T.append((degree, d, D, N, ci, Fraction(vol), hind, lcm, nu, st))


# ---------------------------------------------------------------- Table 1a
add(2, 5, 20, [(1, "1/5", 4, 5, 0, ""), (9, "1", 4, 1, 1, ""), (19, "2", 4, 1, 1, "*"),
               (31, "16/5", 4, 5, 1, "*"), (79, "8", 4, 1, 1, "*"), (279, "16", 4, 1, 2, "*")])
add(2, 5, 36, [(1, "2/5", 4, 5, 0, ""), (19, "4", 4, 1, 1, "*"), (79, "16", 4, 1, 1, "*")])
add(2, 5, 44, [(1, "1/2", 4, 2, 0, "*"), (31, "8", 4, 1, 1, "*")])
add(2, 5, 45, [(1, "8/15", 4, 15, 0, ""), (4, "4/3", 4, 3, 1, ""), (11, "16/5", 4, 5, 1, "*"),
               (19, "16/3", 4, 3, 1, "*"), (29, "8", 4, 1, 1, "*"), (44, "8", 4, 1, 2, "*"),
               (59, "16", 4, 1, 1, "*")])
add(2, 5, 55, [(1, "2/3", 4, 3, 0, "*"), (11, "4", 4, 1, 1, "*")])
add(2, 5, 99, [(1, "4/3", 4, 3, 0, "*"), (5, "4", 4, 1, 1, "*"), (11, "8", 4, 1, 1, "*")])
add(2, 5, 155, [(1, "2", 4, 1, 0, "*")])
add(2, 5, 164, [(1, "2", 4, 1, 0, "*")])
add(2, 5, 205, [(1, "8/3", 4, 3, 0, "*"), (11, "16", 4, 1, 1, "*")])
add(2, 5, 245, [(1, "16/5", 4, 5, 0, ""), (4, "8", 4, 1, 1, ""), (9, "16", 4, 1, 1, "")])
add(2, 5, 279, [(1, "4", 4, 1, 0, "*")])
add(2, 5, 305, [(1, "4", 4, 1, 0, "*")])
add(2, 5, 369, [(1, "16/3", 4, 3, 0, "*"), (5, "16", 4, 1, 1, "*")])
add(2, 5, 441, [(1, "32/5", 4, 5, 0, ""), (4, "16", 4, 1, 1, "")])
add(2, 5, 539, [(1, "8", 4, 1, 0, "*")])
add(2, 5, 549, [(1, "8", 4, 1, 0, "*")])
add(2, 5, 1205, [(1, "16", 4, 1, 0, "*")])
add(2, 5, 1980, [(1, "4", 4, 1, 0, "*")])
add(2, 5, 7380, [(1, "16", 4, 1, 0, "*")])
add(2, 8, 14, [(1, "1/4", 4, 2, 0, "*"), (7, "1", 4, 1, 1, "*"), (31, "4", 4, 1, 1, "*"),
               (127, "16", 4, 1, 1, "*"), (217, "16", 4, 1, 2, "*")])
add(2, 8, 18, [(1, "1/3", 4, 3, 0, ""), (7, "4/3", 4, 3, 1, "*"), (23, "4", 4, 1, 1, "*"),
               (31, "16/3", 4, 3, 1, "*"), (47, "8", 4, 1, 1, "*"), (49, "16/3", 4, 3, 2, ""),
               (161, "16", 4, 1, 2, "*")])
add(2, 8, 34, [(1, "2/3", 4, 3, 0, "*"), (7, "8/3", 4, 3, 1, "*"), (23, "8", 4, 1, 1, "*"),
               (47, "16", 4, 1, 1, "*")])
add(2, 8, 50, [(1, "1", 4, 1, 0, ""), (7, "4", 4, 1, 1, "*"), (31, "16", 4, 1, 1, "*"),
               (49, "16", 4, 1, 2, "")])
add(2, 8, 63, [(1, "2", 4, 1, 0, "*"), (7, "8", 4, 1, 1, "*")])
add(2, 8, 119, [(1, "4", 4, 1, 0, "*"), (7, "16", 4, 1, 1, "*")])
add(2, 8, 153, [(1, "16/3", 4, 3, 0, "*"), (2, "8", 4, 1, 1, "*")])
add(2, 8, 194, [(1, "4", 4, 1, 0, "*"), (7, "16", 4, 1, 1, "*")])
add(2, 8, 225, [(1, "8", 4, 1, 0, "")])
add(2, 8, 289, [(1, "32/3", 4, 3, 0, ""), (2, "16", 4, 1, 1, "")])
add(2, 8, 386, [(1, "8", 4, 1, 0, "*")])
add(2, 8, 425, [(1, "16", 4, 1, 0, "*")])
add(2, 8, 514, [(1, "32/3", 4, 3, 0, "*")])
add(2, 8, 873, [(1, "32", 4, 1, 0, "*")])
add(2, 8, 1538, [(1, "32", 4, 1, 0, "*")])
add(2, 8, 2142, [(1, "8", 4, 1, 0, "*")])
add(2, 8, 4046, [(1, "16", 4, 1, 0, "*")])
add(2, 8, 7650, [(1, "32", 4, 1, 0, "*")])

# ---------------------------------------------------------------- Table 1b
add(2, 12, 6, [(1, "1/6", 4, 12, 0, ""), (11, "1", 4, 1, 1, "*"), (23, "2", 4, 1, 1, "*"),
               (47, "4", 4, 1, 1, "*"), (191, "16", 4, 1, 1, "*")])
add(2, 12, 26, [(1, "1", 4, 1, 0, "*"), (3, "2", 4, 1, 1, "*")])
add(2, 12, 39, [(1, "2", 4, 1, 0, "*")])
add(2, 12, 50, [(1, "2", 4, 1, 0, ""), (3, "4", 4, 1, 1, "")])
add(2, 12, 75, [(1, "4", 4, 1, 0, "")])
add(2, 12, 98, [(1, "4", 4, 1, 0, ""), (3, "8", 4, 1, 1, "")])
add(2, 12, 147, [(1, "8", 4, 1, 0, "")])
add(2, 12, 194, [(1, "8", 4, 1, 0, "*"), (3, "16", 4, 1, 1, "*")])
add(2, 12, 291, [(1, "16", 4, 1, 0, "*")])
add(2, 12, 386, [(1, "16", 4, 1, 0, "*")])
add(2, 12, 579, [(1, "32", 4, 1, 0, "*")])
add(2, 13, 9, [(1, "1/3", 4, 6, 0, ""), (23, "4", 4, 1, 1, "*")])
add(2, 13, 12, [(1, "1/2", 4, 2, 0, "*"), (3, "1", 4, 1, 1, "*")])
add(2, 13, 39, [(1, "2", 4, 1, 0, "*"), (3, "4", 4, 1, 1, "*")])
add(2, 13, 51, [(1, "8/3", 4, 3, 0, "*"), (3, "16/3", 4, 3, 1, "*")])
add(2, 13, 68, [(1, "4", 4, 1, 0, "*"), (3, "8", 4, 1, 1, "*"), (9, "16", 4, 1, 2, "*")])
add(2, 13, 75, [(1, "4", 4, 1, 0, "*"), (3, "8", 4, 1, 1, "*")])
add(2, 13, 147, [(1, "8", 4, 1, 0, "*"), (3, "16", 4, 1, 1, "*")])
add(2, 13, 221, [(1, "16", 4, 1, 0, "*")])
add(2, 13, 612, [(1, "4", 4, 1, 0, "*")])
add(2, 17, 4, [(1, "1/6", 4, 6, 0, ""), (47, "4", 4, 1, 1, "*"), (191, "16", 4, 1, 1, "*")])
add(2, 17, 18, [(1, "4/3", 4, 3, 0, "*"), (2, "2", 4, 1, 1, "*")])
add(2, 17, 26, [(1, "2", 4, 1, 0, "*")])
add(2, 17, 34, [(1, "8/3", 4, 3, 0, "*"), (2, "4", 4, 1, 1, "*")])
add(2, 17, 50, [(1, "4", 4, 1, 0, "*")])
add(2, 17, 98, [(1, "8", 4, 1, 0, "*")])
add(2, 17, 117, [(1, "16", 4, 1, 0, "*")])
add(2, 17, 221, [(1, "32", 4, 1, 0, "*")])
add(2, 17, 225, [(1, "32", 4, 1, 0, "")])
add(2, 17, 468, [(1, "4", 4, 1, 0, "*")])
add(2, 17, 612, [(1, "16/3", 4, 3, 0, "")])
add(2, 17, 884, [(1, "8", 4, 1, 0, "*")])
add(2, 17, 900, [(1, "8", 4, 1, 0, "")])
add(2, 17, 1700, [(1, "16", 4, 1, 0, "")])
add(2, 17, 1764, [(1, "16", 4, 1, 0, "")])
add(2, 17, 3332, [(1, "32", 4, 1, 0, "")])
add(2, 21, 12, [(1, "1", 4, 2, 0, ""), (7, "4", 4, 1, 1, "")])
add(2, 21, 15, [(1, "4/3", 4, 3, 0, "*"), (5, "4", 4, 1, 1, "*"), (7, "16/3", 4, 3, 1, "*"),
                (35, "16", 4, 1, 2, "*")])
add(2, 21, 20, [(1, "2", 4, 1, 0, "*"), (3, "4", 4, 1, 1, "*"), (7, "8", 4, 1, 1, "*"),
                (21, "16", 4, 1, 2, "*")])
add(2, 21, 21, [(1, "2", 4, 2, 0, "")])
add(2, 21, 25, [(1, "8/3", 4, 6, 0, ""), (3, "16/3", 4, 3, 1, "")])
add(2, 21, 35, [(1, "4", 4, 1, 0, "*"), (3, "8", 4, 1, 1, "*")])
add(2, 21, 51, [(1, "16/3", 4, 3, 0, "*"), (5, "16", 4, 1, 1, "*")])
add(2, 21, 68, [(1, "8", 4, 1, 0, "*"), (3, "16", 4, 1, 1, "*")])
add(2, 21, 119, [(1, "16", 4, 1, 0, "*")])
add(2, 21, 300, [(1, "4", 4, 1, 0, ""), (7, "16", 4, 1, 1, "")])
add(2, 21, 525, [(1, "8", 4, 1, 0, "")])
add(2, 21, 1020, [(1, "16", 4, 1, 0, "*")])
add(2, 21, 1700, [(1, "32", 4, 1, 0, "*")])
add(2, 21, 1785, [(1, "32", 4, 1, 0, "*")])

# ---------------------------------------------------------------- Table 1c
add(2, 24, 6, [(1, "1/2", 4, 2, 0, "")])
add(2, 24, 15, [(1, "2", 4, 1, 0, "*")])
add(2, 24, 150, [(1, "2", 4, 1, 0, "")])
add(2, 28, 6, [(1, "2/3", 4, 3, 0, "*"), (3, "4/3", 4, 3, 1, "*"), (7, "8/3", 4, 3, 1, "*"),
               (21, "16/3", 4, 3, 2, "*"), (47, "16", 4, 1, 1, "*")])
add(2, 28, 9, [(1, "4/3", 4, 12, 0, ""), (2, "2", 4, 1, 1, ""), (7, "16/3", 4, 3, 1, ""),
               (14, "8", 4, 1, 2, "")])
add(2, 28, 14, [(1, "2", 4, 1, 0, ""), (3, "4", 4, 1, 1, "*"), (9, "8", 4, 1, 2, "")])
add(2, 28, 21, [(1, "4", 4, 4, 0, "*"), (3, "8", 4, 1, 1, "*")])
add(2, 28, 50, [(1, "8", 2, 1, 0, ""), (3, "16", 4, 1, 1, "*"), (7, "32", 4, 1, 1, ""),
                (9, "32", 4, 1, 2, "")])
add(2, 28, 75, [(1, "16", 4, 1, 0, "*")])
add(2, 28, 126, [(1, "2", 4, 1, 0, "")])
add(2, 28, 450, [(1, "8", 4, 1, 0, ""), (7, "32", 4, 1, 1, "")])
add(2, 33, 6, [(1, "1", 4, 2, 0, "*"), (31, "16", 4, 1, 1, "*")])
add(2, 33, 51, [(1, "16", 4, 1, 0, "*")])
add(2, 33, 204, [(1, "4", 4, 1, 0, "*")])
add(2, 41, 4, [(1, "2/3", 4, 6, 0, ""), (5, "2", 4, 1, 1, "*"), (23, "8", 4, 1, 1, "*")])
add(2, 41, 10, [(1, "8/3", 4, 3, 0, "*"), (2, "4", 4, 1, 1, "*"), (5, "8", 4, 1, 1, "*")])
add(2, 41, 18, [(1, "16/3", 4, 3, 0, "*"), (2, "8", 4, 1, 1, "*"), (5, "16", 4, 1, 1, "*")])
add(2, 41, 25, [(1, "32/3", 4, 3, 0, ""), (2, "16", 4, 1, 1, "*")])
add(2, 41, 98, [(1, "32", 4, 1, 0, "*")])
add(2, 41, 100, [(1, "8/3", 4, 3, 0, "")])
add(2, 41, 180, [(1, "16/3", 4, 3, 0, "*"), (5, "16", 4, 1, 1, "*")])
add(2, 41, 980, [(1, "32", 4, 1, 0, "*")])
add(2, 60, 6, [(1, "2", 4, 1, 0, ""), (7, "8", 4, 1, 1, "*"), (49, "32", 4, 1, 2, "")])
add(2, 60, 15, [(1, "8", 4, 1, 0, "")])
add(2, 60, 51, [(1, "32", 4, 1, 0, "*")])
add(2, 60, 510, [(1, "32", 4, 1, 0, "*")])
add(2, 65, 4, [(1, "4/3", 4, 6, 0, ""), (5, "4", 4, 1, 1, ""), (7, "16/3", 4, 3, 1, "*"),
               (35, "16", 4, 1, 2, "*")])
add(2, 65, 10, [(1, "16/3", 4, 3, 0, "*"), (2, "8", 4, 1, 1, "*")])
add(2, 65, 14, [(1, "8", 4, 2, 0, "*")])
add(2, 65, 18, [(1, "32/3", 4, 3, 0, "*"), (2, "16", 4, 1, 1, "*")])
add(2, 65, 26, [(1, "16", 4, 1, 0, "*")])
add(2, 65, 35, [(1, "32", 4, 1, 0, "*")])
add(2, 65, 140, [(1, "8", 4, 1, 0, "*")])
add(2, 65, 180, [(1, "32/3", 4, 3, 0, "")])
add(2, 65, 252, [(1, "16", 4, 1, 0, "*")])
add(2, 65, 260, [(1, "16", 4, 1, 0, "")])
add(2, 65, 468, [(1, "32", 4, 1, 0, "")])
add(2, 69, 15, [(1, "8", 4, 1, 0, "*")])
add(2, 69, 51, [(1, "32", 4, 1, 0, "*")])
add(2, 145, 4, [(1, "16/3", 4, 6, 0, ""), (5, "16", 4, 1, 1, "")])
add(2, 145, 6, [(2, "16", 4, 1, 1, "*")])
add(2, 145, 36, [(1, "16/3", 4, 6, 0, ""), (5, "16", 4, 1, 1, "")])
add(2, 145, 60, [(1, "32/3", 4, 3, 0, "*")])
add(2, 161, 4, [(1, "16/3", 2, 6, 0, ""), (5, "16", 4, 1, 1, "*")])
add(2, 161, 140, [(1, "32", 4, 1, 0, "*")])

# ---------------------------------------------------------------- Table 2a
add(3, 49, 7, [(1, "1/7", 4, 14, 0, "*"), (13, "1", 4, 1, 1, "*"), (27, "2", 4, 1, 1, "*"),
               (223, "16", 4, 1, 1, "*")])
add(3, 49, 8, [(1, "1/6", 4, 6, 0, "*"), (7, "2/3", 4, 3, 1, "*")])
add(3, 49, 13, [(1, "2/7", 4, 7, 0, "*"), (7, "8/7", 4, 7, 1, "*"), (13, "2", 4, 1, 1, "*"),
                (27, "4", 4, 1, 1, "*"), (91, "8", 4, 1, 2, "*"), (189, "16", 4, 1, 2, "*")])
add(3, 49, 29, [(1, "2/3", 4, 3, 0, "*"), (7, "8/3", 4, 3, 1, "*")])
add(3, 49, 43, [(1, "1", 4, 2, 0, "*"), (7, "4", 4, 1, 1, "*")])
add(3, 49, 97, [(1, "16/7", 4, 7, 0, "*"), (13, "16", 4, 1, 1, "*")])
add(3, 49, 113, [(1, "8/3", 4, 3, 0, "*")])
add(3, 49, 337, [(1, "8", 4, 1, 0, "*")])
add(3, 49, 673, [(1, "16", 4, 1, 0, "*")])
add(3, 81, 3, [(1, "1/9", 4, 18, 0, "*"), (8, "1/2", 4, 1, 1, "*"), (17, "1", 4, 1, 1, "*"),
               (71, "4", 4, 1, 1, "*")])
add(3, 81, 17, [(1, "8/9", 4, 9, 0, "*"), (3, "16/9", 4, 9, 1, "*"), (8, "4", 4, 1, 1, "*"),
                (17, "8", 4, 1, 1, "*"), (24, "8", 4, 1, 2, "*"), (51, "16", 4, 1, 2, "*")])
add(3, 81, 19, [(1, "1", 4, 2, 0, "*"), (3, "2", 4, 1, 1, "*")])
add(3, 81, 37, [(1, "2", 4, 1, 0, "*"), (3, "4", 4, 1, 1, "*")])
add(3, 81, 73, [(1, "4", 4, 1, 0, "*"), (3, "8", 4, 1, 1, "*")])
add(3, 81, 969, [(1, "8", 4, 1, 0, "*")])
add(3, 148, 2, [(1, "1/6", 4, 6, 0, "*"), (5, "1/2", 4, 1, 1, "*"), (23, "2", 4, 1, 1, "*"),
                (31, "8/3", 4, 3, 1, "*"), (155, "8", 4, 1, 2, "*"), (191, "16", 4, 1, 1, "*")])
add(3, 148, 5, [(1, "2/3", 4, 3, 0, "*"), (2, "1", 4, 1, 1, "*"), (23, "8", 4, 1, 1, "*"),
                (62, "16", 4, 1, 2, "*")])
add(3, 148, 13, [(1, "2", 4, 1, 0, "*")])
add(3, 148, 17, [(1, "8/3", 4, 3, 0, "*"), (2, "4", 4, 1, 1, "*"), (5, "8", 4, 1, 1, "*")])
add(3, 148, 25, [(1, "4", 4, 1, 0, "*")])
add(3, 148, 97, [(1, "16", 4, 1, 0, "*")])
add(3, 148, 130, [(1, "2", 4, 1, 0, "*")])
add(3, 148, 170, [(1, "8/3", 4, 3, 0, "*")])
add(3, 148, 250, [(1, "4", 4, 1, 0, "*")])
add(3, 148, 442, [(1, "8", 4, 1, 0, "*")])
add(3, 148, 850, [(1, "16", 4, 1, 0, "*")])
add(3, 148, 970, [(1, "16", 4, 1, 0, "*")])
add(3, 169, 5, [(1, "2/3", 4, 3, 0, "*"), (5, "2", 4, 1, 1, "*"), (47, "16", 4, 1, 1, "*")])
add(3, 169, 13, [(1, "2", 4, 1, 0, "*")])
add(3, 169, 125, [(1, "8/3", 4, 3, 0, "*")])
add(3, 169, 325, [(1, "8", 4, 1, 0, "*")])
add(3, 229, 2, [(1, "1/3", 4, 6, 0, "*"), (7, "4/3", 4, 3, 1, "*"), (23, "4", 4, 1, 1, "*"),
                (31, "16/3", 4, 3, 1, "*"), (47, "8", 4, 1, 1, "*"), (161, "16", 4, 1, 2, "*")])
add(3, 229, 4, [(1, "1", 4, 2, 0, "*"), (7, "4", 4, 1, 1, "*"), (31, "16", 4, 1, 1, "*")])
add(3, 229, 7, [(1, "2", 4, 2, 0, "*")])
add(3, 229, 13, [(1, "4", 4, 1, 0, "*"), (7, "16", 4, 1, 1, "*")])
add(3, 229, 49, [(1, "16", 4, 1, 0, "*")])

# ---------------------------------------------------------------- Table 2b
add(3, 257, 3, [(1, "2/3", 4, 6, 0, "*"), (5, "2", 4, 1, 1, "*"), (7, "8/3", 4, 3, 1, "*"),
                (35, "8", 4, 1, 2, "*"), (47, "16", 4, 1, 1, "*")])
add(3, 257, 5, [(1, "4/3", 4, 3, 0, "*"), (3, "8/3", 4, 3, 1, "*"), (7, "16/3", 4, 3, 1, "*")])
add(3, 257, 7, [(1, "2", 4, 2, 0, "*"), (3, "4", 4, 1, 1, "*")])
add(3, 257, 9, [(1, "8/3", 4, 3, 0, "*"), (3, "16/3", 4, 3, 1, "*"), (5, "8", 4, 1, 1, "*"),
                (15, "16", 4, 1, 2, "*")])
add(3, 257, 25, [(1, "8", 4, 1, 0, "*"), (3, "16", 4, 1, 1, "*")])
add(3, 257, 49, [(1, "16", 4, 1, 0, "*")])
add(3, 257, 105, [(1, "4", 4, 1, 0, "*")])
add(3, 257, 135, [(1, "16/3", 4, 3, 0, "*")])
add(3, 257, 189, [(1, "8", 4, 1, 0, "*")])
add(3, 257, 315, [(1, "16", 4, 1, 0, "*")])
add(3, 257, 375, [(1, "16", 4, 1, 0, "*")])
add(3, 316, 2, [(1, "2/3", 4, 12, 0, "*"), (2, "1", 4, 1, 1, "*"), (11, "4", 4, 1, 1, "*"),
                (23, "8", 4, 1, 1, "*"), (62, "16", 4, 1, 2, "*")])
add(3, 316, 17, [(2, "16", 4, 1, 1, "*")])
add(3, 316, 68, [(1, "8/3", 4, 3, 0, "*"), (11, "16", 4, 1, 1, "*")])
add(3, 321, 3, [(1, "1", 4, 2, 0, "*"), (3, "2", 4, 1, 1, "*"), (7, "4", 4, 1, 1, "*")])
add(3, 697, 5, [(1, "16/3", 4, 3, 0, "*")])
add(3, 697, 13, [(1, "16", 4, 1, 0, "*")])
add(3, 837, 2, [(1, "8/3", 4, 6, 0, "*"), (3, "16/3", 4, 3, 1, "*"), (5, "8", 4, 1, 1, "*")])
add(3, 837, 3, [(2, "8", 4, 1, 1, "*"), (5, "16", 4, 1, 1, "*")])
add(3, 837, 4, [(1, "8", 4, 2, 0, "*"), (3, "16", 4, 1, 1, "*")])
add(3, 837, 5, [(2, "16", 4, 1, 1, "*")])
add(3, 837, 24, [(1, "4", 4, 2, 0, "*")])
add(3, 837, 30, [(1, "16/3", 4, 3, 0, "*")])
add(3, 837, 40, [(1, "8", 4, 1, 0, "*"), (3, "16", 4, 1, 1, "*")])
add(3, 837, 60, [(1, "16", 4, 1, 0, "*")])
add(3, 837, 78, [(1, "16", 4, 1, 0, "*")])
add(3, 1257, 3, [(1, "8", 4, 2, 0, "*"), (3, "16", 4, 1, 1, "*")])
add(3, 1396, 2, [(5, "16", 4, 1, 1, "*")])

# ---------------------------------------------------------------- Table 3a
add(4, 725, 1, [(1, "1/15", 4, 30, 0, "*"), (11, "2/5", 4, 5, 1, "*"), (19, "2/3", 4, 3, 1, "*"),
                (29, "1", 4, 1, 1, "*"), (31, "16/15", 4, 15, 1, "*"), (79, "8/3", 4, 3, 1, "*"),
                (209, "4", 4, 1, 2, "*"), (479, "16", 4, 1, 1, "*"), (869, "16", 4, 1, 2, "*"),
                (899, "16", 4, 1, 2, "*")])
add(4, 725, 275, [(1, "4", 4, 1, 0, "*")])
add(4, 725, 539, [(1, "8", 4, 1, 0, "*")])
add(4, 725, 1025, [(1, "16", 4, 1, 0, "*")])
add(4, 1125, 1, [(1, "2/15", 2, 30, 0, "*"), (5, "2/5", 4, 5, 1, "*"), (45, "2", 4, 1, 2, "*")])
add(4, 1125, 45, [(29, "16", 4, 1, 1, "*")])
add(4, 1125, 80, [(1, "2", 4, 1, 0, "*")])
add(4, 1125, 144, [(1, "4", 4, 1, 0, "*")])
add(4, 1125, 155, [(1, "4", 4, 1, 0, "*")])
add(4, 1125, 279, [(1, "8", 4, 1, 0, "*")])
add(4, 1125, 305, [(1, "8", 4, 1, 0, "*")])
add(4, 1125, 549, [(1, "16", 4, 1, 0, "*")])
add(4, 1125, 605, [(1, "16", 4, 1, 0, "")])
add(4, 1957, 1, [(1, "1/3", 4, 6, 0, "*"), (3, "2/3", 4, 3, 1, "*"), (7, "4/3", 4, 3, 1, "*"),
                 (21, "8/3", 4, 3, 2, "*"), (23, "4", 4, 1, 1, "*"), (31, "16/3", 4, 3, 1, "*"),
                 (47, "8", 4, 1, 1, "*"), (69, "8", 4, 1, 2, "*"), (141, "16", 4, 1, 2, "*"),
                 (161, "16", 4, 1, 2, "*")])
add(4, 1957, 21, [(1, "1", 4, 2, 0, "*"), (31, "16", 4, 1, 1, "*")])
add(4, 1957, 291, [(1, "16", 4, 1, 0, "*")])
add(4, 2000, 20, [(1, "1", 4, 1, 0, "")])
add(4, 2304, 18, [(1, "1", 4, 1, 0, "")])
add(4, 2777, 1, [(1, "2/3", 4, 6, 0, "*"), (2, "1", 4, 1, 1, "*"), (11, "4", 4, 1, 1, "*"),
                 (23, "8", 4, 1, 1, "*"), (47, "16", 4, 1, 1, "*"), (62, "16", 4, 1, 2, "*")])
add(4, 2777, 194, [(1, "16", 4, 1, 0, "*")])
add(4, 3600, 99, [(1, "16", 4, 1, 0, "*")])
add(4, 3981, 15, [(1, "2", 4, 1, 0, "*")])
add(4, 3981, 27, [(1, "4", 4, 1, 0, "*")])
add(4, 4225, 1, [(4, "8/3", 4, 3, 1, "*"), (9, "16/3", 4, 3, 1, "*"), (29, "16", 4, 1, 1, "*")])
add(4, 4225, 36, [(4, "16", 4, 1, 1, "*")])
add(4, 4352, 1, [(2, "2", 2, 1, 1, "*"), (7, "16/3", 4, 3, 1, "*"), (14, "8", 4, 1, 2, "*"),
                 (23, "16", 4, 1, 1, "*")])
add(4, 4352, 14, [(1, "2", 4, 1, 0, "*"), (7, "8", 4, 1, 1, "*")])
add(4, 4352, 34, [(1, "16/3", 2, 3, 0, "*")])
add(4, 4352, 98, [(1, "16", 2, 1, 0, "*")])
add(4, 4752, 1, [(1, "4/3", 2, 12, 0, "*"), (3, "8/3", 4, 3, 1, "*"), (11, "8", 4, 1, 1, ""),
                 (33, "16", 4, 1, 2, "*")])
add(4, 4752, 12, [(1, "2", 4, 1, 0, "*")])
add(4, 4752, 39, [(1, "8", 4, 1, 0, "*")])
add(4, 4913, 1, [(1, "4/3", 4, 6, 0, "*")])
add(4, 6809, 1, [(1, "8/3", 4, 6, 0, "*"), (2, "4", 4, 1, 1, "*"), (5, "8", 4, 1, 1, "*"),
                 (11, "16", 4, 1, 1, "*")])
add(4, 6809, 10, [(1, "8/3", 4, 3, 0, "*"), (11, "16", 4, 1, 1, "*")])

# ---------------------------------------------------------------- Table 3b
add(4, 7056, 1, [(3, "16/3", 4, 3, 1, "*"), (9, "32/3", 4, 3, 2, "")])
add(4, 7056, 12, [(1, "4", 4, 1, 0, ""), (3, "8", 4, 1, 1, "*")])
add(4, 7625, 20, [(1, "8", 4, 1, 0, "*")])
add(4, 8069, 1, [(1, "4/3", 4, 6, 0, "*", 1), (1, "8/3", 2, 6, 0, "*", 2), (5, "8", 4, 1, 1, "*", 2)])
add(4, 8069, 35, [(1, "16", 4, 1, 0, "*")])
add(4, 9248, 1, [(2, "8", 4, 4, 1, "")])
add(4, 9248, 4, [(1, "4/3", 4, 3, 0, "*")])
add(4, 9248, 26, [(1, "16", 4, 1, 0, "*")])
add(4, 9909, 15, [(1, "8", 4, 1, 0, "*")])
add(4, 10273, 1, [(2, "8", 4, 1, 1, "*"), (6, "16", 4, 1, 2, "*")])
add(4, 10273, 6, [(1, "8/3", 4, 6, 0, "*")])
add(4, 10273, 26, [(1, "16", 4, 1, 0, "*")])
add(4, 10889, 1, [(1, "8/3", 4, 6, 0, "*"), (2, "8", 4, 1, 0, "*"), (11, "16", 4, 1, 1, "*")])
add(4, 10889, 14, [(1, "8", 4, 2, 0, "*")])
add(4, 13068, 6, [(1, "4", 4, 1, 0, "*")])
add(4, 22676, 4, [(5, "16", 4, 1, 1, "*")])

# ---------------------------------------------------------------- Table 4
add(5, 24217, 5, [(1, "2/3", 4, 3, 0, "*"), (23, "8", 4, 1, 1, "*"), (47, "16", 4, 1, 1, "*")])
add(5, 24217, 17, [(1, "8/3", 4, 3, 0, "*"), (5, "8", 4, 1, 1, "*")])
add(5, 36497, 3, [(1, "2/3", 4, 6, 0, "*"), (23, "8", 4, 1, 1, "*"), (47, "16", 4, 1, 1, "*")])
add(5, 36497, 13, [(1, "4", 4, 1, 0, "*"), (3, "8", 4, 1, 1, "*")])
add(5, 36497, 25, [(1, "8", 4, 1, 0, "*"), (3, "16", 4, 1, 1, "*")])
add(5, 36497, 49, [(1, "16", 4, 1, 0, "*")])
add(5, 38569, 7, [(1, "2", 4, 2, 0, "*")])
add(5, 38569, 13, [(1, "4", 4, 1, 0, "*"), (7, "16", 4, 1, 1, "*")])
add(5, 38569, 17, [(1, "16/3", 4, 3, 0, "*")])
add(5, 81509, 2, [(1, "4/3", 4, 6, 0, "*")])
add(5, 81509, 9, [(2, "16", 4, 1, 1, "*")])
add(5, 81589, 2, [(1, "4/3", 4, 6, 0, "*"), (11, "8", 4, 1, 1, "*")])
add(5, 81589, 13, [(1, "16", 4, 1, 0, "*")])
add(5, 89417, 3, [(1, "8/3", 4, 6, 0, "*"), (5, "8", 4, 1, 1, "*"), (11, "16", 4, 1, 1, "*")])
add(5, 89417, 5, [(1, "16/3", 4, 3, 0, "*")])
add(5, 138917, 4, [(1, "8", 4, 2, 0, "*"), (3, "16", 4, 1, 1, "*")])

# ---------------------------------------------------------------- Table 5
add(6, 966125, 1, [(29, "16", 4, 1, 1, "*")])
add(6, 980125, 1, [(29, "16", 4, 1, 1, "*")])
add(6, 1134389, 1, [(1, "4/3", 4, 6, 0, "*", 1), (1, "8/3", 2, 6, 0, "*", 2)])


def main():
    out = Path(__file__).resolve().parents[1] / "src" / "fqlat" / "data" / "appendix_tables.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)
    lines = ["# degree\td\tD\tN\tclass\tvol_num\tvol_den\thind\tlcm\tnu\tst"]
    for degree, d, D, N, ci, vol, hind, lcm, nu, st in T:
        lines.append(
            "\t".join(
                str(x)
                for x in (degree, d, D, N, ci, vol.numerator, vol.denominator, hind, lcm, nu, st or "-")
            )
        )
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(T)} rows to {out}")


if __name__ == "__main__":
    main()
