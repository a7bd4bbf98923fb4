"""Golden data transcribed from the published tables.

Tokens in ``RAYS``: ``t`` = tau, ``k`` = kappa = 1/tau, leading ``-`` negates.
Geometry is always derived first; these literals only pin the numbering and
serve as the reference for verification.
"""

RAYS: dict[int, str] = {
    1: "2 0 0 0", 2: "0 2 0 0", 3: "0 0 2 0", 4: "0 0 0 2",
    5: "1 1 1 1", 6: "1 1 -1 -1", 7: "1 -1 1 -1", 8: "1 -1 -1 1",
    9: "1 -1 -1 -1", 10: "1 -1 1 1", 11: "1 1 -1 1", 12: "1 1 1 -1",
    13: "k 0 -t -1", 14: "0 k 1 -t", 15: "t -1 k 0", 16: "1 t 0 k",
    17: "t k 0 -1", 18: "1 0 k t", 19: "k -t -1 0", 20: "0 1 -t k",
    21: "1 k t 0", 22: "t 0 -1 k", 23: "0 t -k -1", 24: "k -1 0 -t",
    25: "t 0 1 k", 26: "0 t -k 1", 27: "1 -k -t 0", 28: "k 1 0 -t",
    29: "0 k 1 t", 30: "t 1 -k 0", 31: "k 0 t -1", 32: "1 -t 0 k",
    33: "t -k 0 -1", 34: "0 1 -t -k", 35: "1 0 -k t", 36: "k t 1 0",
    37: "t 0 -1 -k", 38: "0 t k -1", 39: "1 -k t 0", 40: "k 1 0 t",
    41: "t 1 k 0", 42: "0 k -1 -t", 43: "1 -t 0 -k", 44: "k 0 -t 1",
    45: "0 1 t k", 46: "t -k 0 1", 47: "k t -1 0", 48: "1 0 k -t",
    49: "k 0 t 1", 50: "0 k -1 t", 51: "t -1 -k 0", 52: "1 t 0 -k",
    53: "1 0 -k -t", 54: "t k 0 1", 55: "0 1 t -k", 56: "k -t 1 0",
    57: "t 0 1 -k", 58: "1 k -t 0", 59: "k -1 0 t", 60: "0 t k 1",
}

# Basis table: 5 block-rows (A'..E') x 3 lines, each line holding the 5 blocks
# (A..E) of 4 rays.
BASIS_TABLE: tuple[str, ...] = (
    "1 2 3 4  31 42 51 16  22 60 39 28  57 23 27 40  44 29 15 52",
    "5 6 7 8  38 24 58 25  18 47 33 55  36 53 20 46  59 26 37 21",
    "9 10 11 12  56 45 17 35  13 32 50 41  43 49 30 14  34 19 48 54",
    "13 14 15 16  43 54 3 28  34 12 51 40  9 35 39 52  56 41 27 4",
    "17 18 19 20  50 36 10 37  30 59 45 7  48 5 32 58  11 38 49 33",
    "21 22 23 24  8 57 29 47  25 44 2 53  55 1 42 26  46 31 60 6",
    "25 26 27 28  55 6 15 40  46 24 3 52  21 47 51 4  8 53 39 16",
    "29 30 31 32  2 48 22 49  42 11 57 19  60 17 44 10  23 50 1 45",
    "33 34 35 36  20 9 41 59  37 56 14 5  7 13 54 38  58 43 12 18",
    "37 38 39 40  7 18 27 52  58 36 15 4  33 59 3 16  20 5 51 28",
    "41 42 43 44  14 60 34 1  54 23 9 31  12 29 56 22  35 2 13 57",
    "45 46 47 48  32 21 53 11  49 8 26 17  19 25 6 50  10 55 24 30",
    "49 50 51 52  19 30 39 4  10 48 27 16  45 11 15 28  32 17 3 40",
    "53 54 55 56  26 12 46 13  6 35 21 43  24 41 8 34  47 14 25 9",
    "57 58 59 60  44 33 5 23  1 20 38 29  31 37 18 2  22 7 36 42",
)

# DLP table: 10 rows, each of 3 text lines; every line holds 10 DLPs as
# (left, right) columns, so DLP j of a row is left-column triple + right-column triple.
DLP_TABLE: tuple[tuple[str, str, str], ...] = (
    ("3 16 2 13 1 14 4 15 25 28 35 36 31 29 32 30 33 34 27 26",
     "8 17 7 18 5 20 6 19 45 47 42 43 38 37 39 40 41 44 46 48",
     "10 24 12 22 9 23 11 21 51 50 58 57 56 54 55 53 60 59 49 52"),
    ("2 25 3 28 4 27 1 26 24 22 17 20 16 15 13 14 18 19 23 21",
     "6 31 5 32 7 30 8 29 42 41 38 40 45 48 47 46 39 37 43 44",
     "9 35 11 33 10 36 12 34 56 55 51 49 58 59 60 57 50 52 53 54"),
    ("1 38 4 39 3 40 2 37 17 18 16 14 24 21 22 23 13 15 20 19",
     "7 42 8 41 6 43 5 44 31 32 25 27 35 34 33 36 28 26 30 29",
     "11 45 9 47 12 46 10 48 58 60 56 53 51 52 50 49 55 54 57 59"),
    ("4 51 1 50 2 49 3 52 16 13 24 23 17 19 18 20 22 21 14 15",
     "5 56 6 55 8 53 7 54 35 33 31 30 25 26 28 27 32 29 36 34",
     "12 58 10 60 11 57 9 59 38 39 45 46 42 44 41 43 47 48 40 37"),
    ("15 28 14 25 13 26 16 27 3 2 10 9 8 6 7 5 12 11 1 4",
     "20 29 19 30 17 32 18 31 37 40 47 48 43 41 44 42 45 46 39 38",
     "22 36 24 34 21 35 23 33 57 59 54 55 50 49 51 52 53 56 58 60"),
    ("14 37 15 40 16 39 13 38 8 7 3 1 10 11 12 9 2 4 5 6",
     "18 43 17 44 19 42 20 41 36 34 29 32 28 27 25 26 30 31 35 33",
     "21 47 23 45 22 48 24 46 54 53 50 52 57 60 59 58 51 49 55 56"),
    ("13 50 16 51 15 52 14 49 10 12 8 5 3 4 2 1 7 6 9 11",
     "19 54 20 53 18 55 17 56 29 30 28 26 36 33 34 35 25 27 32 31",
     "23 57 21 59 24 58 22 60 43 44 37 39 47 46 45 48 40 38 42 41"),
    ("27 40 26 37 25 38 28 39 9 11 6 7 2 1 3 4 5 8 10 12",
     "32 41 31 42 29 44 30 43 15 14 22 21 20 18 19 17 24 23 13 16",
     "34 48 36 46 33 47 35 45 49 52 59 60 55 53 56 54 57 58 51 50"),
    ("26 49 27 52 28 51 25 50 6 5 2 4 9 12 11 10 3 1 7 8",
     "30 55 29 56 31 54 32 53 20 19 15 13 22 23 24 21 14 16 17 18",
     "33 59 35 57 34 60 36 58 48 46 41 44 40 39 37 38 42 43 47 45"),
    ("39 52 38 49 37 50 40 51 1 4 11 12 7 5 8 6 9 10 3 2",
     "44 53 43 54 41 56 42 55 21 23 18 19 14 13 15 16 17 20 22 24",
     "46 60 48 58 45 59 47 57 27 26 34 33 32 30 31 29 36 35 25 28"),
)

# DPP table: 6 rows, each of 5 text lines; each line has 6 DPPs as (left, right)
# columns; the left column read downward is one pentagon, the right its dual.
DPP_TABLE: tuple[tuple[str, ...], ...] = (
    ("1 4 2 3 5 7 6 8 9 10 11 12",
     "15 14 16 13 18 20 17 19 24 23 22 21",
     "56 55 54 53 59 58 57 60 50 52 51 49",
     "47 45 46 48 38 37 39 40 44 41 43 42",
     "30 29 32 31 36 33 34 35 27 25 26 28"),
    ("2 3 1 4 6 8 5 7 11 12 9 10",
     "43 44 41 42 47 46 45 48 40 38 37 39",
     "33 35 36 34 26 25 27 28 29 32 30 31",
     "17 18 19 20 24 21 22 23 13 15 16 14",
     "52 49 51 50 53 55 54 56 58 57 60 59"),
    ("5 6 7 8 9 12 10 11 1 3 2 4",
     "21 23 24 22 13 14 15 16 17 20 19 18",
     "31 32 29 30 34 35 33 36 28 26 27 25",
     "50 51 49 52 56 54 53 55 59 60 58 57",
     "40 37 39 38 43 41 42 44 46 45 47 48"),
    ("7 8 5 6 10 11 9 12 2 4 1 3",
     "26 27 25 28 32 30 29 31 36 35 33 34",
     "16 13 15 14 19 17 18 20 21 22 24 23",
     "41 42 43 44 45 48 46 47 39 37 40 38",
     "57 59 60 58 49 50 51 52 56 53 54 55"),
    ("9 11 10 12 1 2 3 4 5 8 6 7",
     "19 20 18 17 22 23 21 24 16 14 13 15",
     "38 39 40 37 44 42 41 43 47 48 45 46",
     "28 25 26 27 31 29 30 32 34 33 36 35",
     "53 54 56 55 57 60 58 59 49 51 52 50"),
    ("10 12 9 11 3 4 1 2 6 7 5 8",
     "34 36 33 35 27 28 25 26 30 31 29 32",
     "58 60 57 59 51 52 49 50 54 55 53 56",
     "22 24 21 23 15 16 13 14 18 19 17 20",
     "46 48 45 47 39 40 37 38 42 43 41 44"),
)

# Worked examples, as ray quadruples (order within a basis as printed).
TABLE3_BOLD = (
    "22 60 39 28", "57 23 27 40", "9 10 11 12", "34 12 51 40", "9 35 39 52",
    "21 22 23 24", "25 26 27 28", "42 11 57 19", "60 17 44 10", "41 42 43 44",
    "49 8 26 17", "19 25 6 50", "49 50 51 52", "6 35 21 43", "24 41 8 34",
)
TABLE3_PLAIN = (
    "1 2 3 4", "18 47 33 55", "36 53 20 46", "13 14 15 16", "30 59 45 7",
    "48 5 32 58", "29 30 31 32", "37 56 14 5", "7 13 54 38", "58 36 15 4",
    "33 59 3 16", "45 46 47 48", "53 54 55 56", "1 20 38 29", "31 37 18 2",
)

# Table 4: the 40-30 set after deleting DPPs 1 and 2, split by typeface.
TABLE4_PLAIN_BOLD = (
    "22 60 39 28", "57 23 27 40", "5 6 7 8", "21 22 23 24", "20 9 41 59",
    "58 43 12 18", "7 18 27 52", "20 5 51 28", "6 35 21 43", "24 41 8 34",
    "57 58 59 60",
)
TABLE4_BOLD_ITALIC = ("34 12 51 40", "9 35 39 52")
TABLE4_BOLD_UNDERLINED = (
    "9 10 11 12", "50 36 10 37", "11 38 49 33", "33 34 35 36", "37 38 39 40",
    "49 50 51 52",
)
TABLE4_PLAIN = (
    "38 24 58 25", "59 26 37 21", "17 18 19 20", "25 26 27 28", "42 11 57 19",
    "60 17 44 10", "41 42 43 44", "49 8 26 17", "19 25 6 50", "44 33 5 23",
    "22 7 36 42",
)
TABLE4_SQUARE = ("9 35 39 52", "12 34 40 51", "10 36 37 50", "11 33 38 49")

# Table 5: the 50-50 set after deleting DPP1, split by typeface.
TABLE5_PLAIN_BOLD = (
    "31 42 51 16", "9 10 11 12", "13 32 50 41", "9 35 39 52", "11 38 49 33",
    "60 17 44 10", "58 43 12 18", "33 59 3 16", "41 42 43 44", "35 2 13 57",
    "49 50 51 52", "32 17 3 40", "31 37 18 2",
)
TABLE5_BOLD_ITALIC = ("37 38 39 40", "57 58 59 60")
TABLE5_BOLD_UNDERLINED = (
    "22 60 39 28", "57 23 27 40", "38 24 58 25", "59 26 37 21", "21 22 23 24",
    "25 26 27 28",
)
TABLE5_SQUARE = ("37 38 39 40", "59 58 60 57", "21 24 22 23", "26 25 28 27")

# Table 6: two 50-25 proofs from the 50-50 set left after deleting DPP10.
TABLE6_BOLD = (
    "1 2 3 4", "31 42 51 16", "44 29 15 52", "38 24 58 25", "18 47 33 55",
    "36 53 20 46", "59 26 37 21", "9 10 11 12", "13 32 50 41", "43 49 30 14",
    "34 12 51 40", "9 35 39 52", "17 18 19 20", "8 57 29 47", "46 31 60 6",
    "37 38 39 40", "58 36 15 4", "33 59 3 16", "41 42 43 44", "14 60 34 1",
    "35 2 13 57", "32 21 53 11", "49 8 26 17", "19 25 6 50", "10 55 24 30",
)
TABLE6_PLAIN = (
    "13 14 15 16", "50 36 10 37", "11 38 49 33", "25 44 2 53", "55 1 42 26",
    "55 6 15 40", "46 24 3 52", "21 47 51 4", "8 53 39 16", "29 30 31 32",
    "42 11 57 19", "60 17 44 10", "33 34 35 36", "20 9 41 59", "58 43 12 18",
    "49 50 51 52", "19 30 39 4", "32 17 3 40", "26 12 46 13", "6 35 21 43",
    "24 41 8 34", "47 14 25 9", "57 58 59 60", "1 20 38 29", "31 37 18 2",
)

# Table 7: two 54-27 proofs from the 54-54 set left after deleting DLP
# (5 19 46)+(6 20 48).
TABLE7_BOLD = (
    "1 2 3 4", "31 42 51 16", "22 60 39 28", "44 29 15 52", "38 24 58 25",
    "18 47 33 55", "9 10 11 12", "56 45 17 35", "13 32 50 41", "43 49 30 14",
    "34 12 51 40", "50 36 10 37", "30 59 45 7", "21 22 23 24", "8 57 29 47",
    "25 26 27 28", "37 38 39 40", "7 18 27 52", "58 36 15 4", "33 59 3 16",
    "41 42 43 44", "14 60 34 1", "54 23 9 31", "35 2 13 57", "32 21 53 11",
    "49 8 26 17", "53 54 55 56",
)
TABLE7_PLAIN = (
    "57 23 27 40", "59 26 37 21", "13 14 15 16", "43 54 3 28", "9 35 39 52",
    "56 41 27 4", "11 38 49 33", "25 44 2 53", "55 1 42 26", "21 47 51 4",
    "8 53 39 16", "29 30 31 32", "60 17 44 10", "23 50 1 45", "33 34 35 36",
    "7 13 54 38", "58 43 12 18", "12 29 56 22", "10 55 24 30", "49 50 51 52",
    "45 11 15 28", "32 17 3 40", "24 41 8 34", "47 14 25 9", "57 58 59 60",
    "31 37 18 2", "22 7 36 42",
)

# Table 8: plain bases are shared, bold completes the 36-19, bold italic the 32-17.
TABLE8_PLAIN = (
    "1 2 3 4", "44 29 15 52", "38 24 58 25", "13 32 50 41", "13 14 15 16",
    "8 57 29 47", "25 44 2 53", "46 31 60 6", "29 30 31 32", "19 25 6 50",
    "19 30 39 4", "47 14 25 9", "57 58 59 60", "1 20 38 29",
)
TABLE8_BOLD = ("36 53 20 46", "9 35 39 52", "33 34 35 36", "33 59 3 16", "24 41 8 34")
TABLE8_BOLD_ITALIC = ("46 24 3 52", "8 53 39 16", "20 9 41 59")
