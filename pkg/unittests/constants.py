# -*- coding: utf-8 -*-
"""Module unittests.constants.py

Constants shared by the unit tests. Paths are relative to the repository
root, the directory pytest is run from.
"""

DATA_DIR = "unittests/data/"
GRID_DIR = DATA_DIR + "grids/"
SETTINGS_DIR = DATA_DIR + "settings/"
AUTOMATA_DIR = DATA_DIR + "automata/"
EXPRESSIONS_DIR = DATA_DIR + "expressions/"

GOLDEN_AB_STAR_GRID = GRID_DIR + "ab_star_4x4.txt"
GOLDEN_EVEN_A = AUTOMATA_DIR + "even_a_canonical.aut"

SETTINGS_VALID = SETTINGS_DIR + "valid.yaml"
SETTINGS_SMALL_CAP = SETTINGS_DIR + "small_grid_cap.yaml"
SETTINGS_UNKNOWN_KEY = SETTINGS_DIR + "unknown_key.yaml"
SETTINGS_WRONG_TYPE = SETTINGS_DIR + "wrong_type.yaml"
SETTINGS_MALFORMED = SETTINGS_DIR + "malformed.yaml"
SETTINGS_EMPTY = SETTINGS_DIR + "empty.yaml"
SETTINGS_NOT_FOUND = SETTINGS_DIR + "file_not_found.yaml"

EXPR_RESIDUAL = EXPRESSIONS_DIR + "e_shuffle_o_iter.expr"
EXPR_BAD_SYNTAX = EXPRESSIONS_DIR + "bad_syntax.expr"
EXPR_NO_EXPR_LINE = EXPRESSIONS_DIR + "no_expr_line.expr"
EXPR_NOT_PERMUTATION = EXPRESSIONS_DIR + "ab_star_atom.expr"

# corpus sizes of the property suites
CORPUS_SIZE = 100
# pairs and triples drawn from the corpus for the shuffle bound
SHUFFLE_TUPLE_COUNT = 30
SIGMA_CORPUS_SIZE = 50

ORACLE_MAX_LEN = 7
ALGEBRA_MAX_LEN = 6
SIGMA_SUM_CAP = 5

FIXTURE_EXPRESSIONS = [
    "e",
    "o",
    "z",
    "e_concat_o",
    "e_shuffle_o",
    "o_iter",
    "e_or_o_iter",
    "e_concat_ostar",
    "e_shuffle_oiter_iter",
    "z_shuffle_z"
]

# minimal automaton size of the commutative closure of each fixture
# expression
FIXTURE_EXPRESSION_SIZES = {
    "e": 2,
    "o": 2,
    "z": 3,
    "e_concat_o": 2,
    "e_shuffle_o": 2,
    "o_iter": 3,
    "e_or_o_iter": 1,
    "e_concat_ostar": 1,
    "e_shuffle_oiter_iter": 1,
    "z_shuffle_z": 3
}
