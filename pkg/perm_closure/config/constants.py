# -*- coding: utf-8 -*-
"""Module perm_closure.config.constants.py

This module contains definitions of project-wide constants for default
construction limits, schema and data file pointers, exit codes and check
statuses
"""

##################################################
# CONSTRUCTION LIMITS
##################################################

DEFAULT_GRID_CAP = 10 ** 7
DEFAULT_REWRITE_BUDGET = 10 ** 4
DEFAULT_MINIMIZE = True
DEFAULT_SHRINK_RAYS = False

##################################################
# ORACLE LIMITS
##################################################

# |Sigma^{<=9}| for a two-letter alphabet
DEFAULT_ORACLE_CANDIDATE_CAP = 1023
DEFAULT_ORACLE_SET_CAP = 10 ** 6
DEFAULT_BRUTEFORCE_SUM_CAP = 6
DEFAULT_VERIFY_MAX_LEN = 7

##################################################
# RANDOMNESS
##################################################

DEFAULT_SEED = 0

##################################################
# SETTINGS
##################################################

DEFAULT_SETTINGS = {
    "grid": {
        "cap": DEFAULT_GRID_CAP,
        "shrink_rays": DEFAULT_SHRINK_RAYS
    },
    "minimize": DEFAULT_MINIMIZE,
    "rewrite": {
        "step_budget": DEFAULT_REWRITE_BUDGET
    },
    "oracle": {
        "candidate_cap": DEFAULT_ORACLE_CANDIDATE_CAP,
        "set_cap": DEFAULT_ORACLE_SET_CAP,
        "max_len": DEFAULT_VERIFY_MAX_LEN
    }
}

##################################################
# JSON SCHEMAS
##################################################

SCHEMA_RELATIVE_DIR = "schemas"
SCHEMA_FILE_SETTINGS = "settings.json"

##################################################
# DATA FILES
##################################################

TEMPLATE_RELATIVE_DIR = "templates"
TEMPLATE_FILE_DOT = "dfa.dot.j2"
FIXTURES_RELATIVE_DIR = "data/fixtures"
FIXTURE_SUFFIX = ".aut"
FIXTURE_NAMES = ["even_a", "odd_a", "z3", "z3_unary", "ab_star", "s3"]
EXPRESSIONS_RELATIVE_DIR = "data/expressions"
EXPRESSION_SUFFIX = ".expr"

##################################################
# EXIT CODES
##################################################

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3

##################################################
# STATUS
##################################################

CHECK_STATUS_DICT = {
    1: "PASSED",
    0: "SKIPPED",
    -1: "FAILED",
    2: "UNKNOWN ERROR"
}

##################################################
# OTHER
##################################################

EMPTY_WORD_DISPLAY = "ε"
