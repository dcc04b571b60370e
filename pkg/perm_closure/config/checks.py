# -*- coding: utf-8 -*-
"""Module perm_closure.config.checks.py

This module contains all verification checks as a dictionary. Each value is
passed to a Node, each key is the check name used in
perm_closure.config.graph.py.

Attributes:
    CHECKS_DICT (dict): attributes of every verification check
"""

import perm_closure.functions.verification as vf

CHECKS_DICT = {
    "compile": {
        "name": "compile",
        "description": "Compiles the expression to an automaton for its "
            + "commutative closure",
        "pass_text": "expression compiled",
        "fail_text": "expression NOT compiled",
        "skip_text": "compilation skipped",
        "function": vf.check_compile
    },

    "cross_check": {
        "name": "cross_check",
        "description": "Compares Parikh images of the compiled automaton "
            + "and of the brute-force bounded language",
        "pass_text": "compiled automaton agrees with the bounded oracle",
        "fail_text": "compiled automaton DISAGREES with the bounded oracle",
        "skip_text": "oracle comparison skipped",
        "function": vf.check_cross
    },

    "commutativity": {
        "name": "commutativity",
        "description": "Checks delta(q, ab) = delta(q, ba) for every state "
            + "and letter pair of the compiled automaton",
        "pass_text": "compiled automaton is commutative",
        "fail_text": "compiled automaton is NOT commutative",
        "skip_text": "commutativity check skipped",
        "function": vf.check_commutativity
    },

    "size_bound": {
        "name": "size_bound",
        "description": "Checks every grid automaton against its state bound",
        "pass_text": "all grid automata within their bounds",
        "fail_text": "a grid automaton EXCEEDS its bound",
        "skip_text": "size bound check skipped",
        "function": vf.check_size_bound
    },

    "pipeline_agreement": {
        "name": "pipeline_agreement",
        "description": "Compiles again through the expression NFA engine and "
            + "checks both automata are equivalent",
        "pass_text": "normal-form and fallback pipelines agree",
        "fail_text": "normal-form and fallback pipelines DISAGREE",
        "skip_text": "pipeline agreement skipped",
        "function": vf.check_pipeline_agreement
    }
}
