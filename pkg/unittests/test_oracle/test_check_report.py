# -*- coding: utf-8 -*-
"""Module unittests.test_oracle.test_check_report.py

This module contains methods to test the check_report module via pytest.
"""

import pytest

from perm_closure.exceptions.automaton_exception import \
    AlphabetMismatchException
from perm_closure.expressions.ast import Shuffle
from perm_closure.fixtures import load_fixture
from perm_closure.oracle.check_report import CheckReport
from perm_closure.oracle.check_report import cross_check
from unittests.methods import fixture_atoms

atoms = fixture_atoms()
E, O = atoms["E"], atoms["O"]

def test_report_render():
    report = CheckReport("commutative")
    assert report.status == 2 and not report.passed
    report.set_status(1, "all transitions commute")
    assert report.render() == "PASS"
    report.set_status(0, "expression NOT compiled")
    assert report.render() == "SKIP: expression NOT compiled"
    report.set_status(-1, "delta(0, ab) != delta(0, ba)")
    assert report.render() == "FAIL: delta(0, ab) != delta(0, ba)"

def test_cross_check_pass():
    report = cross_check(Shuffle(E, O), load_fixture("odd_a"), 5)
    assert report.passed
    assert report.render() == "PASS"
    assert report.summary == "Parikh images agree up to length 5"
    assert report.counterexample is None

def test_cross_check_counterexample():
    """asserts the first disagreeing word and the side that accepts it"""

    report = cross_check(E, load_fixture("odd_a"), 3)
    assert report.status == -1
    assert report.render() == \
        "FAIL: counterexample ε psi=(0,0) accepted by expression only"
    assert report.expected_count == 6
    assert report.actual_count == 4

    report = cross_check(O, load_fixture("z3"), 0)
    assert report.render() == \
        "FAIL: counterexample ε psi=(0,0) accepted by automaton only"

    json = cross_check(E, load_fixture("odd_a"), 3).as_json()
    assert json["name"] == "cross_check"
    assert json["result"] == "FAILED"
    assert json["counterexample"] == ""
    assert json["psi"] == [0, 0]
    assert json["accepted_by"] == "expression"
    assert json["audit"] == ["expression: 8 words, 6 Parikh vectors",
                             "automaton: 7 words, 4 Parikh vectors"]

def test_cross_check_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchException) as e:
        cross_check(E, load_fixture("z3_unary"), 3)
    assert str(e.value) == "alphabet mismatch: expression uses {a b}, " \
        + "automaton uses {a}"
