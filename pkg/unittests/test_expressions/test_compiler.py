# -*- coding: utf-8 -*-
"""Module unittests.test_expressions.test_compiler.py

This module contains methods to test the compiler module via pytest.
"""

import pytest

from perm_closure.automata.alphabet import Alphabet
from perm_closure.automata.constructions import epsilon_dfa
from perm_closure.automata.constructions import equivalent
from perm_closure.automata.constructions import is_commutative
from perm_closure.exceptions.automaton_exception import \
    NotPermutationException
from perm_closure.exceptions.expression_exception import ExpressionException
from perm_closure.expressions.ast import Atom
from perm_closure.expressions.ast import Concat
from perm_closure.expressions.ast import Empty
from perm_closure.expressions.ast import Epsilon
from perm_closure.expressions.ast import IterShuffle
from perm_closure.expressions.ast import Shuffle
from perm_closure.expressions.ast import Star
from perm_closure.expressions.ast import Union
from perm_closure.expressions.compiler import PATH_FALLBACK
from perm_closure.expressions.compiler import PATH_NORMAL_FORM
from perm_closure.expressions.compiler import compile_expression
from perm_closure.expressions.compiler import expression_nfa
from perm_closure.fixtures import load_fixture
from perm_closure.oracle.check_report import cross_check
from unittests.constants import FIXTURE_EXPRESSIONS
from unittests.constants import FIXTURE_EXPRESSION_SIZES
from unittests.constants import ORACLE_MAX_LEN
from unittests.methods import fixture_atoms
from unittests.methods import load_fixture_expression

atoms = fixture_atoms()
E, O, Z = atoms["E"], atoms["O"], atoms["Z"]
ab = Alphabet("ab")

def test_fixture_expressions():
    """asserts size, commutativity and oracle agreement of every fixture"""

    for name in FIXTURE_EXPRESSIONS:
        e = load_fixture_expression(name)
        result = compile_expression(e)
        assert result.path == PATH_NORMAL_FORM, name
        assert result.dfa.state_count == FIXTURE_EXPRESSION_SIZES[name], name
        assert is_commutative(result.dfa), name
        report = cross_check(e, result.dfa, ORACLE_MAX_LEN)
        assert report.passed, name + ": " + report.render()

def test_fallback_agrees():
    """asserts the expression NFA engine gives the same automata"""

    for name in FIXTURE_EXPRESSIONS:
        e = load_fixture_expression(name)
        assert equivalent(compile_expression(e).dfa,
                          compile_expression(e, force_fallback=True).dfa), \
            name

def test_residual_expression():
    """asserts the fallback handles a star over a shuffle of plain atoms"""

    e = IterShuffle(Shuffle(E, O))
    result = compile_expression(e)
    assert result.path == PATH_FALLBACK
    assert result.residual == e
    assert result.normal_form is None
    assert equivalent(result.dfa, compile_expression(IterShuffle(O)).dfa)
    assert cross_check(e, result.dfa, ORACLE_MAX_LEN).passed

    nested = Shuffle(Z, Star(Shuffle(E, O)))
    result = compile_expression(nested)
    assert result.path == PATH_FALLBACK
    assert is_commutative(result.dfa)
    assert cross_check(nested, result.dfa, ORACLE_MAX_LEN).passed

def test_constructions_recorded():
    result = compile_expression(load_fixture_expression("e_concat_ostar"))
    assert [c.kind for c in result.constructions] == ["perm", "iterstar"]
    assert [c.unminimized_size for c in result.constructions] == [8, 9]
    assert len(result.normal_form.terms) == 1

def test_constant_expressions():
    result = compile_expression(Epsilon(), alphabet=ab)
    assert equivalent(result.dfa, epsilon_dfa(ab))
    assert compile_expression(Shuffle(E, Empty())).dfa.finals == frozenset()
    with pytest.raises(ExpressionException):
        compile_expression(Epsilon())

def test_non_permutation_atom():
    with pytest.raises(NotPermutationException):
        compile_expression(Star(Atom("A", load_fixture("ab_star"))))

def test_expression_nfa():
    """asserts shuffle is read as concatenation and star is nullable"""

    nfa, root = expression_nfa(IterShuffle(Shuffle(E, O)), ab)
    assert nfa.state_count == 4
    assert root.nullable and nfa.accepts_empty
    assert nfa.accepts("a") and nfa.accepts("aab")
    assert not nfa.accepts("b")
    assert nfa.letter_core_is_permutation()

    nfa, root = expression_nfa(Epsilon(), ab)
    assert nfa is None and root.nullable

def test_no_minimize_reports_grid_automaton():
    """asserts only the reported automaton skips minimization"""

    single = compile_expression(E, minimize=False)
    assert single.dfa.state_count == 8
    assert single.dfa is single.constructions[0].grid_dfa
    assert equivalent(single.dfa, load_fixture("even_a"))

    nested = Concat(E, IterShuffle(IterShuffle(Z)),
                    IterShuffle(Shuffle(Union(O, O), Union(Z, O), Star(Z))))
    result = compile_expression(nested, minimize=False)
    assert all(c.dfa.state_count <= c.unminimized_size
               for c in result.constructions)
    assert equivalent(result.dfa, compile_expression(nested).dfa)
    assert cross_check(nested, result.dfa, ORACLE_MAX_LEN).passed
