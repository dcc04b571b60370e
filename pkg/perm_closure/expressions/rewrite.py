# -*- coding: utf-8 -*-
"""Module perm_closure.expressions.rewrite.py

This module rewrites shuffle expressions. perm_rewrite replaces concatenation
by shuffle and Kleene star by iterated shuffle, which keeps the commutative
closure. normal_form then applies language identities of shuffle innermost
first until a fixpoint, aiming at a finite union of terms

    L_1 @ ... @ L_m @ (L_(m+1) | ... | L_n)%

with group-language atoms L_i, and starred atoms merged into one atom
by the union product of their automata.

Identities used (U, V arbitrary):

* shuffle and union are associative and commutative, shuffle distributes
  over union
* (U%)% = U%
* (U | V)% = U% @ V%
* (U @ V%)% = (U @ (U | V)%) | ε
"""

import logging

from perm_closure.automata.constructions import minimize
from perm_closure.automata.constructions import union_product
from perm_closure.config.constants import DEFAULT_REWRITE_BUDGET
from perm_closure.config.constants import DEFAULT_ORACLE_CANDIDATE_CAP
from perm_closure.config.constants import DEFAULT_ORACLE_SET_CAP
from perm_closure.expressions.ast import Atom
from perm_closure.expressions.ast import Concat
from perm_closure.expressions.ast import Empty
from perm_closure.expressions.ast import Epsilon
from perm_closure.expressions.ast import IterShuffle
from perm_closure.expressions.ast import Shuffle
from perm_closure.expressions.ast import Star
from perm_closure.expressions.ast import Union
from perm_closure.expressions.ast import shuffle_of
from perm_closure.expressions.ast import union_of
from perm_closure.oracle.bounded import bounded_words
from perm_closure.exceptions.construction_exception import \
    RewriteBudgetException
from perm_closure.exceptions.construction_exception import \
    RewriteLoopException
from perm_closure.exceptions.expression_exception import ResidualException

def perm_rewrite(e):
    """expression without Concat and Star whose commutative closure is the
    same as e's"""

    if isinstance(e, Concat):
        return Shuffle([perm_rewrite(c) for c in e.children])
    if isinstance(e, Star):
        return IterShuffle(perm_rewrite(e.child))
    if isinstance(e, Union):
        return Union([perm_rewrite(c) for c in e.children])
    if isinstance(e, Shuffle):
        return Shuffle([perm_rewrite(c) for c in e.children])
    if isinstance(e, IterShuffle):
        return IterShuffle(perm_rewrite(e.child))
    return e

def merged_atom(atoms):
    """one atom for the union of several group-language atoms"""

    dfa = minimize(union_product([a.dfa for a in atoms]))
    return Atom("{" + "|".join(a.name for a in atoms) + "}", dfa)

def dedupe(children):
    seen = set()
    result = []
    for c in children:
        if c not in seen:
            seen.add(c)
            result.append(c)
    return result

def rule_union(e):
    children = []
    for c in e.children:
        if isinstance(c, Union):
            children.extend(c.children)
        elif not isinstance(c, Empty):
            children.append(c)
    children = dedupe(children)
    if list(children) == list(e.children):
        return None
    return "union-flatten", union_of(children)

def rule_shuffle(e):
    children = []
    for c in e.children:
        if isinstance(c, Shuffle):
            children.extend(c.children)
        elif isinstance(c, Empty):
            return "shuffle-empty", Empty()
        elif not isinstance(c, Epsilon):
            children.append(c)
    if children != list(e.children):
        return "shuffle-flatten", shuffle_of(children)

    for i, c in enumerate(children):
        if isinstance(c, Union):
            terms = [shuffle_of(children[:i] + [u] + children[i + 1:])
                     for u in c.children]
            return "shuffle-distribute", Union(terms)

    starred = [c for c in children
               if isinstance(c, IterShuffle) and isinstance(c.child, Atom)]
    if len(starred) >= 2:
        merged = IterShuffle(merged_atom([c.child for c in starred]))
        rest = [c for c in children if c not in starred]
        return "shuffle-merge-stars", shuffle_of(rest + [merged])
    return None

def rule_iter_shuffle(e):
    child = e.child
    if isinstance(child, (Empty, Epsilon)):
        return "iter-constant", Epsilon()
    if isinstance(child, IterShuffle):
        return "iter-idempotent", child
    if isinstance(child, Union):
        return "iter-union", Shuffle([IterShuffle(c) for c in child.children])
    if isinstance(child, Shuffle):
        starred = [c for c in child.children if isinstance(c, IterShuffle)]
        plain = [c for c in child.children if not isinstance(c, IterShuffle)]
        if not starred:
            return None
        if not plain:
            return "iter-of-stars", child
        if len(plain) == 1:
            u = plain[0]
            inner = union_of([u] + [s.child for s in starred])
            return "iter-shuffle-star", Union(
                Shuffle(u, IterShuffle(inner)), Epsilon())
    return None

RULES = {
    Union: rule_union,
    Shuffle: rule_shuffle,
    IterShuffle: rule_iter_shuffle
}

class Rewriter(object):
    """Innermost-first rewriting to a fixpoint

    Attributes:
        budget (int): maximum number of rule applications
        steps (int): rule applications so far
    """

    def __init__(self, budget=DEFAULT_REWRITE_BUDGET):
        self.budget = budget
        self.steps = 0

    def normalize(self, e):
        """rewrite children first, then the node itself until no rule applies

        Raises:
            RewriteBudgetException: more than budget rule applications
            RewriteLoopException: a rule reproduces a term seen at this node
        """

        if e.children:
            children = [self.normalize(c) for c in e.children]
            if children != list(e.children):
                e = type(e)(*children) if len(children) == 1 \
                    else type(e)(children)

        seen = {e}
        while True:
            rule = RULES.get(type(e))
            applied = rule(e) if rule else None
            if applied is None:
                return e
            name, result = applied
            self.steps += 1
            if self.steps > self.budget:
                raise RewriteBudgetException(
                    "normalization exceeded " + str(self.budget)
                    + " rule applications")
            logging.debug("rewrite %s: %s => %s" % (name, e, result))
            if result in seen:
                raise RewriteLoopException("rewrite loop at " + str(result))
            seen.add(result)
            e = self.normalize(result) if result.children else result

class Term(object):
    """L_1 @ ... @ L_m @ star%, one term of a normal form

    Attributes:
        atoms (tuple): plain atoms L_1 ... L_m
        star (Atom): the merged starred atom, or None
    """

    def __init__(self, atoms, star=None):
        self.atoms = tuple(atoms)
        self.star = star

    def to_expression(self):
        factors = list(self.atoms)
        if self.star is not None:
            factors.append(IterShuffle(self.star))
        return shuffle_of(factors)

    def __eq__(self, other):
        return isinstance(other, Term) and \
            (self.atoms, self.star) == (other.atoms, other.star)

    def __hash__(self):
        return hash((self.atoms, self.star))

    def __str__(self):
        return str(self.to_expression())

    def __repr__(self):
        return "Term(" + str(self) + ")"

class NormalForm(object):
    """finite union of terms; no terms denotes the empty language

    Attributes:
        terms (tuple): Term objects
    """

    def __init__(self, terms):
        self.terms = tuple(terms)

    def to_expression(self):
        return union_of(t.to_expression() for t in self.terms)

    def __eq__(self, other):
        return isinstance(other, NormalForm) and self.terms == other.terms

    def __str__(self):
        return str(self.to_expression())

    def __repr__(self):
        return "NormalForm(" + str(self) + ")"

def first_residual(e):
    """the first iterated shuffle whose argument is not an atom"""

    for node in e.nodes():
        if isinstance(node, IterShuffle) and not isinstance(node.child, Atom):
            return node
    return e

def to_term(e):
    if isinstance(e, Epsilon):
        return Term([])
    if isinstance(e, Atom):
        return Term([e])
    if isinstance(e, IterShuffle) and isinstance(e.child, Atom):
        return Term([], e.child)
    if isinstance(e, Shuffle):
        atoms = []
        star = None
        for c in e.children:
            if isinstance(c, Atom):
                atoms.append(c)
            elif isinstance(c, IterShuffle) and isinstance(c.child, Atom) \
                    and star is None:
                star = c.child
            else:
                raise ResidualException(first_residual(c))
        return Term(atoms, star)
    raise ResidualException(first_residual(e))

def normal_form(e, budget=DEFAULT_REWRITE_BUDGET):
    """normal form of an expression free of Concat and Star

    Raises:
        ResidualException: an iterated shuffle of a shuffle of two or more
            plain factors remains
        RewriteBudgetException, RewriteLoopException: rewriting did not settle
    """

    result = Rewriter(budget).normalize(e)
    if isinstance(result, Empty):
        return NormalForm([])
    terms = result.children if isinstance(result, Union) else (result,)
    nf = NormalForm([to_term(t) for t in terms])
    for term in nf.terms:
        logging.info("normal form term: %s" % term)
    return nf

def nf_semantics_bounded(nf, n, candidate_cap=DEFAULT_ORACLE_CANDIDATE_CAP,
                         set_cap=DEFAULT_ORACLE_SET_CAP):
    """words of length <= n denoted by the normal form

    Returns:
        (BoundedLanguage)
    """

    return bounded_words(nf.to_expression(), n, candidate_cap, set_cap)
