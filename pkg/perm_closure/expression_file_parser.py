# -*- coding: utf-8 -*-
"""Module perm_closure.expression_file_parser.py

This module contains class definition for ExpressionFileParser, which reads
an expression file: header lines binding atom names to automaton files
(paths relative to the expression file), then one expression line::

    atom E = ../fixtures/even_a.aut
    atom O = ../fixtures/odd_a.aut
    expr: E . O*

Atoms given on the command line as NAME=path override the header.
"""

import os
import re

from perm_closure.automaton_parser import load_automaton
from perm_closure.exceptions.argument_exception import ArgumentException
from perm_closure.exceptions.expression_exception import ExpressionException
from perm_closure.expressions.parser import parse

ATOM_LINE = re.compile(r"^atom\s+([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\S.*?)\s*$")
EXPR_LINE = re.compile(r"^expr\s*:\s*(.*?)\s*$")
ATOM_OPTION = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)=(.+)$")

def parse_atom_options(options):
    """NAME=path strings to a name -> path dictionary

    Raises:
        ArgumentException: an option does not have the NAME=path form
    """

    paths = {}
    for option in options or ():
        match = ATOM_OPTION.match(option)
        if not match:
            raise ArgumentException("--atom expects NAME=path, got "
                                    + repr(option))
        paths[match.group(1)] = match.group(2)
    return paths

class ExpressionFileParser(object):
    """Parses an expression file and loads its atoms

    Attributes:
        expression_file (str): path to the expression file
        atom_overrides (dict): name -> automaton path from the command line
        atom_paths (dict): name -> resolved automaton path
        text (str): expression text
        expression (ShuffleExpr): parsed expression
    """

    def __init__(self, expression_file, atom_overrides=None):
        self.expression_file = expression_file
        self.atom_overrides = dict(atom_overrides or {})
        self.atom_paths = {}
        self.text = None
        self.expression = None

    def parse_expression_file(self):
        """read header and expression, load atoms, parse the expression

        Raises:
            FileNotFoundError: expression or automaton file missing
            ExpressionException: malformed file or expression
            AutomatonParseException: malformed atom automaton
        """

        try:
            with open(self.expression_file, "r") as expr_file:
                lines = expr_file.read().splitlines()
        except FileNotFoundError:
            raise FileNotFoundError("expression file: " + self.expression_file
                                    + " not found")

        base_dir = os.path.dirname(os.path.abspath(self.expression_file))
        for number, raw in enumerate(lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            atom_match = ATOM_LINE.match(line)
            expr_match = EXPR_LINE.match(line)
            if atom_match:
                if self.text is not None:
                    raise ExpressionException(
                        "line " + str(number) + ": atom after expression")
                self.atom_paths[atom_match.group(1)] = os.path.join(
                    base_dir, atom_match.group(2))
            elif expr_match:
                if self.text is not None:
                    raise ExpressionException(
                        "line " + str(number) + ": second expression line")
                self.text = expr_match.group(1)
            else:
                raise ExpressionException("line " + str(number) + ": expected "
                                          + "'atom NAME = path' or 'expr: ...'")
        if self.text is None:
            raise ExpressionException("expression file "
                                      + self.expression_file
                                      + " has no 'expr:' line")

        self.atom_paths.update(self.atom_overrides)
        atom_table = {name: load_automaton(path)
                      for name, path in self.atom_paths.items()}
        self.expression = parse(self.text, atom_table)
        return self.expression

def load_expression(expression_file, atom_overrides=None):
    return ExpressionFileParser(expression_file,
                                atom_overrides).parse_expression_file()
