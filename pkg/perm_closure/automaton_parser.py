# -*- coding: utf-8 -*-
"""Module perm_closure.automaton_parser.py

This module contains class definition for AutomatonParser, which reads the
line-oriented automaton file format into a Dfa, and the canonical serializer
writing it back. Incomplete transition tables are rejected, never completed.

File format ('#' starts a comment, fields are whitespace-separated)::

    alphabet: a b
    states: 2
    start: 0
    finals: 0
    a: 1 0
    b: 0 1
"""

from perm_closure.automata.alphabet import Alphabet
from perm_closure.automata.constructions import canonicalize
from perm_closure.automata.dfa import Dfa
from perm_closure.exceptions.automaton_exception import AutomatonException
from perm_closure.exceptions.automaton_exception import \
    AutomatonParseException

HEADER_KEYS = ["alphabet", "states", "start", "finals"]

def parse_int(value, line_number, what):
    try:
        return int(value)
    except ValueError:
        raise AutomatonParseException(what + " must be an integer, got "
                                      + repr(value), line_number)

class AutomatonParser(object):
    """Parses an automaton file into a Dfa

    Attributes:
        automaton_file (str): path to the automaton file
        d (Dfa): parsed automaton, None until parse_automaton_file is called
    """

    def __init__(self, automaton_file):
        self.automaton_file = automaton_file
        self.d = None

    def parse_automaton_file(self):
        """load and parse the file

        Raises:
            FileNotFoundError: the file does not exist
            AutomatonParseException: the file does not match the format
        """

        try:
            with open(self.automaton_file, "r") as aut_file:
                text = aut_file.read()
        except FileNotFoundError:
            raise FileNotFoundError("automaton file: " + self.automaton_file
                                    + " not found")
        self.d = parse_automaton(text)
        return self.d

def significant_lines(text):
    """(line number, content) pairs with comments and blank lines removed"""

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line

def parse_automaton(text):
    """parse automaton text into a Dfa

    Raises:
        AutomatonParseException: malformed header, missing or duplicate letter
            rows, wrong row width, or targets out of range
    """

    lines = list(significant_lines(text))
    if len(lines) < len(HEADER_KEYS):
        raise AutomatonParseException("expected header lines "
                                      + ", ".join(HEADER_KEYS))

    header = {}
    for (number, line), key in zip(lines, HEADER_KEYS):
        name, sep, value = line.partition(":")
        if sep != ":" or name.strip() != key:
            raise AutomatonParseException("expected '" + key + ":'", number)
        header[key] = (number, value.split())

    number, letters = header["alphabet"]
    try:
        alphabet = Alphabet(letters)
    except AutomatonException as e:
        raise AutomatonParseException(str(e), number)

    number, values = header["states"]
    if len(values) != 1:
        raise AutomatonParseException("expected a single state count", number)
    state_count = parse_int(values[0], number, "state count")
    if state_count < 1:
        raise AutomatonParseException("state count must be positive", number)

    number, values = header["start"]
    if len(values) != 1:
        raise AutomatonParseException("expected a single start state", number)
    start = parse_int(values[0], number, "start state")

    number, values = header["finals"]
    finals = [parse_int(v, number, "final state") for v in values]

    rows = {}
    for number, line in lines[len(HEADER_KEYS):]:
        letter, sep, value = line.partition(":")
        letter = letter.strip()
        if sep != ":":
            raise AutomatonParseException("expected '<letter>: targets'",
                                          number)
        if letter not in alphabet:
            raise AutomatonParseException("letter " + repr(letter)
                                          + " not in alphabet", number)
        if letter in rows:
            raise AutomatonParseException("duplicate row for letter "
                                          + letter, number)
        targets = [parse_int(v, number, "target") for v in value.split()]
        if len(targets) != state_count:
            raise AutomatonParseException(
                "letter " + letter + " has " + str(len(targets))
                + " targets, expected " + str(state_count), number)
        rows[letter] = targets

    missing = [letter for letter in alphabet if letter not in rows]
    if missing:
        raise AutomatonParseException("incomplete transition table, no row "
                                      + "for letter(s) " + " ".join(missing))

    table = [[rows[letter][s] for letter in alphabet]
             for s in range(state_count)]
    try:
        return Dfa(alphabet, state_count, table, start, finals)
    except AutomatonException as e:
        raise AutomatonParseException(str(e))

def serialize_automaton(d):
    """canonical text: BFS-from-start numbering, finals ascending"""

    d = canonicalize(d)
    lines = [
        "alphabet: " + str(d.alphabet),
        "states: " + str(d.state_count),
        "start: " + str(d.start),
        ("finals: " + " ".join(str(f) for f in sorted(d.finals))).rstrip()
    ]
    for j, letter in enumerate(d.alphabet):
        lines.append(letter + ": " + " ".join(str(t) for t in d.column(j)))
    return "\n".join(lines) + "\n"

def load_automaton(path):
    return AutomatonParser(path).parse_automaton_file()

def write_automaton(d, path):
    with open(path, "w") as aut_file:
        aut_file.write(serialize_automaton(d))
