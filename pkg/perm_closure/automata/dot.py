# -*- coding: utf-8 -*-
"""Module perm_closure.automata.dot.py

This module renders a Dfa as a Graphviz DOT digraph through the Jinja2
template shipped in the templates directory.
"""

import inspect
import os

import jinja2 as j2

from perm_closure.config.constants import TEMPLATE_RELATIVE_DIR
from perm_closure.config.constants import TEMPLATE_FILE_DOT

def dot_edges(d):
    """one edge per (source, target) pair, labels joined in letter order"""

    labels = {}
    for s in d.states:
        for j, letter in enumerate(d.alphabet):
            labels.setdefault((s, d.table[s][j]), []).append(letter)
    return [{"source": s, "target": t, "label": ",".join(letters)}
            for (s, t), letters in sorted(labels.items())]

def to_dot(d, name="dfa"):
    """DOT text for d: a point node marks the start, finals are doubled

    Args:
        d (Dfa): automaton to render
        name (str): graph identifier

    Returns:
        (str): DOT digraph source
    """

    template_dir = os.path.join(
        os.path.dirname(os.path.dirname(inspect.getfile(to_dot))),
        TEMPLATE_RELATIVE_DIR)
    env = j2.Environment(loader=j2.FileSystemLoader(searchpath=template_dir),
                         trim_blocks=True, lstrip_blocks=True)
    template = env.get_template(TEMPLATE_FILE_DOT)
    states = [{"id": s, "final": s in d.finals} for s in d.states]
    return template.render(name=name, states=states, start=d.start,
                           edges=dot_edges(d))
