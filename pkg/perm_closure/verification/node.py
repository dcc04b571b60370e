# -*- coding: utf-8 -*-
"""Module perm_closure.verification.node.py

This module contains Node class, which represents and houses information for a
single check within the verification graph. A check is skipped when one of
its parents did not pass.
"""

import logging

from perm_closure.oracle.check_report import CheckReport

class Node():
    """Run a single verification check

    Attributes:
        kwargs (dict): check attributes from CHECKS_DICT (name, description,
            texts, function)
        label (int): used in graph algorithms to order the checks
        result (int): 0 indicates skipped, 1 indicates passed,
            -1 indicates failed and 2 is not yet run
        pass_text (str): text in the report when the check passed
        fail_text (str): text in the report when the check failed
        skip_text (str): text in the report when the check was skipped
        report (CheckReport): outcome of the check function
        description (str): description of the check
        parents (list): nodes this check depends on
        children (list): nodes depending on this check
    """

    def __init__(self, **kwargs):
        """instantiate a Node object

        Args:
            kwargs (dict): keyword arguments describing the check
        """

        self.kwargs = kwargs
        self.label = 0
        self.result = 2
        self.pass_text = kwargs.get("pass_text", "")
        self.fail_text = kwargs.get("fail_text", "")
        self.skip_text = kwargs.get("skip_text", "")
        self.report = None
        self.description = kwargs["description"]
        self.parents = []
        self.children = []

    def check_algorithm(self, runner):
        """run the check function, the base node passes unconditionally"""

        if self.kwargs["name"] == "base":
            self.result = 1
            return
        self.report = self.kwargs["function"](self, runner)
        self.result = self.report.status

    def __str__(self):
        return self.kwargs["name"]

    def generate_skip_text(self):
        """Generate text for skip message

        Names the parent checks that did not pass.

        Returns:
            (str): generated skip text for the check
        """

        text = str(self) + " is skipped because "
        text += ", ".join(p.to_echo() for p in self.parents if p.result != 1)
        return text

    def add_parent(self, parent):
        self.parents.append(parent)

    def add_child(self, child):
        """Add a child node to this node

        Args:
            child (Node): child node of this node in the graph
        """

        self.children.append(child)
        child.add_parent(self)

    def to_skip(self):
        """True if a parent check failed or was skipped"""

        for parent in self.parents:
            if parent.result != 1:
                logging.debug("%s - %s" % (str(parent), str(parent.result)))
                return True
        return False

    def run(self, runner):
        """Run the check unless a parent did not pass

        Args:
            runner (Runner): Runner instance this node belongs to
        """

        if self.to_skip():
            self.result = 0
            self.report = CheckReport(str(self), 0, self.generate_skip_text())
            return
        self.check_algorithm(runner)

    def to_echo(self):
        """text matching the check result"""

        if self.result == 1:
            return self.pass_text
        elif self.result == -1:
            return self.fail_text
        elif self.result == 2:
            return "Unknown error"
        if self.report is not None and self.report.summary:
            return self.report.summary
        return self.skip_text
