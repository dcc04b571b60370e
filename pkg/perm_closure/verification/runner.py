# -*- coding: utf-8 -*-
"""Module perm_closure.verification.runner.py

This module contains Runner class, which builds the verification graph for
one expression from perm_closure.config.graph.VERIFY_GRAPH and runs it,
parents before children.
"""

import datetime
import logging

from perm_closure.config.checks import CHECKS_DICT
from perm_closure.config.constants import CHECK_STATUS_DICT
from perm_closure.config.constants import DEFAULT_SETTINGS
from perm_closure.config.constants import DEFAULT_VERIFY_MAX_LEN
from perm_closure.config.graph import VERIFY_GRAPH
from perm_closure.verification.node import Node

class Runner():
    """Runs all verification checks for one expression

    Attributes:
        expression (ShuffleExpr): expression under verification
        settings (dict): merged settings
        max_len (int): oracle length cap
        result (CompileResult): set by the compile check
        base (Node): root of the check graph
        nodes (dict): check name -> Node
        total_checks (int): number of checks, the base excluded
        total_checks_passed (int)
        total_checks_failed (int)
        total_checks_skipped (int)
    """

    def __init__(self, expression, settings=None,
                 max_len=DEFAULT_VERIFY_MAX_LEN):
        self.expression = expression
        self.settings = settings if settings is not None else DEFAULT_SETTINGS
        self.max_len = max_len
        self.result = None
        self.base = None
        self.nodes = {}
        self.total_checks = 0
        self.total_checks_passed = 0
        self.total_checks_failed = 0
        self.total_checks_skipped = 0

    def initiate_checks(self):
        """create nodes for every check and link them as in VERIFY_GRAPH

        Returns:
            (Node): base node of the graph
        """

        self.base = Node(name="base", description="root node on which to "
                         + "base the check graph")
        self.nodes = {"base": self.base}

        def add_children(subtree, parent_key):
            for child_key in subtree[parent_key].keys():
                if child_key not in self.nodes:
                    self.nodes[child_key] = Node(**CHECKS_DICT[child_key])
                self.nodes[parent_key].add_child(self.nodes[child_key])
                if len(subtree[parent_key][child_key]) > 0:
                    add_children(subtree[parent_key], child_key)

        add_children(VERIFY_GRAPH, "base")
        self.total_checks = len(self.nodes) - 1
        return self.base

    def recurse_label_checks(self, root):
        """label nodes so that parents are always run before children"""

        label = root.label + 1
        for child in root.children:
            if label > child.label:
                child.label = label
            if len(child.children) != 0:
                self.recurse_label_checks(child)

    def ordered_nodes(self):
        return sorted((n for k, n in self.nodes.items() if k != "base"),
                      key=lambda n: n.label)

    def run_checks(self):
        """run the whole graph, logging one dotted status line per check"""

        self.initiate_checks()
        self.base.run(self)
        self.recurse_label_checks(self.base)
        longest = max(len(name) for name in CHECKS_DICT.keys())
        for node in self.ordered_nodes():
            node.run(self)
            dots = "." * (longest - len(str(node))) + "..."
            logging.info(str(node) + dots + CHECK_STATUS_DICT[node.result])
            if node.result == 1:
                self.total_checks_passed += 1
            elif node.result == -1:
                self.total_checks_failed += 1
            else:
                self.total_checks_skipped += 1

    @property
    def passed(self):
        return self.total_checks_failed == 0

    def generate_final_json(self):
        """report object for this verification session

        Returns:
            (dict): check results and totals
        """

        return {
            "expression": str(self.expression),
            "max_len": self.max_len,
            "date_time": str(datetime.datetime.now()),
            "path": self.result.path if self.result else None,
            "check_results": [
                dict(node.report.as_json(),
                     description=node.description,
                     text=node.to_echo(),
                     parents=[str(p) for p in node.parents],
                     children=[str(c) for c in node.children])
                for node in self.ordered_nodes()
            ],
            "total_checks": self.total_checks,
            "total_checks_passed": self.total_checks_passed,
            "total_checks_failed": self.total_checks_failed,
            "total_checks_skipped": self.total_checks_skipped
        }
