# -*- coding: utf-8 -*-
"""Module perm_closure.config.graph.py

This module contains a single dictionary, which represents the parent-child
hierarchical relationship of all verification checks. Child checks are
skipped if parent checks fail. Each check name in the graph corresponds to a
check outlined in perm_closure.config.checks.py.

Attributes:
    VERIFY_GRAPH (dict): hierarchical graph of parent-child check relationships
        key: string of parent check name
        value: dictionary of child checks
"""

VERIFY_GRAPH = {
    "base": {
        "compile": {
            "cross_check": {},
            "commutativity": {},
            "size_bound": {},
            "pipeline_agreement": {}
        }
    }
}
"""dict: hierarchical graph of parent-child check relationships"""
